#include "kloospath/gallery.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "kloospath/fourier.hpp"

namespace kloospath {

namespace {

constexpr double kPi = std::numbers::pi;
// sup_x |J1(x)| = 0.58186522..., rounded up.
constexpr double kJ1Max = 0.5818653;

double dist_to_int(double x) { return std::abs(x - std::nearbyint(x)); }

// Linear sieve of mu or lambda on 1..n (index 0 unused).
std::vector<int> arith_table(int n, ArithWeight w) {
  std::vector<int> value(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> primes;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  if (n >= 1) value[1] = 1;
  for (int i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      value[i] = -1;
    }
    for (const int q : primes) {
      const long long iq = static_cast<long long>(i) * q;
      if (iq > n) break;
      composite[iq] = true;
      if (i % q == 0) {
        value[iq] = w == ArithWeight::Mobius ? 0 : -value[i];
        break;
      }
      value[iq] = -value[i];
    }
  }
  return value;
}

cplx davenport_sum(double t, const std::vector<int>& weights) {
  cplx acc = 0.0;
  const cplx step = std::polar(1.0, 2.0 * kPi * t);
  cplx rot = 1.0;
  for (std::size_t h = 1; h < weights.size(); ++h) {
    rot *= step;
    // Renormalize occasionally so the running phase stays on the circle.
    if (h % 64 == 0) rot = std::polar(1.0, 2.0 * kPi * std::fmod(static_cast<double>(h) * t, 1.0));
    if (weights[h] != 0) acc += static_cast<double>(weights[h]) * (rot - 1.0) / cplx(0.0, 2.0 * kPi * static_cast<double>(h));
  }
  return acc;
}

bool is_square(long long h) {
  const long long a = std::llabs(h);
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(a)));
  while (r * r > a) --r;
  while ((r + 1) * (r + 1) <= a) ++r;
  return r * r == a;
}

constexpr int kDavenportTerms = 4096;

double parse_param(const std::string& text, const std::string& id) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
    throw std::invalid_argument("gallery: bad parameter '" + text + "' for " + id);
  }
  return v;
}

}  // namespace

double takagi(double t, int terms) {
  if (terms < 1) throw std::invalid_argument("takagi: terms must be >= 1");
  double acc = 0.0;
  double scale = 1.0;
  double x = t;
  for (int j = 0; j < terms; ++j) {
    acc += dist_to_int(x) * scale;
    x *= 2.0;
    x -= std::floor(x);
    scale *= 0.5;
  }
  return acc;
}

double riemann_rho(double t, int terms) {
  if (terms < 1) throw std::invalid_argument("riemann_rho: terms must be >= 1");
  double acc = 0.0;
  for (int n = terms; n >= 1; --n) {
    const double n2 = static_cast<double>(n) * n;
    const double turns = std::fmod(n2 * t, 2.0);
    acc += std::sin(kPi * turns) / (kPi * n2);
  }
  return acc;
}

double cantor(double t, int iterations) {
  if (iterations < 1) throw std::invalid_argument("cantor: iterations must be >= 1");
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  double acc = 0.0;
  double scale = 0.5;
  for (int i = 0; i < iterations; ++i) {
    t *= 3.0;
    const double d = std::floor(t);
    t -= d;
    if (d == 1.0) return acc + scale;
    if (d == 2.0) acc += scale;
    scale *= 0.5;
  }
  return acc;
}

int mobius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
  int sign = 1;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    n /= q;
    if (n % q == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

int liouville(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("liouville: n must be >= 1");
  int sign = 1;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    while (n % q == 0) {
      n /= q;
      sign = -sign;
    }
  }
  return n > 1 ? -sign : sign;
}

cplx davenport(double t, int terms, ArithWeight w) {
  if (terms < 1) throw std::invalid_argument("davenport: terms must be >= 1");
  return davenport_sum(t, arith_table(terms, w));
}

double bessel_j1(double x) {
  // J1 is odd; the library routine only takes x >= 0.
  return x < 0.0 ? -std::cyl_bessel_j(1.0, -x) : std::cyl_bessel_j(1.0, x);
}

cplx semicircle_coeff(Semicircle variant, double alpha, long long h) {
  if (h == 0) throw std::invalid_argument("semicircle_coeff: h must be nonzero");
  const double hd = static_cast<double>(h);
  if (variant == Semicircle::Sqrt) {
    const double sign = (h % 2 == 0) ? 1.0 : -1.0;
    return cplx(0.0, std::abs(alpha) * sign * bessel_j1(kPi * hd) / (2.0 * hd));
  }
  const cplx i_pi(0.0, kPi);
  return alpha * (1.0 / (i_pi * hd) - 1.0 / (i_pi * (hd + 0.5)));
}

std::vector<int> hilbert_delta(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("hilbert_delta: level must be in [1, 8]");
  std::vector<int> d{1, 0, 0, 3};
  for (int level = 1; level < n; ++level) {
    std::vector<int> next(d.size() * 4);
    for (std::size_t j = 0; j < d.size(); ++j) {
      next[4 * j] = ((1 - d[j]) % 4 + 4) % 4;
      next[4 * j + 1] = d[j];
      next[4 * j + 2] = d[j];
      next[4 * j + 3] = ((3 - d[j]) % 4 + 4) % 4;
    }
    d = std::move(next);
  }
  return d;
}

namespace {

std::vector<cplx> hilbert_steps(int n) {
  static const cplx powers[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  const auto d = hilbert_delta(n);
  const double len = std::ldexp(1.0, -n);
  std::vector<cplx> steps(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) steps[j] = len * powers[d[j]];
  return steps;
}

}  // namespace

PolyPath hilbert_path(int n) {
  const auto steps = hilbert_steps(n);
  std::vector<cplx> z(steps.size() + 1, cplx(0.0));
  for (std::size_t j = 0; j < steps.size(); ++j) z[j + 1] = z[j] + steps[j];
  return PolyPath(std::move(z));
}

cplx hilbert_tilde(int n, long long h) {
  if (h == 0) throw std::invalid_argument("hilbert_tilde: h must be nonzero");
  return tilde_naive(hilbert_steps(n), h);
}

GalleryItem parse_gallery_id(const std::string& text) {
  std::string id = text;
  std::string arg;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    id = text.substr(0, colon);
    arg = text.substr(colon + 1);
  }
  std::transform(id.begin(), id.end(), id.begin(), [](unsigned char c) { return std::tolower(c); });
  GalleryItem item;
  const auto need_param = [&](double def) {
    return arg.empty() ? def : parse_param(arg, id);
  };
  const auto no_param = [&] {
    if (!arg.empty()) throw std::invalid_argument("gallery: " + id + " takes no parameter");
  };
  if (id == "line") {
    item.id = GalleryId::Line;
    item.param = need_param(1.0);
  } else if (id == "parabola") {
    item.id = GalleryId::Parabola;
    item.param = need_param(1.0);
  } else if (id == "semicircle-sqrt") {
    item.id = GalleryId::SemicircleSqrt;
    item.param = need_param(1.0);
  } else if (id == "semicircle-trig") {
    item.id = GalleryId::SemicircleTrig;
    item.param = need_param(1.0);
  } else if (id == "takagi") {
    no_param();
    item.id = GalleryId::TakagiGraph;
  } else if (id == "riemann") {
    no_param();
    item.id = GalleryId::RiemannGraph;
  } else if (id == "cantor") {
    no_param();
    item.id = GalleryId::Cantor;
  } else if (id == "davenport") {
    no_param();
    item.id = GalleryId::Davenport;
  } else if (id == "liouville") {
    no_param();
    item.id = GalleryId::LiouvilleVariant;
  } else if (id == "hilbert") {
    item.id = GalleryId::HilbertApprox;
    const double level = need_param(1.0);
    if (level != std::floor(level) || level < 1 || level > 8) {
      throw std::invalid_argument("gallery: hilbert level must be an integer in [1, 8]");
    }
    item.level = static_cast<int>(level);
  } else {
    throw std::invalid_argument("gallery: unknown id '" + text + "'");
  }
  return item;
}

std::vector<std::string> gallery_ids() {
  return {"line", "parabola", "semicircle-sqrt", "semicircle-trig", "takagi",
          "riemann", "cantor", "davenport", "liouville", "hilbert"};
}

std::string gallery_name(const GalleryItem& item) {
  const auto with = [&](const char* id) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s:%g", id, item.param);
    return std::string(buf);
  };
  switch (item.id) {
    case GalleryId::Line: return with("line");
    case GalleryId::Parabola: return with("parabola");
    case GalleryId::SemicircleSqrt: return with("semicircle-sqrt");
    case GalleryId::SemicircleTrig: return with("semicircle-trig");
    case GalleryId::TakagiGraph: return "takagi";
    case GalleryId::RiemannGraph: return "riemann";
    case GalleryId::Cantor: return "cantor";
    case GalleryId::Davenport: return "davenport";
    case GalleryId::LiouvilleVariant: return "liouville";
    case GalleryId::HilbertApprox: return "hilbert:" + std::to_string(item.level);
  }
  return "unknown";
}

PathFn gallery_function(const GalleryItem& item) {
  const double a = item.param;
  switch (item.id) {
    case GalleryId::Line:
      return [a](double t) { return cplx(a * t, 0.0); };
    case GalleryId::Parabola:
      return [a](double t) { return cplx(0.0, a * t * (1.0 - t)); };
    case GalleryId::SemicircleSqrt:
      return [a](double t) {
        const double u = 2.0 * t - 1.0;
        return cplx(2.0 * a * t, std::abs(a) * std::sqrt(std::max(0.0, 1.0 - u * u)));
      };
    case GalleryId::SemicircleTrig:
      return [a](double t) { return a * cplx(1.0 - std::cos(kPi * t), std::sin(kPi * t)); };
    case GalleryId::TakagiGraph:
      return [](double t) { return cplx(t, takagi(t)); };
    case GalleryId::RiemannGraph:
      return [](double t) { return cplx(riemann_rho(2.0 * t), 0.0); };
    case GalleryId::Cantor:
      return [](double t) { return cplx(cantor(t), 0.0); };
    case GalleryId::Davenport:
    case GalleryId::LiouvilleVariant: {
      const auto w = item.id == GalleryId::Davenport ? ArithWeight::Mobius : ArithWeight::Liouville;
      auto weights = std::make_shared<const std::vector<int>>(arith_table(kDavenportTerms, w));
      return [weights](double t) { return davenport_sum(t, *weights); };
    }
    case GalleryId::HilbertApprox: {
      auto path = std::make_shared<const PolyPath>(hilbert_path(item.level));
      return [path](double t) { return path->eval(t); };
    }
  }
  throw std::invalid_argument("gallery_function: unknown id");
}

AlphaSequence gallery_alpha(const GalleryItem& item, long long H) {
  if (H < 1) throw std::invalid_argument("gallery_alpha: H must be >= 1");
  AlphaSequence seq;
  seq.listed_cutoff = H;
  const double a = item.param;
  const double Hd = static_cast<double>(H);
  std::vector<int> weights;
  switch (item.id) {
    case GalleryId::Line:
      seq.f1 = a;
      seq.tail_bound = 0.0;
      break;
    case GalleryId::Parabola:
      seq.f1 = 0.0;
      seq.tail_bound = std::abs(a) / (kPi * (Hd + 1.0));
      break;
    case GalleryId::SemicircleSqrt:
      seq.f1 = 2.0 * a;
      seq.tail_bound = kPi * std::abs(a) * kJ1Max;
      break;
    case GalleryId::SemicircleTrig:
      seq.f1 = 2.0 * a;
      seq.tail_bound = std::abs(a) / (Hd + 0.5);
      break;
    case GalleryId::TakagiGraph:
      seq.f1 = 1.0;
      seq.tail_bound = 2.0 / kPi;
      break;
    case GalleryId::RiemannGraph:
      seq.f1 = 0.0;
      seq.tail_bound = 1.0;
      break;
    case GalleryId::Cantor:
      seq.f1 = 1.0;
      seq.tail_bound = 1.0;
      break;
    case GalleryId::Davenport:
    case GalleryId::LiouvilleVariant:
      seq.f1 = 0.0;
      seq.tail_bound = 1.0;
      weights = arith_table(static_cast<int>(H), item.id == GalleryId::Davenport ? ArithWeight::Mobius : ArithWeight::Liouville);
      break;
    case GalleryId::HilbertApprox:
      throw std::invalid_argument("gallery_alpha: Hilbert approximations are polygonal");
  }
  for (long long k = 1; k <= H; ++k) {
    for (const long long h : {k, -k}) {
      const double hd = static_cast<double>(h);
      double v = 0.0;
      switch (item.id) {
        case GalleryId::Line: v = 0.0; break;
        case GalleryId::Parabola: v = a / (kPi * hd); break;
        case GalleryId::SemicircleSqrt:
          v = -kPi * std::abs(a) * ((h % 2 == 0) ? 1.0 : -1.0) * bessel_j1(kPi * hd);
          break;
        case GalleryId::SemicircleTrig: v = a / (hd + 0.5); break;
        case GalleryId::TakagiGraph: {
          long long odd = k;
          while (odd % 2 == 0) odd /= 2;
          v = (h > 0 ? 2.0 : -2.0) / (kPi * static_cast<double>(odd));
          break;
        }
        case GalleryId::RiemannGraph: v = is_square(h) ? 1.0 : 0.0; break;
        case GalleryId::Cantor: {
          double prod = (h % 2 == 0) ? 1.0 : -1.0;
          double pow3 = 3.0;
          for (int j = 1; j <= 40; ++j, pow3 *= 3.0) prod *= std::cos(2.0 * kPi * hd / pow3);
          v = prod;
          break;
        }
        case GalleryId::Davenport:
        case GalleryId::LiouvilleVariant:
          v = h > 0 ? weights[static_cast<std::size_t>(k)] : 0.0;
          break;
        case GalleryId::HilbertApprox: break;
      }
      seq.alphas.emplace_back(h, v);
    }
  }
  return seq;
}

MembershipVerdict gallery_verdict(const GalleryItem& item, Convention conv) {
  if (item.id == GalleryId::HilbertApprox) return check_polygonal(hilbert_path(item.level), conv);
  return check_alpha_sequence(gallery_alpha(item));
}

}  // namespace kloospath
