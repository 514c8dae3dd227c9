#include "kloospath/modarith.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kloospath {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t p) {
  x %= p;
  return x < 0 ? x + p : x;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t p) {
  if (p < 2) throw std::domain_error("mod_inverse: modulus must be >= 2");
  x = reduce(x, p);
  if (x == 0) throw std::domain_error("mod_inverse: 0 has no inverse modulo " + std::to_string(p));
  std::int64_t r0 = p, r1 = x, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: argument not coprime to modulus");
  return reduce(s0, p);
}

std::vector<std::int64_t> inverse_table(std::int64_t p) {
  // inv(x) = -(p / x) * inv(p mod x), valid for prime p.
  std::vector<std::int64_t> inv(static_cast<std::size_t>(p), 0);
  if (p > 1) inv[1] = 1;
  for (std::int64_t x = 2; x < p; ++x) {
    inv[x] = reduce(-(p / x) * inv[p % x], p);
  }
  return inv;
}

int legendre(std::int64_t x, std::int64_t p) {
  x = reduce(x, p);
  if (x == 0) return 0;
  // Euler's criterion by square-and-multiply.
  std::int64_t e = (p - 1) / 2, base = x, acc = 1;
  while (e > 0) {
    if (e & 1) acc = static_cast<std::int64_t>((static_cast<__int128>(acc) * base) % p);
    base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % p);
    e >>= 1;
  }
  return acc == 1 ? 1 : -1;
}

RootTable::RootTable(std::int64_t p) : p_(p), roots_(static_cast<std::size_t>(p)) {
  if (p < 1) throw std::invalid_argument("RootTable: modulus must be positive");
  roots_[0] = 1.0;
  // Fill k <= p/2 directly and mirror the rest so that e(-k/p) is exactly conj(e(k/p)).
  for (std::int64_t k = 1; 2 * k <= p; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
    roots_[k] = cplx(std::cos(angle), std::sin(angle));
    roots_[p - k] = std::conj(roots_[k]);
  }
}

SumSpec SumSpec::kloosterman(std::int64_t a, std::int64_t b, std::int64_t p) {
  SumSpec s{p, SumKind::Kloosterman, p > 0 ? reduce(a, p) : a, p > 0 ? reduce(b, p) : b};
  s.validate();
  return s;
}

SumSpec SumSpec::birch(std::int64_t a, std::int64_t p) {
  SumSpec s{p, SumKind::Birch, p > 0 ? reduce(a, p) : a, 0};
  s.validate();
  return s;
}

SumSpec SumSpec::legendre_character(std::int64_t p) {
  SumSpec s{p, SumKind::LegendreCharacter, 0, 0};
  s.validate();
  return s;
}

void SumSpec::validate() const {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not an odd prime");
  }
  // a*x + b*y must stay inside int64.
  if (p > (std::int64_t{1} << 30)) throw std::invalid_argument("modulus too large");
  if (a < 0 || a >= p || b < 0 || b >= p) {
    throw std::invalid_argument("residues must lie in [0, p)");
  }
  if (kind == SumKind::Kloosterman && (a == 0 || b == 0)) {
    throw std::invalid_argument("Kloosterman residues must be invertible modulo p");
  }
}

std::vector<cplx> summands(const SumSpec& spec) { return summands(spec, RootTable(spec.p)); }

std::vector<cplx> summands(const SumSpec& spec, const RootTable& roots) {
  spec.validate();
  const std::int64_t p = spec.p;
  if (roots.modulus() != p) throw std::invalid_argument("root table modulus mismatch");
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  std::vector<cplx> out;
  switch (spec.kind) {
    case SumKind::Kloosterman: {
      const auto inv = inverse_table(p);
      out.reserve(static_cast<std::size_t>(p - 1));
      for (std::int64_t x = 1; x < p; ++x) {
        out.push_back(scale * roots((spec.a * x + spec.b * inv[x]) % p));
      }
      break;
    }
    case SumKind::Birch: {
      out.reserve(static_cast<std::size_t>(p));
      for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t cube = x * x % p * x % p;
        out.push_back(scale * roots((spec.a * x + cube) % p));
      }
      break;
    }
    case SumKind::LegendreCharacter: {
      out.reserve(static_cast<std::size_t>(p - 1));
      for (std::int64_t x = 1; x < p; ++x) out.emplace_back(scale * legendre(x, p), 0.0);
      break;
    }
  }
  return out;
}

std::vector<cplx> partial_sums(const SumSpec& spec) {
  const auto steps = summands(spec);
  std::vector<cplx> z(steps.size() + 1);
  z[0] = 0.0;
  for (std::size_t j = 0; j < steps.size(); ++j) z[j + 1] = z[j] + steps[j];
  return z;
}

CompleteSum complete_sum(const SumSpec& spec) {
  const auto z = partial_sums(spec);
  CompleteSum out{spec, z.back(), 0.0};
  if (spec.kind == SumKind::Kloosterman) out.half_value = z[static_cast<std::size_t>((spec.p - 1) / 2)];
  return out;
}

namespace {

cplx kloosterman_range(std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t last) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("modulus is not an odd prime");
  a = reduce(a, p);
  b = reduce(b, p);
  const RootTable roots(p);
  const auto inv = inverse_table(p);
  cplx acc = 0.0;
  for (std::int64_t x = 1; x <= last; ++x) acc += roots((a * x + b * inv[x]) % p);
  return acc / std::sqrt(static_cast<double>(p));
}

}  // namespace

cplx kloosterman(std::int64_t a, std::int64_t b, std::int64_t p) { return kloosterman_range(a, b, p, p - 1); }

cplx kloosterman_half(std::int64_t a, std::int64_t b, std::int64_t p) {
  return kloosterman_range(a, b, p, (p - 1) / 2);
}

cplx birch(std::int64_t a, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("modulus is not an odd prime");
  a = reduce(a, p);
  const RootTable roots(p);
  cplx acc = 0.0;
  for (std::int64_t x = 0; x < p; ++x) acc += roots((a * x + x * x % p * x) % p);
  return acc / std::sqrt(static_cast<double>(p));
}

cplx gauss_sum(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("modulus is not an odd prime");
  const RootTable roots(p);
  cplx acc = 0.0;
  for (std::int64_t x = 1; x < p; ++x) acc += static_cast<double>(legendre(x, p)) * roots(x);
  return acc / std::sqrt(static_cast<double>(p));
}

}  // namespace kloospath
