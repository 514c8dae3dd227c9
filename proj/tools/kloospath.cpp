// kloospath command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "kloospath/faber.hpp"
#include "kloospath/fourier.hpp"
#include "kloospath/gallery.hpp"
#include "kloospath/io.hpp"
#include "kloospath/membership.hpp"
#include "kloospath/path.hpp"
#include "kloospath/stochastic.hpp"

using namespace kloospath;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void set_threads(int threads) {
  if (threads == 0) {
    if (const char* env = std::getenv("KLOOSPATH_THREADS")) {
      try {
        threads = std::stoi(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("KLOOSPATH_THREADS is not an integer: ") + env);
      }
    }
  }
  if (threads < 0) throw UsageError("thread count must be >= 0");
  if (threads > 0) omp_set_num_threads(threads);
}

const std::map<std::string, PathKind> kKinds{{"plain", PathKind::Plain}, {"swiss", PathKind::SwissClock}};
const std::map<std::string, Convention> kConventions{{"exact", Convention::Exact},
                                                     {"published", Convention::Published}};

void require_prime(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw UsageError(std::to_string(p) + " is not an odd prime");
}

// "zero" or any gallery id.
PathFn center_function(const std::string& id) {
  if (id == "zero") return [](double) { return cplx(0.0); };
  return gallery_function(parse_gallery_id(id));
}

struct ClassifyArgs {
  std::vector<std::int64_t> primes;
  std::int64_t b = 1;
  std::string kind = "plain";
  std::string convention = "published";
  std::string format = "csv";
  std::string out;
  int threads = 0;
};

int run_classify(const ClassifyArgs& args) {
  set_threads(args.threads);
  for (const auto p : args.primes) require_prime(p);
  const PathKind kind = kKinds.at(args.kind);
  const Convention conv = kConventions.at(args.convention);
  std::vector<ClassRow> rows;
  for (const auto p : args.primes) rows.push_back(classify_prime(p, args.b, kind, conv));
  Sink sink(args.out);
  if (args.format == "json") {
    sink.stream() << classification_json(rows, kind, args.b, conv).dump(2) << '\n';
  } else {
    write_classification_csv(sink.stream(), rows);
  }
  return 0;
}

struct PathArgs {
  std::int64_t p = 0, a = 1, b = 1;
  std::string kind = "plain";
  std::string convention = "exact";
  std::string format = "csv";
  std::string out;
  long long H = 32;
};

PolyPath build_path(const PathArgs& args) {
  require_prime(args.p);
  if (args.kind == "plain") return kloosterman_path(args.a, args.b, args.p);
  if (args.kind == "swiss") return swiss_clock_path(args.a, args.b, args.p);
  if (args.kind == "padded") return padded_kloosterman_path(args.a, args.b, args.p);
  if (args.kind == "birch") return padded_birch_path(args.a, args.p);
  if (args.kind == "character") return padded_character_path(args.p);
  throw UsageError("unknown path kind " + args.kind);
}

int run_check(const PathArgs& args) {
  require_prime(args.p);
  const PathKind kind = kKinds.at(args.kind);
  const Convention conv = kConventions.at(args.convention);
  const RootTable roots(args.p);
  const PolyPath path = kloosterman_kind_path(kind, args.a, args.b, args.p, roots);
  const DftPlan plan(path.segments());
  const MembershipVerdict v = conv == Convention::Exact
                                  ? check_polygonal(path, plan)
                                  : published_verdict(kind, args.a, args.b, args.p, roots, plan);
  Sink sink(args.out);
  sink.stream() << verdict_json(args.p, args.a % args.p, args.b % args.p, kind, v).dump(2) << '\n';
  return 0;
}

int run_path(const PathArgs& args) {
  const PolyPath path = build_path(args);
  Sink sink(args.out);
  if (args.format == "svg") {
    write_svg(sink.stream(), path.vertices());
  } else {
    write_path_csv(sink.stream(), path);
  }
  return 0;
}

int run_coeffs(const PathArgs& args) {
  if (args.H < 1) throw UsageError("--H must be >= 1");
  const PolyPath path = build_path(args);
  Sink sink(args.out);
  write_coeff_csv(sink.stream(), coeff_table(path, args.H));
  return 0;
}

struct GalleryArgs {
  std::string id;
  std::string format = "json";
  std::string convention = "exact";
  std::string out;
  std::size_t samples = 1025;
};

int run_gallery(const GalleryArgs& args) {
  const GalleryItem item = parse_gallery_id(args.id);
  Sink sink(args.out);
  if (args.format == "json") {
    const auto v = gallery_verdict(item, kConventions.at(args.convention));
    sink.stream() << gallery_verdict_json(gallery_name(item), v).dump(2) << '\n';
    return 0;
  }
  std::vector<double> t;
  std::vector<cplx> z;
  if (item.id == GalleryId::HilbertApprox) {
    // The polygon itself, so backtracking segments are drawn exactly.
    const PolyPath path = hilbert_path(item.level);
    t.assign(path.knots().begin(), path.knots().end());
    z.assign(path.vertices().begin(), path.vertices().end());
  } else {
    if (args.samples < 2) throw UsageError("--samples must be >= 2");
    const PathFn f = gallery_function(item);
    for (std::size_t i = 0; i < args.samples; ++i) {
      t.push_back(static_cast<double>(i) / static_cast<double>(args.samples - 1));
      z.push_back(f(t.back()));
    }
  }
  if (args.format == "svg") {
    write_svg(sink.stream(), z);
  } else {
    write_samples_csv(sink.stream(), t, z);
  }
  return 0;
}

struct McArgs {
  std::string f = "zero";
  double eps = 0.5;
  int N = 128;
  std::int64_t trials = 10000;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string out;
};

int run_mc(const McArgs& args) {
  set_threads(args.threads);
  const double freq = mc_ball_probability(center_function(args.f), args.eps, args.N, args.trials, args.seed);
  Sink sink(args.out);
  sink.stream() << mc_json(args.f, args.eps, args.N, args.trials, args.seed, freq).dump(2) << '\n';
  return 0;
}

struct EmpiricalArgs {
  McArgs mc;
  std::int64_t p = 0;
  std::int64_t b = 1;
};

int run_empirical(const EmpiricalArgs& args) {
  set_threads(args.mc.threads);
  require_prime(args.p);
  const auto r = empirical_vs_limit(args.p, args.b, center_function(args.mc.f), args.mc.eps, args.mc.N,
                                    args.mc.trials, args.mc.seed);
  nlohmann::json j = mc_json(args.mc.f, r.eps, r.N, r.trials, r.seed, r.monte_carlo);
  j["p"] = r.p;
  j["b"] = r.b;
  j["slice"] = "a varies, b fixed";
  j["empirical"] = r.empirical;
  Sink sink(args.mc.out);
  sink.stream() << j.dump(2) << '\n';
  return 0;
}

struct ReparamArgs {
  std::string f;
  int budget = 400;
  long long H = 32;
  int level = 4;
  std::string out;
};

// Antisymmetric tent pulse of the given height: up on [0,1/2], down on [1/2,1].
PathFn pulse(double height) {
  return [height](double t) {
    const double s = t <= 0.5 ? 2.0 * t : 2.0 * t - 1.0;
    const double tent = 1.0 - std::abs(2.0 * s - 1.0);
    return cplx(t <= 0.5 ? height * tent : -height * tent, 0.0);
  };
}

int run_reparam(const ReparamArgs& args) {
  PathFn f;
  if (args.f.rfind("pulse:", 0) == 0) {
    f = pulse(std::stod(args.f.substr(6)));
  } else {
    f = center_function(args.f);
  }
  ReparamOptions opts;
  opts.budget = args.budget;
  opts.H = args.H;
  opts.level = args.level;
  const auto r = reparam_search(f, opts);
  if (!args.out.empty()) {
    Sink sink(args.out);
    write_phi_csv(sink.stream(), r.phi);
  }
  nlohmann::json j{{"f_id", args.f},     {"initial", r.initial}, {"achieved", r.achieved},
                   {"success", r.success}, {"evaluations", r.evaluations}, {"H", args.H}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kloosterman paths and the support of their limiting random Fourier series"};
  app.require_subcommand(1);

  ClassifyArgs cls;
  auto* classify = app.add_subcommand("classify", "Count a in 1..p-1 by membership class");
  classify->add_option("--p", cls.primes, "Odd primes")->required()->delimiter(',');
  classify->add_option("--b", cls.b, "Fixed second parameter");
  classify->add_option("--kind", cls.kind)->check(CLI::IsMember({"plain", "swiss"}));
  classify->add_option("--convention", cls.convention, "published (tables) or exact (full criterion)")
      ->check(CLI::IsMember({"exact", "published"}));
  classify->add_option("--format", cls.format)->check(CLI::IsMember({"csv", "json"}));
  classify->add_option("--out", cls.out);
  classify->add_option("--threads", cls.threads, "0 = KLOOSPATH_THREADS or all cores");

  PathArgs chk;
  auto* check = app.add_subcommand("check", "Membership verdict for one path");
  check->add_option("--p", chk.p)->required();
  check->add_option("--a", chk.a)->required();
  check->add_option("--b", chk.b);
  check->add_option("--kind", chk.kind)->check(CLI::IsMember({"plain", "swiss"}));
  check->add_option("--convention", chk.convention)->check(CLI::IsMember({"exact", "published"}));
  check->add_option("--out", chk.out);

  PathArgs pth;
  auto* path = app.add_subcommand("path", "Dump a path as CSV or SVG");
  path->add_option("--p", pth.p)->required();
  path->add_option("--a", pth.a);
  path->add_option("--b", pth.b);
  path->add_option("--kind", pth.kind)->check(CLI::IsMember({"plain", "swiss", "padded", "birch", "character"}));
  path->add_option("--format", pth.format)->check(CLI::IsMember({"csv", "svg"}));
  path->add_option("--out", pth.out);

  PathArgs cof;
  auto* coeffs = app.add_subcommand("coeffs", "Fourier coefficient table of a path");
  coeffs->add_option("--p", cof.p)->required();
  coeffs->add_option("--a", cof.a);
  coeffs->add_option("--b", cof.b);
  coeffs->add_option("--kind", cof.kind)->check(CLI::IsMember({"plain", "swiss", "padded", "birch", "character"}));
  coeffs->add_option("--H", cof.H);
  coeffs->add_option("--out", cof.out);

  GalleryArgs gal;
  auto* gallery = app.add_subcommand("gallery", "Example functions: verdict (json), samples (csv) or plot (svg)");
  gallery->add_option("--id", gal.id, "e.g. takagi, parabola:6.28, hilbert:3")->required();
  gallery->add_option("--format", gal.format)->check(CLI::IsMember({"csv", "json", "svg"}));
  gallery->add_option("--convention", gal.convention)->check(CLI::IsMember({"exact", "published"}));
  gallery->add_option("--samples", gal.samples);
  gallery->add_option("--out", gal.out);

  McArgs mca;
  auto* mc = app.add_subcommand("mc", "Monte Carlo probability of the eps-ball around f");
  mc->add_option("--f", mca.f, "zero or a gallery id");
  mc->add_option("--eps", mca.eps);
  mc->add_option("--N", mca.N);
  mc->add_option("--trials", mca.trials);
  mc->add_option("--seed", mca.seed);
  mc->add_option("--threads", mca.threads);
  mc->add_option("--out", mca.out);

  EmpiricalArgs emp;
  auto* empirical = app.add_subcommand("empirical", "Fraction of a with K_p(a,b) within eps of f, plus the MC value");
  empirical->add_option("--p", emp.p)->required();
  empirical->add_option("--b", emp.b);
  empirical->add_option("--f", emp.mc.f);
  empirical->add_option("--eps", emp.mc.eps);
  empirical->add_option("--N", emp.mc.N);
  empirical->add_option("--trials", emp.mc.trials);
  empirical->add_option("--seed", emp.mc.seed);
  empirical->add_option("--threads", emp.mc.threads);
  empirical->add_option("--out", emp.mc.out);

  ReparamArgs rep;
  auto* reparam = app.add_subcommand("reparam", "Search a symmetric reparametrization into the support");
  reparam->add_option("--f", rep.f, "gallery id, zero, or pulse:<height>")->required();
  reparam->add_option("--budget", rep.budget);
  reparam->add_option("--H", rep.H);
  reparam->add_option("--level", rep.level);
  reparam->add_option("--out", rep.out, "phi knots CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify) return run_classify(cls);
    if (*check) return run_check(chk);
    if (*path) return run_path(pth);
    if (*coeffs) return run_coeffs(cof);
    if (*gallery) return run_gallery(gal);
    if (*mc) return run_mc(mca);
    if (*empirical) return run_empirical(emp);
    if (*reparam) return run_reparam(rep);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
