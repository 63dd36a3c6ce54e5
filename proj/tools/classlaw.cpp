// classlaw: factorization patterns of Hilbert class polynomials mod p,
// predicted from genus theory and checked against explicit factorizations.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "classlaw/error.hpp"
#include "classlaw/ffpoly.hpp"
#include "classlaw/genus.hpp"
#include "classlaw/lawcheck.hpp"
#include "classlaw/numtheory.hpp"
#include "classlaw/parallel.hpp"
#include "classlaw/report.hpp"

namespace {

namespace cl = classlaw;
namespace rep = classlaw::report;

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kMismatch = 3, kResource = 4 };

struct GlobalOptions {
  bool json = false;
  std::optional<std::string> cache_dir;
  unsigned workers = cl::default_workers();
  std::uint64_t seed = cl::kDefaultSeed;
  std::uint64_t max_bits = cl::kDefaultMaxBits;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t to_prime_arg(std::int64_t p) {
  if (p <= 0) throw cl::DomainError("p = " + std::to_string(p) + " must be a positive prime");
  return static_cast<std::uint64_t>(p);
}

cl::LawChecker make_checker(const GlobalOptions& g) {
  cl::LawCheckConfig cfg;
  if (g.cache_dir) {
    cfg.cache_dir = *g.cache_dir;
  } else if (const char* env = std::getenv("CLASSLAW_CACHE_DIR"); env && *env) {
    cfg.cache_dir = env;
  } else {
    cfg.cache_dir = "./hd_cache";
  }
  cfg.workers = g.workers;
  cfg.classpoly.max_bits = g.max_bits;
  cfg.classpoly.workers = g.workers;
  return cl::LawChecker(cfg);
}

void emit(const GlobalOptions& g, const rep::Record& record, const std::string& text) {
  std::cout << (g.json ? rep::to_line(record) : text);
}

int run_symbol(const GlobalOptions& g, std::int64_t a, std::int64_t n) {
  const int v = cl::kronecker(a, n);
  emit(g, rep::symbol_record(a, n, v), rep::symbol_text(v));
  return kOk;
}

int run_classgroup(const GlobalOptions& g, std::int64_t d_in) {
  const auto d = cl::make_fundamental(d_in);
  const auto cg = cl::class_group(d);
  emit(g, rep::classgroup_record(d, cg), rep::classgroup_text(d, cg));
  return kOk;
}

int run_hilbert(const GlobalOptions& g, std::int64_t d_in) {
  const auto d = cl::make_fundamental(d_in);
  auto checker = make_checker(g);
  const auto& poly = checker.class_poly(d);
  emit(g, rep::hilbert_record(poly), rep::hilbert_text(poly));
  return kOk;
}

int run_predict(const GlobalOptions& g, std::int64_t d_in, std::int64_t p_in) {
  const auto d = cl::make_fundamental(d_in);
  const auto p = to_prime_arg(p_in);
  const auto pred = cl::predict(d, p, cl::class_group(d));
  emit(g, rep::predict_record(d, p, pred), rep::predict_text(pred));
  return kOk;
}

int run_roots(const GlobalOptions& g, std::int64_t d_in, std::int64_t p_in) {
  const auto d = cl::make_fundamental(d_in);
  const auto p = to_prime_arg(p_in);
  auto checker = make_checker(g);
  const auto reduced = cl::reduce_mod(checker.class_poly(d), p);
  if (!cl::is_squarefree(reduced))
    throw cl::DomainError("H_D is not squarefree mod " + std::to_string(p));
  std::mt19937_64 rng(g.seed);
  const auto rs = cl::roots(reduced, rng);
  rep::Record record;
  record["command"] = "roots";
  record["inputs"] = {{"D", d.value()}, {"p", p}};
  record["result"] = {{"roots", rs}};
  std::string text;
  for (std::size_t i = 0; i < rs.size(); ++i) text += (i ? " " : "") + std::to_string(rs[i]);
  emit(g, record, text + "\n");
  return kOk;
}

int run_verify(const GlobalOptions& g, bool sweep, const std::vector<std::int64_t>& args) {
  auto checker = make_checker(g);
  if (!sweep) {
    if (args.size() != 2) throw UsageError("verify expects D p (or --sweep dmin dmax pmax)");
    const auto d = cl::make_fundamental(args[0]);
    const auto report = checker.verify_one(d, to_prime_arg(args[1]));
    emit(g, rep::verify_record(report), rep::verify_text(report));
    return report.status == cl::VerifyStatus::mismatch ? kMismatch : kOk;
  }
  if (args.size() != 3) throw UsageError("verify --sweep expects dmin dmax pmax");
  const std::int64_t dmin = args[0], dmax = args[1];
  if (dmin > dmax) throw cl::DomainError("sweep: dmin must not exceed dmax");
  if (args[2] < 3) throw cl::DomainError("sweep: pmax must be at least 3");
  const auto pmax = static_cast<std::uint64_t>(args[2]);
  const auto ds = cl::fundamental_discriminants(dmin, dmax);
  const auto result = checker.sweep(ds, pmax);
  emit(g, rep::sweep_record(dmin, dmax, pmax, ds.size(), result), rep::sweep_text(ds.size(), result));
  return result.mismatches > 0 ? kMismatch : kOk;
}

int run_density(const GlobalOptions& g, std::int64_t d_in, std::int64_t x_max) {
  const auto d = cl::make_fundamental(d_in);
  if (x_max < 100) throw cl::DomainError("density: xmax must be at least 100");
  auto checker = make_checker(g);
  const auto report = checker.density_experiment(d, static_cast<std::uint64_t>(x_max));
  emit(g, rep::density_record(report), rep::density_text(report));
  return report.disagreements > 0 ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-theory predictions for Hilbert class polynomials over F_p", "classlaw"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::string cache_dir;
  app.add_flag("--json", g.json, "Line-delimited JSON output");
  auto* cache_opt = app.add_option("--cache-dir", cache_dir,
                                   "Class polynomial cache (default $CLASSLAW_CACHE_DIR or ./hd_cache)");
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized root finding");
  app.add_option("--max-bits", g.max_bits, "Precision cap in bits")->check(CLI::PositiveNumber);

  std::int64_t a = 0, n = 0, d = 0, p = 0, xmax = 0;
  bool sweep = false;
  std::vector<std::int64_t> verify_args;

  auto* symbol = app.add_subcommand("symbol", "Kronecker symbol (a/n)");
  symbol->add_option("a", a)->required();
  symbol->add_option("n", n)->required();

  auto* classgroup = app.add_subcommand("classgroup", "Reduced forms, h, t and prime discriminants of D");
  classgroup->add_option("D", d)->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert class polynomial H_D (cached)");
  hilbert->add_option("D", d)->required();

  auto* predict = app.add_subcommand("predict", "Predicted splitting pattern of p");
  predict->add_option("D", d)->required();
  predict->add_option("p", p)->required();

  auto* roots = app.add_subcommand("roots", "Roots of H_D mod p");
  roots->add_option("D", d)->required();
  roots->add_option("p", p)->required();

  auto* verify = app.add_subcommand("verify", "Compare prediction with the factorization of H_D mod p");
  verify->add_flag("--sweep", sweep, "Sweep all fundamental D in [dmin, dmax] and odd p <= pmax");
  verify->add_option("args", verify_args, "D p | dmin dmax pmax")->required();

  auto* density = app.add_subcommand("density", "Fraction of primes p <= xmax where H_D has a root");
  density->add_option("D", d)->required();
  density->add_option("xmax", xmax)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }
  if (cache_opt->count() > 0) g.cache_dir = cache_dir;

  try {
    if (*symbol) return run_symbol(g, a, n);
    if (*classgroup) return run_classgroup(g, d);
    if (*hilbert) return run_hilbert(g, d);
    if (*predict) return run_predict(g, d, p);
    if (*roots) return run_roots(g, d, p);
    if (*verify) return run_verify(g, sweep, verify_args);
    if (*density) return run_density(g, d, xmax);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const classlaw::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const classlaw::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResource;
  } catch (const classlaw::PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return kResource;
  } catch (const classlaw::IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kResource;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResource;
  }
  return kUsage;
}
