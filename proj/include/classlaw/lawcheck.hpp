#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "classlaw/classpoly.hpp"
#include "classlaw/genus.hpp"
#include "classlaw/pattern.hpp"
#include "classlaw/quadforms.hpp"

namespace classlaw {

enum class VerifyStatus { match, mismatch, skipped_nonsquarefree, skipped_ramified };

std::string_view to_string(VerifyStatus s);

/// Genus-theory prediction for one (D, p) next to the factorization pattern
/// of H_D mod p. Ramified primes carry neither; non-squarefree primes carry
/// only the prediction.
struct VerificationReport {
  std::int64_t d = 0;
  std::uint64_t p = 0;
  VerifyStatus status = VerifyStatus::skipped_ramified;
  std::optional<Prediction> prediction;
  std::optional<SplittingPattern> actual;
};

struct SweepResult {
  std::uint64_t total = 0;
  std::uint64_t matches = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t skipped_ramified = 0;
  std::uint64_t skipped_nonsquarefree = 0;
  std::vector<VerificationReport> mismatch_reports;  // sorted by (D, p)
};

/// Fraction of odd primes p <= x_max at which H_D has a root mod p.
/// Ramified and non-squarefree primes are excluded from primes_tested.
struct DensityReport {
  std::int64_t d = 0;
  std::uint64_t x_max = 0;
  std::uint64_t primes_tested = 0;
  std::uint64_t primes_with_root = 0;
  std::uint64_t skipped_ramified = 0;
  std::uint64_t skipped_nonsquarefree = 0;
  /// Primes where the predicted and the actual root existence differ.
  std::uint64_t disagreements = 0;
  Rational empirical;
  Rational theoretical;
  double abs_deviation = 0;
};

/// Text record for one class polynomial:
///   D <decimal>
///   h <decimal>
///   coeffs <c_0> ... <c_h>
///   check <sum of coefficients mod 2^61 - 1>
std::string format_cache_record(const ClassPolynomial& poly);
/// Throws IntegrityError naming D if the record is malformed or fails any of
/// the D, degree, monicity, or checksum checks.
ClassPolynomial parse_cache_record(const FundamentalDiscriminant& d, std::uint64_t h,
                                   std::string_view text);

/// One file per discriminant, "hd_<|D|>.txt", replaced atomically.
class ClassPolyCache {
 public:
  explicit ClassPolyCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path record_path(std::int64_t d) const;

  std::optional<ClassPolynomial> load(const FundamentalDiscriminant& d) const;
  void store(const ClassPolynomial& poly) const;

 private:
  std::filesystem::path dir_;
};

struct LawCheckConfig {
  /// No disk cache when empty.
  std::optional<std::filesystem::path> cache_dir;
  unsigned workers = 1;
  ClassPolyConfig classpoly;
};

/// Runs verifications against an in-memory table of class groups and class
/// polynomials, backed by the optional disk cache.
class LawChecker {
 public:
  explicit LawChecker(LawCheckConfig config = {});

  const LawCheckConfig& config() const { return config_; }

  /// Loads or computes H_D and its class group for every discriminant not yet
  /// in memory, in parallel.
  void prepare(const std::vector<FundamentalDiscriminant>& ds);

  const ClassPolynomial& class_poly(const FundamentalDiscriminant& d);
  const ClassGroup& group(const FundamentalDiscriminant& d);

  /// Throws DomainError unless p is an odd prime.
  VerificationReport verify_one(const FundamentalDiscriminant& d, std::uint64_t p);

  /// verify_one for every D in ds and odd prime p <= p_max, ordered by
  /// (position of D in ds, p).
  std::vector<VerificationReport> verify_all(const std::vector<FundamentalDiscriminant>& ds,
                                             std::uint64_t p_max);
  SweepResult sweep(const std::vector<FundamentalDiscriminant>& ds, std::uint64_t p_max);

  /// Throws DomainError when x_max < 100.
  DensityReport density_experiment(const FundamentalDiscriminant& d, std::uint64_t x_max);

 private:
  struct Entry {
    ClassGroup group;
    ClassPolynomial poly;
  };

  Entry load_or_compute(const FundamentalDiscriminant& d) const;
  const Entry& entry(const FundamentalDiscriminant& d);

  LawCheckConfig config_;
  std::optional<ClassPolyCache> cache_;
  std::mutex mu_;
  std::map<std::int64_t, std::unique_ptr<Entry>> entries_;
};

SweepResult summarize(const std::vector<VerificationReport>& reports);

}  // namespace classlaw
