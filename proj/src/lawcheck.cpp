#include "classlaw/lawcheck.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "classlaw/error.hpp"
#include "classlaw/ffpoly.hpp"
#include "classlaw/numtheory.hpp"
#include "classlaw/parallel.hpp"

namespace classlaw {

std::string_view to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::match: return "match";
    case VerifyStatus::mismatch: return "mismatch";
    case VerifyStatus::skipped_nonsquarefree: return "skipped_nonsquarefree";
    case VerifyStatus::skipped_ramified: return "skipped_ramified";
  }
  return "?";
}

LawChecker::LawChecker(LawCheckConfig config) : config_(std::move(config)) {
  if (config_.cache_dir) cache_.emplace(*config_.cache_dir);
}

LawChecker::Entry LawChecker::load_or_compute(const FundamentalDiscriminant& d) const {
  ClassGroup cg = class_group(d);
  if (cache_) {
    if (auto poly = cache_->load(d)) return Entry{std::move(cg), std::move(*poly)};
  }
  ClassPolyConfig cfg = config_.classpoly;
  cfg.workers = 1;
  ClassPolynomial poly = hilbert_class_poly(d, cfg);
  if (cache_) cache_->store(poly);
  return Entry{std::move(cg), std::move(poly)};
}

void LawChecker::prepare(const std::vector<FundamentalDiscriminant>& ds) {
  std::vector<FundamentalDiscriminant> missing;
  {
    std::lock_guard lock(mu_);
    for (const auto& d : ds)
      if (!entries_.count(d.value()) &&
          std::none_of(missing.begin(), missing.end(), [&](const auto& m) { return m == d; }))
        missing.push_back(d);
  }
  std::vector<std::unique_ptr<Entry>> computed(missing.size());
  parallel_for(missing.size(), config_.workers, [&](std::size_t i) {
    computed[i] = std::make_unique<Entry>(load_or_compute(missing[i]));
  });
  std::lock_guard lock(mu_);
  for (std::size_t i = 0; i < missing.size(); ++i)
    entries_.try_emplace(missing[i].value(), std::move(computed[i]));
}

const LawChecker::Entry& LawChecker::entry(const FundamentalDiscriminant& d) {
  {
    std::lock_guard lock(mu_);
    if (auto it = entries_.find(d.value()); it != entries_.end()) return *it->second;
  }
  prepare({d});
  std::lock_guard lock(mu_);
  return *entries_.at(d.value());
}

const ClassPolynomial& LawChecker::class_poly(const FundamentalDiscriminant& d) {
  return entry(d).poly;
}

const ClassGroup& LawChecker::group(const FundamentalDiscriminant& d) { return entry(d).group; }

VerificationReport LawChecker::verify_one(const FundamentalDiscriminant& d, std::uint64_t p) {
  if (p == 2 || !is_prime(p))
    throw DomainError("verify: p = " + std::to_string(p) + " is not an odd prime");
  VerificationReport report;
  report.d = d.value();
  report.p = p;
  if (d.divisible_by(p)) {
    report.status = VerifyStatus::skipped_ramified;
    return report;
  }
  const Entry& e = entry(d);
  report.prediction = predict(d, p, e.group);
  const FpPoly reduced = reduce_mod(e.poly, p);
  if (!is_squarefree(reduced)) {
    report.status = VerifyStatus::skipped_nonsquarefree;
    return report;
  }
  report.actual = ddf(reduced);
  report.status =
      report.prediction->pattern == *report.actual ? VerifyStatus::match : VerifyStatus::mismatch;
  return report;
}

std::vector<VerificationReport> LawChecker::verify_all(
    const std::vector<FundamentalDiscriminant>& ds, std::uint64_t p_max) {
  if (p_max < 3) throw DomainError("sweep: p_max must be at least 3");
  prepare(ds);
  const auto primes = primes_in_range(3, static_cast<std::int64_t>(p_max));
  std::vector<VerificationReport> reports(ds.size() * primes.size());
  parallel_for(reports.size(), config_.workers, [&](std::size_t i) {
    reports[i] = verify_one(ds[i / primes.size()], primes[i % primes.size()]);
  });
  return reports;
}

SweepResult summarize(const std::vector<VerificationReport>& reports) {
  SweepResult out;
  for (const auto& r : reports) {
    ++out.total;
    switch (r.status) {
      case VerifyStatus::match: ++out.matches; break;
      case VerifyStatus::mismatch:
        ++out.mismatches;
        out.mismatch_reports.push_back(r);
        break;
      case VerifyStatus::skipped_nonsquarefree: ++out.skipped_nonsquarefree; break;
      case VerifyStatus::skipped_ramified: ++out.skipped_ramified; break;
    }
  }
  std::sort(out.mismatch_reports.begin(), out.mismatch_reports.end(),
            [](const auto& a, const auto& b) { return std::tie(a.d, a.p) < std::tie(b.d, b.p); });
  return out;
}

SweepResult LawChecker::sweep(const std::vector<FundamentalDiscriminant>& ds, std::uint64_t p_max) {
  return summarize(verify_all(ds, p_max));
}

DensityReport LawChecker::density_experiment(const FundamentalDiscriminant& d,
                                             std::uint64_t x_max) {
  if (x_max < 100) throw DomainError("density: x_max must be at least 100");
  const Entry& e = entry(d);
  const auto primes = primes_in_range(3, static_cast<std::int64_t>(x_max));

  enum class Kind : unsigned char { ramified, nonsquarefree, tested };
  struct Outcome {
    Kind kind = Kind::ramified;
    bool predicted_root = false;
    bool actual_root = false;
  };
  std::vector<Outcome> outcomes(primes.size());
  parallel_for(primes.size(), config_.workers, [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    Outcome& o = outcomes[i];
    if (d.divisible_by(p)) return;
    const FpPoly reduced = reduce_mod(e.poly, p);
    if (!is_squarefree(reduced)) {
      o.kind = Kind::nonsquarefree;
      return;
    }
    o.kind = Kind::tested;
    o.predicted_root = predict(d, p, e.group).pattern.linear_count() > 0;
    o.actual_root = root_count(reduced) > 0;
  });

  DensityReport out;
  out.d = d.value();
  out.x_max = x_max;
  for (const auto& o : outcomes) {
    switch (o.kind) {
      case Kind::ramified: ++out.skipped_ramified; break;
      case Kind::nonsquarefree: ++out.skipped_nonsquarefree; break;
      case Kind::tested:
        ++out.primes_tested;
        if (o.actual_root) ++out.primes_with_root;
        if (o.actual_root != o.predicted_root) ++out.disagreements;
        break;
    }
  }
  out.empirical = Rational::make(out.primes_with_root, out.primes_tested);
  out.theoretical = theoretical_density(d, e.group.h());
  using i128 = __int128;
  const i128 num = static_cast<i128>(out.empirical.num) * out.theoretical.den -
                   static_cast<i128>(out.theoretical.num) * out.empirical.den;
  const i128 den = static_cast<i128>(out.empirical.den) * out.theoretical.den;
  out.abs_deviation = static_cast<double>(num < 0 ? -num : num) / static_cast<double>(den);
  return out;
}

}  // namespace classlaw
