#include "classlaw/report.hpp"

#include <iomanip>
#include <sstream>

namespace classlaw::report {

namespace {

Record envelope(const char* command, Record inputs, Record result) {
  Record r;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["result"] = std::move(result);
  return r;
}

Record pattern_or_null(const std::optional<SplittingPattern>& p) {
  return p ? Record(p->to_string()) : Record(nullptr);
}

Record prediction_fields(const Prediction& pred) {
  Record r;
  r["case"] = std::string(to_string(pred.case_tag));
  r["pattern"] = pred.pattern.to_string();
  r["f"] = pred.f_used ? Record(*pred.f_used) : Record(nullptr);
  return r;
}

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

}  // namespace

Record symbol_record(std::int64_t a, std::int64_t n, int value) {
  return envelope("symbol", {{"a", a}, {"n", n}}, {{"value", value}});
}

std::string symbol_text(int value) { return std::to_string(value) + "\n"; }

Record classgroup_record(const FundamentalDiscriminant& d, const ClassGroup& cg) {
  Record stars = Record::array();
  for (const auto& s : d.stars()) stars.push_back({{"q", s.q}, {"qstar", s.qstar}});
  Record forms = Record::array();
  for (const auto& f : cg.forms()) forms.push_back({f.a, f.b, f.c});
  Record result;
  result["N"] = d.kernel();
  result["t"] = d.prime_count();
  result["h"] = cg.h();
  result["stars"] = std::move(stars);
  result["forms"] = std::move(forms);
  return envelope("classgroup", {{"D", d.value()}}, std::move(result));
}

std::string classgroup_text(const FundamentalDiscriminant& d, const ClassGroup& cg) {
  std::ostringstream out;
  out << "D: " << d.value() << "\n";
  out << "N: " << d.kernel() << "\n";
  out << "t: " << d.prime_count() << "\n";
  out << "h: " << cg.h() << "\n";
  out << "stars:";
  for (const auto& s : d.stars()) out << " (" << s.q << "," << s.qstar << ")";
  out << "\nforms:";
  for (const auto& f : cg.forms()) out << " " << f.to_string();
  out << "\n";
  return out.str();
}

Record hilbert_record(const ClassPolynomial& poly) {
  Record coeffs = Record::array();
  for (const auto& c : poly.coeffs) coeffs.push_back(c.get_str());
  Record result;
  result["h"] = poly.degree();
  result["coeffs"] = std::move(coeffs);
  result["polynomial"] = poly.to_string();
  return envelope("hilbert", {{"D", poly.disc.value()}}, std::move(result));
}

std::string hilbert_text(const ClassPolynomial& poly) { return poly.to_string() + "\n"; }

Record predict_record(const FundamentalDiscriminant& d, std::uint64_t p, const Prediction& pred) {
  return envelope("predict", {{"D", d.value()}, {"p", p}}, prediction_fields(pred));
}

std::string predict_text(const Prediction& pred) {
  std::string out = "case: " + std::string(to_string(pred.case_tag)) + "\n";
  if (pred.f_used) out += "f: " + std::to_string(*pred.f_used) + "\n";
  out += "pattern: " + pred.pattern.to_string() + "\n";
  return out;
}

Record verify_record(const VerificationReport& r) {
  Record result;
  result["status"] = std::string(to_string(r.status));
  result["case"] =
      r.prediction ? Record(std::string(to_string(r.prediction->case_tag))) : Record(nullptr);
  result["predicted"] =
      r.prediction ? Record(r.prediction->pattern.to_string()) : Record(nullptr);
  result["actual"] = pattern_or_null(r.actual);
  return envelope("verify", {{"D", r.d}, {"p", r.p}}, std::move(result));
}

std::string verify_text(const VerificationReport& r) {
  std::string out(to_string(r.status));
  if (r.prediction && r.actual)
    out += ": predicted " + r.prediction->pattern.to_string() + ", actual " +
           r.actual->to_string();
  return out + "\n";
}

Record sweep_record(std::int64_t dmin, std::int64_t dmax, std::uint64_t pmax,
                    std::size_t discriminants, const SweepResult& s) {
  Record mismatches = Record::array();
  for (const auto& r : s.mismatch_reports) {
    Record m;
    m["D"] = r.d;
    m["p"] = r.p;
    m["predicted"] = r.prediction ? Record(r.prediction->pattern.to_string()) : Record(nullptr);
    m["actual"] = pattern_or_null(r.actual);
    mismatches.push_back(std::move(m));
  }
  Record result;
  result["discriminants"] = discriminants;
  result["total"] = s.total;
  result["matches"] = s.matches;
  result["mismatches"] = s.mismatches;
  result["skipped_ramified"] = s.skipped_ramified;
  result["skipped_nonsquarefree"] = s.skipped_nonsquarefree;
  result["mismatch_reports"] = std::move(mismatches);
  return envelope("sweep", {{"dmin", dmin}, {"dmax", dmax}, {"pmax", pmax}}, std::move(result));
}

std::string sweep_text(std::size_t discriminants, const SweepResult& s) {
  std::ostringstream out;
  out << "discriminants: " << discriminants << "\n";
  out << "total: " << s.total << "\n";
  out << "matches: " << s.matches << "\n";
  out << "mismatches: " << s.mismatches << "\n";
  out << "skipped_ramified: " << s.skipped_ramified << "\n";
  out << "skipped_nonsquarefree: " << s.skipped_nonsquarefree << "\n";
  for (const auto& r : s.mismatch_reports)
    out << "mismatch D=" << r.d << " p=" << r.p << ": " << verify_text(r);
  return out.str();
}

Record density_record(const DensityReport& r) {
  Record result;
  result["primes_tested"] = r.primes_tested;
  result["primes_with_root"] = r.primes_with_root;
  result["skipped_ramified"] = r.skipped_ramified;
  result["skipped_nonsquarefree"] = r.skipped_nonsquarefree;
  result["disagreements"] = r.disagreements;
  result["empirical"] = r.empirical.to_string();
  result["theoretical"] = r.theoretical.to_string();
  result["abs_deviation"] = r.abs_deviation;
  return envelope("density", {{"D", r.d}, {"xmax", r.x_max}}, std::move(result));
}

std::string density_text(const DensityReport& r) {
  std::ostringstream out;
  out << "D: " << r.d << "\n";
  out << "x_max: " << r.x_max << "\n";
  out << "primes_tested: " << r.primes_tested << "\n";
  out << "primes_with_root: " << r.primes_with_root << "\n";
  out << "skipped_ramified: " << r.skipped_ramified << "\n";
  out << "skipped_nonsquarefree: " << r.skipped_nonsquarefree << "\n";
  out << "disagreements: " << r.disagreements << "\n";
  out << "theoretical: " << r.theoretical.to_string() << " (" << fixed(r.theoretical.to_double(), 6)
      << ")\n";
  out << "empirical: " << r.empirical.to_string() << " (" << fixed(r.empirical.to_double(), 6)
      << ")\n";
  out << "abs_deviation: " << fixed(r.abs_deviation, 6) << "\n";
  return out.str();
}

std::string to_line(const Record& r) { return r.dump() + "\n"; }

}  // namespace classlaw::report
