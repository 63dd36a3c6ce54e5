#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "classlaw/classpoly.hpp"
#include "classlaw/genus.hpp"
#include "classlaw/lawcheck.hpp"
#include "classlaw/quadforms.hpp"

// Output records for the command-line tool. Each record is
// {"command", "inputs", "result"} with fixed key order; big integers are
// rendered as decimal strings. Text renderings are line-oriented.
namespace classlaw::report {

using Record = nlohmann::ordered_json;

Record symbol_record(std::int64_t a, std::int64_t n, int value);
std::string symbol_text(int value);

Record classgroup_record(const FundamentalDiscriminant& d, const ClassGroup& cg);
std::string classgroup_text(const FundamentalDiscriminant& d, const ClassGroup& cg);

Record hilbert_record(const ClassPolynomial& poly);
std::string hilbert_text(const ClassPolynomial& poly);

Record predict_record(const FundamentalDiscriminant& d, std::uint64_t p, const Prediction& pred);
std::string predict_text(const Prediction& pred);

Record verify_record(const VerificationReport& r);
std::string verify_text(const VerificationReport& r);

Record sweep_record(std::int64_t dmin, std::int64_t dmax, std::uint64_t pmax,
                    std::size_t discriminants, const SweepResult& s);
std::string sweep_text(std::size_t discriminants, const SweepResult& s);

Record density_record(const DensityReport& r);
std::string density_text(const DensityReport& r);

/// Single-line serialization used in machine mode.
std::string to_line(const Record& r);

}  // namespace classlaw::report
