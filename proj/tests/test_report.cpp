#include "classlaw/report.hpp"
#include "doctest.h"

using namespace classlaw;

TEST_CASE("symbol") {
  CHECK(report::to_line(report::symbol_record(-15, 11, -1)) ==
        "{\"command\":\"symbol\",\"inputs\":{\"a\":-15,\"n\":11},\"result\":{\"value\":-1}}\n");
  CHECK(report::symbol_text(-1) == "-1\n");
}

TEST_CASE("classgroup") {
  const auto d = make_fundamental(-15);
  const auto cg = class_group(d);
  CHECK(report::classgroup_text(d, cg) ==
        "D: -15\nN: 15\nt: 2\nh: 2\nstars: (3,-3) (5,5)\nforms: (1,1,4) (2,1,2)\n");
  const auto rec = report::classgroup_record(d, cg);
  CHECK(rec["result"]["h"] == 2);
  CHECK(rec["result"]["forms"][1] == nlohmann::json::array({2, 1, 2}));
}

TEST_CASE("hilbert keeps big integers exact") {
  const ClassPolynomial h163{make_fundamental(-163),
                             {mpz_class("262537412640768000"), mpz_class(1)}};
  const auto line = report::to_line(report::hilbert_record(h163));
  CHECK(line.find("\"coeffs\":[\"262537412640768000\",\"1\"]") != std::string::npos);
  CHECK(report::hilbert_text(h163) == "x + 262537412640768000\n");
}

TEST_CASE("verify text and record") {
  VerificationReport r;
  r.d = -15;
  r.p = 11;
  r.status = VerifyStatus::match;
  r.prediction = Prediction{SplitCase::split, SplittingPattern::parse("1^2"), 1};
  r.actual = SplittingPattern::parse("1^2");
  CHECK(report::verify_text(r) == "match: predicted 1^2, actual 1^2\n");
  const auto rec = report::verify_record(r);
  CHECK(rec.dump() ==
        "{\"command\":\"verify\",\"inputs\":{\"D\":-15,\"p\":11},\"result\":{\"status\":\"match\","
        "\"case\":\"split\",\"predicted\":\"1^2\",\"actual\":\"1^2\"}}");

  r.status = VerifyStatus::skipped_nonsquarefree;
  r.actual.reset();
  CHECK(report::verify_text(r) == "skipped_nonsquarefree\n");
  CHECK(report::verify_record(r)["result"]["actual"].is_null());
}

TEST_CASE("pattern text survives a JSON round trip") {
  SplittingPattern p;
  p.add(1, 2);
  p.add(2, 3);
  const auto rec = report::Record(p.to_string());
  const auto back = nlohmann::json::parse(rec.dump());
  CHECK(SplittingPattern::parse(back.get<std::string>()) == p);
}

TEST_CASE("density text") {
  DensityReport r;
  r.d = -4;
  r.x_max = 100;
  r.primes_tested = 24;
  r.primes_with_root = 24;
  r.empirical = Rational::make(24, 24);
  r.theoretical = Rational::make(1, 1);
  const std::string text = report::density_text(r);
  CHECK(text.find("theoretical: 1 (1.000000)\n") != std::string::npos);
  CHECK(text.find("abs_deviation: 0.000000\n") != std::string::npos);
  CHECK(report::density_record(r)["result"]["empirical"] == "1");
}
