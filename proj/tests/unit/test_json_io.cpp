#include <doctest.h>

#include <random>

#include "sliceball/json_io.hpp"

using namespace sliceball;

TEST_CASE("quaternion JSON round trip") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  for (int it = 0; it < 200; ++it) {
    const Quaternion q{d(rng), d(rng), d(rng), d(rng)};
    CHECK(quaternion_from_json(quaternion_to_json(q)) == q);
  }
  CHECK(quaternion_to_json(Quaternion{1, 2, 3, 4}) == "[1.0,2.0,3.0,4.0]");
  CHECK_THROWS_AS(quaternion_from_json("[1,2,3]"), std::invalid_argument);
  CHECK_THROWS_AS(quaternion_from_json("nonsense"), std::invalid_argument);
}

TEST_CASE("series JSON round trip") {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::vector<Quaternion> c;
  for (int k = 0; k < 9; ++k) {
    c.push_back(Quaternion{d(rng), d(rng), d(rng), d(rng)});
  }
  const SliceSeries f(c, 0.9, false);
  const SliceSeries back = series_from_json(series_to_json(f));
  CHECK(back.coeffs() == f.coeffs());
  CHECK(back.eval_radius() == f.eval_radius());
  CHECK(back.exact() == f.exact());

  // Bare coefficient lists read back as exact polynomials.
  const SliceSeries bare = series_from_json(R"({"coeffs": [[0,0,0,0],[1,0,0,0]]})");
  CHECK(bare.exact());
  CHECK(bare.order() == 1);
  CHECK_THROWS_AS(series_from_json(R"({"id": 3})"), std::invalid_argument);
}

TEST_CASE("report JSON round trip") {
  VerificationReport rep;
  rep.outcome = VerificationReport::Outcome::kFail;
  rep.margin = -2.5e-10;
  rep.samples_used = 12345;
  rep.note = "witness attached";
  rep.witness = std::make_pair(Quaternion{0.1, 0.2, 0.3, 0.4}, Quaternion(1.0));
  CHECK(report_from_json(report_to_json(rep)) == rep);

  VerificationReport pass;
  pass.outcome = VerificationReport::Outcome::kPass;
  pass.margin = 0.25;
  pass.samples_used = 10;
  CHECK(report_from_json(report_to_json(pass)) == pass);

  VerificationReport gated;
  gated.outcome = VerificationReport::Outcome::kHypothesisNotMet;
  gated.note = "hypothesis not met: requires f'(0) = 1";
  CHECK(report_from_json(report_to_json(gated)) == gated);
  CHECK(report_to_json(gated).find("hypothesis_not_met") != std::string::npos);

  // The four contract keys are always present.
  const std::string text = report_to_json(pass);
  for (const char* key : {"passed", "margin", "witness", "samples_used"}) {
    CHECK(text.find(key) != std::string::npos);
  }
}

TEST_CASE("function spec resolution") {
  SUBCASE("builtins") {
    CHECK(resolve_function_spec("identity").resolved.coeffs() ==
          SliceSeries::identity().coeffs());
    const FunctionSpec c = resolve_function_spec("const:(0,1,0,0)");
    CHECK(c.resolved.order() == 0);
    CHECK(c.resolved.coeff(0) == Quaternion::i());
    const FunctionSpec p = resolve_function_spec("poly:0,1,0.1");
    CHECK(p.resolved.order() == 2);
    CHECK(p.resolved.coeff(2) == Quaternion(0.1));
    CHECK(p.resolved.exact());
  }
  SUBCASE("mobius and extremal builtins") {
    const FunctionSpec m = resolve_function_spec("mobius:0.3,1", 64);
    CHECK(m.resolved.coeff(0) == Quaternion(-0.3));
    CHECK_FALSE(m.resolved.exact());
    const FunctionSpec mq = resolve_function_spec("mobius:(0,0.2,0,0.1),(1,0,0,0)", 64);
    CHECK(mq.resolved.coeff(0).norm() ==
          doctest::Approx(Quaternion{0, 0.2, 0, 0.1}.norm()));
    const FunctionSpec e = resolve_function_spec("extremal:0.6", 64);
    CHECK(e.resolved.coeff(1) == Quaternion(0.6));
    CHECK_FALSE(e.resolved.exact());
  }
  SUBCASE("inline JSON") {
    const FunctionSpec j =
        resolve_function_spec(R"({"coeffs": [[0,0,0,0],[0,0,1,0]]})");
    CHECK(j.resolved.coeff(1) == Quaternion::j());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(resolve_function_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(resolve_function_spec("unknown:1"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_function_spec("mobius:1.5,1"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_function_spec("extremal:2"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_function_spec("poly:abc"), std::invalid_argument);
    CHECK_THROWS_AS(resolve_function_spec("@/no/such/file.json"),
                    std::invalid_argument);
    CHECK_THROWS_AS(resolve_function_spec("mobius:0.3"), std::invalid_argument);
  }
}
