#include <doctest.h>

#include <cmath>
#include <random>

#include "sliceball/quaternion.hpp"

using namespace sliceball;

namespace {

Quaternion random_quat(std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return Quaternion{d(rng), d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("basis multiplication rules") {
  CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
  CHECK(Quaternion::j() * Quaternion::k() == Quaternion::i());
  CHECK(Quaternion::k() * Quaternion::i() == Quaternion::j());
  CHECK(Quaternion::i() * Quaternion::i() == -Quaternion::one());
  CHECK(Quaternion::j() * Quaternion::j() == -Quaternion::one());
  CHECK(Quaternion::k() * Quaternion::k() == -Quaternion::one());
  // (1+i)(1-i) = 2
  const Quaternion a{1, 1, 0, 0};
  const Quaternion b{1, -1, 0, 0};
  CHECK(distance_between(a * b, Quaternion(2.0)) == doctest::Approx(0.0));
  // (1+j)(2+k) = 2 + i + 2j + k, expanded by hand via jk = i
  const Quaternion lhs = Quaternion{1, 0, 1, 0} * Quaternion{2, 0, 0, 1};
  CHECK(distance_between(lhs, Quaternion{2, 1, 2, 1}) == doctest::Approx(0.0));
}

TEST_CASE("conjugate and inverse") {
  CHECK(Quaternion{1, 1, 1, 0}.conj() == Quaternion{1, -1, -1, 0});
  CHECK(distance_between(Quaternion(2.0).inverse(), Quaternion(0.5)) ==
        doctest::Approx(0.0));
  // inverse(i+j) = -(i+j)/2 since |i+j|^2 = 2
  const Quaternion q{0, 1, 1, 0};
  CHECK(distance_between(q.inverse(), Quaternion{0, -0.5, -0.5, 0}) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(Quaternion::zero().inverse(), "zero quaternion",
                       std::domain_error);

  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const Quaternion r = random_quat(rng, 2.0);
    if (r.norm() < 1e-6) {
      continue;
    }
    CHECK(distance_between(r * r.inverse(), Quaternion::one()) < 1e-12);
    // conj(q) q = |q|^2
    CHECK(distance_between(r.conj() * r, Quaternion(r.norm_sq())) < 1e-12);
  }
}

TEST_CASE("multiplication is associative and multiplicative on the norm") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 500; ++it) {
    const Quaternion a = random_quat(rng);
    const Quaternion b = random_quat(rng);
    const Quaternion c = random_quat(rng);
    CHECK(distance_between((a * b) * c, a * (b * c)) < 1e-12);
    CHECK((a * b).norm() == doctest::Approx(a.norm() * b.norm()).epsilon(1e-12));
  }
}

TEST_CASE("unit pure quaternions square to -1") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    Quaternion v = random_quat(rng);
    v.w = 0.0;
    if (v.norm() < 1e-6) {
      continue;
    }
    const ImaginaryUnit u = ImaginaryUnit::normalized(v);
    CHECK(distance_between(u.value() * u.value(), -Quaternion::one()) < 1e-12);
  }
  CHECK_THROWS_AS(ImaginaryUnit(Quaternion{0.5, 1, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(ImaginaryUnit(Quaternion{0, 2, 0, 0}), std::domain_error);
}

TEST_CASE("decompose") {
  SUBCASE("1 + 2i") {
    const auto d = decompose(Quaternion{1, 2, 0, 0});
    CHECK(d.x == doctest::Approx(1.0));
    CHECK(d.y == doctest::Approx(2.0));
    CHECK(distance_between(d.axis.value(), Quaternion::i()) < 1e-15);
  }
  SUBCASE("real input uses the conventional axis") {
    const auto d = decompose(Quaternion(3.0));
    CHECK(d.x == doctest::Approx(3.0));
    CHECK(d.y == doctest::Approx(0.0));
    CHECK(distance_between(d.axis.value(), Quaternion::i()) < 1e-15);
  }
  SUBCASE("i + j") {
    const auto d = decompose(Quaternion{0, 1, 1, 0});
    CHECK(d.x == doctest::Approx(0.0));
    CHECK(d.y == doctest::Approx(std::sqrt(2.0)));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(distance_between(d.axis.value(), Quaternion{0, inv_sqrt2, inv_sqrt2, 0}) <
          1e-15);
  }
  SUBCASE("left inverse of composition") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 300; ++it) {
      const Quaternion q = random_quat(rng);
      const auto d = decompose(q);
      const Quaternion rebuilt = Quaternion(d.x) + d.axis.value() * d.y;
      CHECK(distance_between(rebuilt, q) < 1e-13);
      CHECK(d.y >= 0.0);
    }
  }
}

TEST_CASE("same_sphere") {
  CHECK(same_sphere(Quaternion{1, 2, 0, 0}, Quaternion{1, 0, 2, 0}));
  CHECK_FALSE(same_sphere(Quaternion{1, 2, 0, 0}, Quaternion{1, 3, 0, 0}));

  // Conjugation h^-1 q h preserves the sphere of q.
  std::mt19937_64 rng(19);
  for (int it = 0; it < 300; ++it) {
    const Quaternion q = random_quat(rng);
    const Quaternion h = random_quat(rng);
    if (h.norm() < 1e-6) {
      continue;
    }
    CHECK(same_sphere(h.inverse() * q * h, q));
  }
}

TEST_CASE("apollonius-style ball membership helper") {
  const Ball b(Quaternion(0.5), 0.25);
  CHECK(b.contains(Quaternion(0.6)));
  CHECK_FALSE(b.contains(Quaternion(0.8)));
  CHECK_THROWS_AS(Ball(Quaternion::zero(), -1.0), std::domain_error);
}
