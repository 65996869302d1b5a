#include <doctest.h>

#include <random>

#include "nilab/springer.hpp"

using namespace nilab;

namespace {

Mat jordan_matrix(FieldPtr f, uint32_t n, const Partition& lam) {
  Mat J(f, n, n);
  uint32_t pos = 0;
  for (uint32_t part : lam) {
    for (uint32_t i = 0; i + 1 < part; ++i) J.at(pos + i, pos + i + 1) = 1;
    pos += part;
  }
  return J;
}

}  // namespace

TEST_CASE("flag counts") {
  auto f3 = ExtField::make(3, 1);
  CHECK(flag_count_formula(3, 3) == 52);
  CHECK(enumerate_flags(f3, 3).size() == 52);

  auto f2 = ExtField::make(2, 1);
  CHECK(flag_count_formula(2, 2) == 3);
  CHECK(enumerate_flags(f2, 2).size() == 3);
  CHECK(flag_count_formula(4, 2) == 315);
  CHECK(enumerate_flags(f2, 4).size() == 315);

  CHECK(flag_count_formula(3, 9) == 910);
  CHECK_THROWS_AS(enumerate_flags(f3, 3, 10), ResourceError);
}

TEST_CASE("flags are strictly increasing chains in canonical echelon form") {
  auto f3 = ExtField::make(3, 1);
  auto flags = enumerate_flags(f3, 3);
  for (const auto& flag : flags) {
    REQUIRE(flag.chain.size() == 2);
    CHECK(flag.chain[0].rows() == 1);
    CHECK(flag.chain[1].rows() == 2);
    // F_1 < F_2: the line's vector lies in the plane
    Mat joint(f3, 3, 3);
    for (uint32_t j = 0; j < 3; ++j) {
      joint.at(0, j) = flag.chain[1].at(0, j);
      joint.at(1, j) = flag.chain[1].at(1, j);
      joint.at(2, j) = flag.chain[0].at(0, j);
    }
    CHECK(joint.rank() == 2);
  }
}

TEST_CASE("fiber sizes per orbit at (3,3)") {
  auto f3 = ExtField::make(3, 1);
  auto flags = enumerate_flags(f3, 3);
  RunConfig cfg;
  auto cone = enumerate_nilcone(f3, 3, cfg);
  auto orbits = adjoint_orbits(cone, f3, 3);

  // zero lowers every chain
  auto zero_rec = springer_fiber(pgl_zero(f3, 3), flags);
  CHECK(zero_rec.fiber_size == 52);
  CHECK(zero_rec.expected_dim == 3);

  for (const auto& rec : orbits.records) {
    auto fr = springer_fiber(rec.representative, flags);
    if (rec.jordan_type == Partition{3}) {
      CHECK(fr.fiber_size == 1);
      CHECK(fr.expected_dim == 0);
    } else if (rec.jordan_type == Partition{2, 1}) {
      CHECK(fr.fiber_size == 7);  // 2q + 1 at q = 3
      CHECK(fr.expected_dim == 1);
    }
  }
  CHECK_THROWS_AS(springer_fiber(make_pgl(f3, 3, {1, 0, 0, 0, 0, 0, 0, 0, 0}), flags),
                  std::invalid_argument);
}

TEST_CASE("fiber size is a conjugation invariant") {
  auto f3 = ExtField::make(3, 1);
  auto flags = enumerate_flags(f3, 3);
  RunConfig cfg;
  auto cone = enumerate_nilcone(f3, 3, cfg);
  auto orbits = adjoint_orbits(cone, f3, 3);
  auto gens = pgl_group_generators(f3, 3);
  std::mt19937_64 rng(1);
  for (const auto& rec : orbits.records) {
    uint64_t base = springer_fiber(rec.representative, flags).fiber_size;
    Mat X(f3, 3, 3);
    for (uint32_t i = 0; i < 3; ++i)
      for (uint32_t j = 0; j < 3; ++j) X.at(i, j) = rec.representative.rep[i * 3 + j];
    for (int trial = 0; trial < 50; ++trial) {
      Mat g = Mat::identity(f3, 3);
      for (int s = 0; s < 10; ++s) g = g * gens[rng() % gens.size()];
      Mat Y = g * X * g.inverse();
      auto y = make_pgl(f3, 3, std::vector<uint32_t>(Y.data()));
      CHECK(springer_fiber(y, flags).fiber_size == base);
    }
  }
}

TEST_CASE("incidence double count at (3,3)") {
  auto f3 = ExtField::make(3, 1);
  auto flags = enumerate_flags(f3, 3);
  RunConfig cfg;
  auto cone = enumerate_nilcone(f3, 3, cfg);
  uint64_t total = 0;
  for (const auto& x : cone.elements) total += springer_fiber(x, flags).fiber_size;
  CHECK(total == 52 * 27);  // flag count times q^(n(n-1)/2)
}

TEST_CASE("fibers over the larger field") {
  auto f9 = ExtField::make(3, 2);
  auto flags9 = enumerate_flags(f9, 3);
  REQUIRE(flags9.size() == 910);
  CHECK(springer_fiber_size(jordan_matrix(f9, 3, {2, 1}), flags9) == 19);  // 2q + 1 at q = 9
  CHECK(springer_fiber_size(jordan_matrix(f9, 3, {3}), flags9) == 1);
  CHECK(springer_fiber_size(jordan_matrix(f9, 3, {1, 1, 1}), flags9) == 910);
}

TEST_CASE("the weak containment variant agrees with the strict one on nilpotent lifts") {
  // induced maps on the one-dimensional graded pieces of a preserved flag are
  // nilpotent, hence zero, so preserving and strictly lowering coincide
  auto f3 = ExtField::make(3, 1);
  auto flags = enumerate_flags(f3, 3);
  for (const auto& lam : all_partitions(3)) {
    Mat J = jordan_matrix(f3, 3, lam);
    CHECK(springer_fiber_size(J, flags, true) == springer_fiber_size(J, flags, false));
  }
}

TEST_CASE("springer check battery") {
  RunConfig cfg;
  SUBCASE("(3,3) with two-q dimensions") {
    auto checks = run_springer_checks(3, 3, 1, std::nullopt, true, cfg);
    for (const auto& c : checks) {
      CAPTURE(c.name);
      CHECK(c.status == CheckStatus::Pass);
    }
  }
  SUBCASE("partition filter restricts the rows") {
    auto checks = run_springer_checks(3, 3, 1, Partition{2, 1}, false, cfg);
    for (const auto& c : checks) {
      if (c.name == "fiber-dimensions") {
        REQUIRE(c.actual["fibers"].size() == 1);
        CHECK(c.actual["fibers"][0]["fiber_size"] == 7);
      }
    }
  }
}
