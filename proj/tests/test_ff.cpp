#include <doctest.h>

#include "nilab/ff.hpp"

using namespace nilab;

namespace {

// oracle: monic degree-k polynomial over F_p has a root?
bool has_root(uint32_t p, uint32_t k, const std::vector<uint32_t>& cs) {
  for (uint32_t x = 0; x < p; ++x) {
    uint64_t v = 1;
    for (uint32_t i = 0; i < k; ++i) v = v * x % p;
    for (uint32_t i = 0; i < k; ++i) {
      uint64_t t = cs[i];
      for (uint32_t j = 0; j < i; ++j) t = t * x % p;
      v = (v + t) % p;
    }
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("make_field picks the least irreducible modulus") {
  auto f3 = ExtField::make(3, 1);
  CHECK(f3->q() == 3);
  CHECK(f3->modulus() == std::vector<uint32_t>{0});  // modulus x

  // oracle: enumerate all monic quadratics over F_2; exactly one is irreducible
  std::vector<std::vector<uint32_t>> irreducible;
  for (uint32_t c1 = 0; c1 < 2; ++c1)
    for (uint32_t c0 = 0; c0 < 2; ++c0)
      if (!has_root(2, 2, {c0, c1})) irreducible.push_back({c0, c1});
  REQUIRE(irreducible.size() == 1);
  CHECK(irreducible[0] == std::vector<uint32_t>{1, 1});  // x^2 + x + 1

  auto f4 = ExtField::make(2, 2);
  CHECK(f4->q() == 4);
  CHECK(f4->modulus() == irreducible[0]);

  CHECK_THROWS_AS(ExtField::make(4, 1), std::invalid_argument);  // non-prime
  CHECK_THROWS_AS(ExtField::make(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(ExtField::make(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(ExtField::make(257, 1), std::invalid_argument);
}

TEST_CASE("field arithmetic examples") {
  auto f3 = ExtField::make(3, 1);
  CHECK(f3->add(2, 2) == 1);

  auto f4 = ExtField::make(2, 2);
  // x has code 2, x+1 has code 3; oracle: multiply out and reduce by x^2+x+1
  uint32_t x = f4->encode({0, 1});
  uint32_t x1 = f4->encode({1, 1});
  CHECK(f4->mul(x, x1) == 1);
  CHECK(f4->inv(x) == x1);

  auto f2 = ExtField::make(2, 1);
  CHECK_THROWS_AS(f2->inv(0), std::domain_error);

  FieldElement a{f3, 2}, b{f4, 2};
  CHECK_THROWS_AS(add(a, b), std::invalid_argument);
}

TEST_CASE("frobenius") {
  auto f3 = ExtField::make(3, 1);
  CHECK(f3->frobenius(2) == 2);  // identity on the prime field

  auto f4 = ExtField::make(2, 2);
  uint32_t x = f4->encode({0, 1});
  CHECK(f4->frobenius(x) == f4->encode({1, 1}));  // x^2 = x + 1 mod x^2+x+1
  CHECK(f4->frobenius(f4->frobenius(x)) == x);    // order-k automorphism
}

TEST_CASE("field axioms exhaustive for q <= 64") {
  for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    auto F = ExtField::make(p, k);
    uint32_t q = F->q();
    REQUIRE(q <= 64);
    for (uint32_t a = 0; a < q; ++a) {
      CHECK(F->pow(a, q) == a);  // a^q = a
      if (a) CHECK(F->mul(F->inv(a), a) == 1);
      for (uint32_t b = 0; b < q; ++b) {
        CHECK(F->add(a, b) == F->add(b, a));
        CHECK(F->mul(a, b) == F->mul(b, a));
        for (uint32_t c = 0; c < q; ++c) {
          CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
          CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
          CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        }
      }
    }
    // the Frobenius fixed field is exactly F_p (codes 0..p-1)
    for (uint32_t a = 0; a < q; ++a) {
      bool fixed = F->frobenius(a) == a;
      CHECK(fixed == (a < p));
    }
  }
}

TEST_CASE("large prime field without tables") {
  auto F = ExtField::make(251, 1);
  CHECK(F->mul(250, 250) == 1);  // (-1)^2
  CHECK(F->inv(2) == 126);
  auto F3 = ExtField::make(251, 3);
  uint32_t a = F3->encode({7, 11, 13});
  CHECK(F3->mul(a, F3->inv(a)) == 1);
}
