#include <doctest.h>

#include <algorithm>
#include <random>

#include "nilab/linalg.hpp"
#include "nilab/mpoly.hpp"
#include "nilab/weylinv.hpp"

using namespace nilab;

namespace {

MultiPoly parse3(const std::string& s, size_t nvars = 2) {
  return parse_poly(s, ExtField::make(3, 1), nvars);
}

// oracle: quotient dimension by exhaustive monomial enumeration up to a bound;
// a degree-d monomial is standard iff no leading term of the basis divides it
uint64_t quotient_dim_oracle(const PolyIdeal& with_gb, uint32_t degree_bound) {
  const auto& gb = *with_gb.gb;
  size_t nv = gb[0].nvars();
  std::vector<Monomial> lts;
  for (const auto& g : gb) lts.push_back(g.leading_monomial(with_gb.order));
  uint64_t count = 0;
  Monomial cur(nv, 0);
  std::function<void(size_t, uint32_t)> rec = [&](size_t v, uint32_t left) {
    if (v == nv) {
      for (const auto& lt : lts)
        if (mono_divides(lt, cur)) return;
      ++count;
      return;
    }
    for (uint32_t e = 0; e <= left; ++e) {
      cur[v] = static_cast<uint8_t>(e);
      rec(v + 1, left - e);
      cur[v] = 0;
    }
  };
  for (uint32_t d = 0; d <= degree_bound; ++d) {
    // enumerate by total degree to keep the bound meaningful
  }
  rec(0, degree_bound);
  return count;
}

MultiPoly random_poly(std::mt19937_64& rng, FieldPtr f, size_t nvars, uint32_t maxdeg,
                      size_t terms) {
  MultiPoly out(f, nvars);
  std::uniform_int_distribution<uint32_t> coeff(1, f->q() - 1);
  std::uniform_int_distribution<uint32_t> expo(0, maxdeg);
  for (size_t t = 0; t < terms; ++t) {
    Monomial m(nvars, 0);
    uint32_t left = maxdeg;
    for (size_t v = 0; v < nvars; ++v) {
      uint32_t e = expo(rng) % (left + 1);
      m[v] = static_cast<uint8_t>(e);
      left -= e;
    }
    out.set_coeff(m, coeff(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("groebner basics") {
  auto f = ExtField::make(3, 1);
  SUBCASE("single generator") {
    PolyIdeal I{{parse3("x0")}, MonomialOrder::Lex, std::nullopt};
    I = groebner(std::move(I));
    REQUIRE(I.gb->size() == 1);
    CHECK((*I.gb)[0] == parse3("x0"));
  }
  SUBCASE("x^2 - y and y^2 are already a basis under lex x > y") {
    // oracle: the single S-polynomial reduces to zero, run by hand
    PolyIdeal I{{parse3("x0^2 + 2*x1"), parse3("x1^2")}, MonomialOrder::Lex, std::nullopt};
    I = groebner(std::move(I));
    REQUIRE(I.gb->size() == 2);
    CHECK((*I.gb)[0] == parse3("x0^2 + 2*x1"));
    CHECK((*I.gb)[1] == parse3("x1^2"));
  }
  SUBCASE("unit ideal") {
    PolyIdeal I{{parse3("x0"), parse3("x0 + 1")}, MonomialOrder::Lex, std::nullopt};
    I = groebner(std::move(I));
    REQUIRE(I.gb->size() == 1);
    CHECK((*I.gb)[0].degree() == 0);
  }
  SUBCASE("empty generator list rejected") {
    PolyIdeal I{{}, MonomialOrder::Lex, std::nullopt};
    CHECK_THROWS_AS(groebner(std::move(I)), std::invalid_argument);
  }
}

TEST_CASE("groebner properties") {
  auto f = ExtField::make(3, 1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<MultiPoly> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_poly(rng, f, 2, 3, 3));
    bool all_zero = true;
    for (const auto& g : gens) all_zero = all_zero && g.is_zero();
    if (all_zero) continue;
    PolyIdeal I{gens, MonomialOrder::GRevLex, std::nullopt};
    I = groebner(I);
    // every generator reduces to zero against the basis
    for (const auto& g : gens) CHECK(normal_form(g, *I.gb, I.order).is_zero());
    // the basis is self-reduced
    for (size_t i = 0; i < I.gb->size(); ++i) {
      std::vector<MultiPoly> others;
      for (size_t j = 0; j < I.gb->size(); ++j)
        if (j != i) others.push_back((*I.gb)[j]);
      if (!others.empty()) CHECK(normal_form((*I.gb)[i], others, I.order) == (*I.gb)[i]);
    }
    // permuting the generator list yields the identical reduced basis
    auto permuted = gens;
    std::shuffle(permuted.begin(), permuted.end(), rng);
    PolyIdeal J{permuted, MonomialOrder::GRevLex, std::nullopt};
    J = groebner(J);
    CHECK(*I.gb == *J.gb);
  }
}

TEST_CASE("quotient dimension") {
  auto f2 = ExtField::make(2, 1);
  SUBCASE("(x^2, y^2) has the basis 1, x, y, xy") {
    PolyIdeal I{{parse_poly("x0^2", f2, 2), parse_poly("x1^2", f2, 2)},
                MonomialOrder::GRevLex, std::nullopt};
    auto qd = quotient_dimension(I);
    CHECK(qd.finite);
    CHECK(qd.dim == 4);
  }
  SUBCASE("(x) in two variables is infinite") {
    PolyIdeal I{{parse3("x0")}, MonomialOrder::GRevLex, std::nullopt};
    CHECK_FALSE(quotient_dimension(I).finite);
  }
  SUBCASE("coinvariant count for the (3,3) images is the group order") {
    auto sbars = elementary_symmetric_images(3, 3);
    PolyIdeal I{sbars, MonomialOrder::GRevLex, std::nullopt};
    auto qd = quotient_dimension(I);
    CHECK(qd.finite);
    CHECK(qd.dim == 6);
  }
  SUBCASE("randomized ideals agree with the monomial-enumeration oracle") {
    std::mt19937_64 rng(11);
    int finite_seen = 0;
    for (int trial = 0; trial < 30 && finite_seen < 10; ++trial) {
      std::vector<MultiPoly> gens;
      for (int g = 0; g < 3; ++g) {
        auto p = random_poly(rng, f2, 2, 3, 3);
        if (!p.is_zero()) gens.push_back(p);
      }
      if (gens.empty()) continue;
      PolyIdeal I{gens, MonomialOrder::GRevLex, std::nullopt};
      I = groebner(I);
      auto qd = quotient_dimension(I);
      if (!qd.finite) continue;
      ++finite_seen;
      CHECK(qd.dim == quotient_dim_oracle(I, 16));
    }
    CHECK(finite_seen >= 10);
  }
}

TEST_CASE("algebraic independence") {
  auto f = ExtField::make(3, 1);
  CHECK(algebraically_independent({parse3("x0"), parse3("x1")}));
  CHECK_FALSE(algebraically_independent({parse3("x0"), parse3("x0^2")}));
  // a single polynomial is independent iff nonconstant
  CHECK(algebraically_independent({parse3("x0 + x1^2")}));
  CHECK_FALSE(algebraically_independent({parse3("2")}));
  CHECK_FALSE(algebraically_independent({MultiPoly::zero(f, 2)}));
  // images of the elementary symmetric polynomials at (3,3)
  CHECK(algebraically_independent(elementary_symmetric_images(3, 3)));
  // more polynomials than variables always satisfy a relation
  CHECK_FALSE(algebraically_independent({parse3("x0"), parse3("x1"), parse3("x0 + x1")}));
}

TEST_CASE("subalgebra membership") {
  auto sbars = elementary_symmetric_images(3, 3);
  MultiPoly s2 = sbars[0], s3 = sbars[1];
  CHECK(subalgebra_membership(s2 * s2 + s3, sbars));
  auto f = ExtField::make(3, 1);
  CHECK_FALSE(subalgebra_membership(MultiPoly::variable(f, 2, 0), sbars));
}

TEST_CASE("jacobian rank") {
  auto f2 = ExtField::make(2, 1);
  // d(x^2)/dx = 2x = 0 in characteristic 2
  CHECK(jacobian_rank_at({parse_poly("x0^2", f2, 2)}, {1, 1}) == 0);
  auto f3 = ExtField::make(3, 1);
  CHECK(jacobian_rank_at({parse3("x0"), parse3("x1")}, {0, 0}) == 2);
}

TEST_CASE("formal derivative satisfies the Leibniz rule") {
  auto f = ExtField::make(3, 1);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_poly(rng, f, 2, 3, 3);
    auto b = random_poly(rng, f, 2, 3, 3);
    for (size_t v = 0; v < 2; ++v) {
      auto lhs = (a * b).derivative(v);
      auto rhs = a.derivative(v) * b + a * b.derivative(v);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("budget exceeded raises a resource error") {
  auto sbars = elementary_symmetric_images(4, 2);
  PolyIdeal I{sbars, MonomialOrder::GRevLex, std::nullopt};
  GroebnerBudget tiny{1, 5000};
  CHECK_THROWS_AS(groebner(I, tiny), ResourceError);
  GroebnerBudget tiny_basis{20000, 1};
  CHECK_THROWS_AS(groebner(I, tiny_basis), ResourceError);
}

TEST_CASE("polynomial text syntax round trip") {
  auto f = ExtField::make(5, 1);
  MultiPoly p = parse_poly("2*x0^2*x1 + x2", f, 3);
  CHECK(p.term_count() == 2);
  CHECK(p.to_string() == "2*x0^2*x1 + x2");
  CHECK(parse_poly(p.to_string(), f, 3) == p);
  CHECK(parse_poly("x0 - x0", f, 3).is_zero());
  CHECK_THROWS_AS(parse_poly("x9", f, 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x0 + + x1", f, 3), std::invalid_argument);
}

TEST_CASE("evaluation is a ring homomorphism") {
  auto f = ExtField::make(3, 1);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_poly(rng, f, 2, 3, 3);
    auto b = random_poly(rng, f, 2, 3, 3);
    std::vector<uint32_t> pt{static_cast<uint32_t>(rng() % 3), static_cast<uint32_t>(rng() % 3)};
    CHECK((a + b).eval(pt) == f->add(a.eval(pt), b.eval(pt)));
    CHECK((a * b).eval(pt) == f->mul(a.eval(pt), b.eval(pt)));
  }
}
