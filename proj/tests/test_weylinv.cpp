#include <doctest.h>

#include "nilab/weylinv.hpp"

using namespace nilab;

namespace {

// the unreduced n-dimensional permutation action of S_n over F_p
GroupAction permutation_action(uint32_t n, uint32_t p) {
  GroupAction a;
  a.field = ExtField::make(p, 1);
  a.dim = n;
  a.group_order = 1;
  for (uint32_t i = 2; i <= n; ++i) a.group_order *= i;
  a.label = "S" + std::to_string(n) + "-permutation";
  auto perm = [&](const std::vector<uint32_t>& sigma) {
    Mat m(a.field, n, n);
    for (uint32_t j = 0; j < n; ++j) m.at(sigma[j], j) = 1;
    return m;
  };
  std::vector<uint32_t> tr(n), cy(n);
  for (uint32_t i = 0; i < n; ++i) tr[i] = i;
  std::swap(tr[0], tr[1]);
  for (uint32_t i = 0; i < n; ++i) cy[i] = (i + 1) % n;
  a.generators = {perm(tr), perm(cy)};
  return a;
}

bool scalar_multiple(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.terms().size() != b.terms().size()) return false;
  const auto& [m0, c0] = *a.terms().begin();
  uint32_t cb = b.coeff(m0);
  if (!cb) return false;
  uint32_t s = a.field()->mul(c0, a.field()->inv(cb));
  return a == b.scaled(s);
}

}  // namespace

TEST_CASE("sn quotient action construction") {
  auto a22 = build_sn_quotient_action(2, 2);
  CHECK(a22.dim == 1);
  for (const auto& g : a22.generators) CHECK(g == Mat::identity(a22.field, 1));

  auto a33 = build_sn_quotient_action(3, 3);
  CHECK(a33.dim == 2);
  CHECK(matrix_group_order(a33) == 6);

  CHECK_THROWS_AS(build_sn_quotient_action(3, 2), std::invalid_argument);  // p does not divide n
}

TEST_CASE("g2 weyl action image orders") {
  auto g2 = build_g2_weyl_action(2);
  CHECK(matrix_group_order(g2) == 6);  // mod-2 reduction is not faithful
  CHECK_FALSE(is_faithful(g2));

  auto g3 = build_g2_weyl_action(3);
  CHECK(matrix_group_order(g3) == 12);
  CHECK(is_faithful(g3));

  CHECK_THROWS_AS(build_g2_weyl_action(5), std::invalid_argument);
}

TEST_CASE("faithfulness of the quotient family") {
  CHECK_FALSE(is_faithful(build_sn_quotient_action(2, 2)));
  CHECK(is_faithful(build_sn_quotient_action(3, 3)));
  CHECK(is_faithful(build_sn_quotient_action(4, 2)));
  CHECK(is_faithful(build_sn_quotient_action(5, 5)));
  CHECK(is_faithful(build_sn_quotient_action(6, 2)));
  CHECK(is_faithful(build_sn_quotient_action(6, 3)));
}

TEST_CASE("invariant spaces degree by degree") {
  auto a33 = build_sn_quotient_action(3, 3);
  CHECK(invariant_space(a33, 0).size() == 1);  // constants
  CHECK(invariant_space(a33, 1).empty());
  auto d2 = invariant_space(a33, 2);
  REQUIRE(d2.size() == 1);
  auto sbars = elementary_symmetric_images(3, 3);
  CHECK(scalar_multiple(d2[0], sbars[0]));  // spanned by the image of s_2
  CHECK_THROWS_AS(invariant_space(a33, 13, 12), ResourceError);
}

TEST_CASE("elementary symmetric images") {
  auto s33 = elementary_symmetric_images(3, 3);
  REQUIRE(s33.size() == 2);
  CHECK(s33[0].degree() == 2);
  CHECK(s33[1].degree() == 3);
  CHECK(s33[0].is_homogeneous());

  auto s22 = elementary_symmetric_images(2, 2);
  REQUIRE(s22.size() == 1);
  // e_2 = e_1 * e_2 with e_2 = -e_1 = e_1 in characteristic 2
  auto f2 = ExtField::make(2, 1);
  CHECK(s22[0] == parse_poly("x0^2", f2, 1));

  auto s42 = elementary_symmetric_images(4, 2);
  REQUIRE(s42.size() == 3);
  CHECK(s42[0].degree() == 2);
  CHECK(s42[1].degree() == 3);
  CHECK(s42[2].degree() == 4);

  CHECK_THROWS_AS(elementary_symmetric_images(3, 2), std::invalid_argument);
}

TEST_CASE("polynomiality certificates") {
  SUBCASE("(3,3) images of s_2, s_3") {
    auto a = build_sn_quotient_action(3, 3);
    auto cert = certify_polynomial_invariants(a, elementary_symmetric_images(3, 3));
    CHECK(cert.all_invariant);
    CHECK(cert.independent);
    CHECK(cert.degrees == std::vector<uint32_t>{2, 3});
    CHECK(cert.degree_product == 6);
    CHECK(cert.image_order == 6);
    CHECK(cert.certified_polynomial);
  }
  SUBCASE("G2 mod 2 degree search finds degrees (2,3)") {
    auto a = build_g2_weyl_action(2);
    auto gens = find_polynomial_generators(a, 12);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].degree() == 2);
    CHECK(gens[1].degree() == 3);
    auto cert = certify_polynomial_invariants(a, gens);
    CHECK(cert.certified_polynomial);
    CHECK(cert.image_order == 6);
    CHECK(cert.group_order == 12);  // both orders reported for the unfaithful action
  }
  SUBCASE("dependent candidates are rejected") {
    auto a = build_sn_quotient_action(3, 3);
    auto sbars = elementary_symmetric_images(3, 3);
    auto cert = certify_polynomial_invariants(a, {sbars[0], sbars[0] * sbars[0]});
    CHECK_FALSE(cert.independent);
    CHECK_FALSE(cert.certified_polynomial);
  }
  SUBCASE("degree product of certified runs never undershoots the image order") {
    for (auto [n, p] : {std::pair<uint32_t, uint32_t>{3, 3}, {4, 2}}) {
      auto a = build_sn_quotient_action(n, p);
      auto cert = certify_polynomial_invariants(a, elementary_symmetric_images(n, p));
      CHECK(cert.independent);
      CHECK(cert.degree_product >= cert.image_order);
    }
  }
}

TEST_CASE("coinvariant dimensions") {
  auto a33 = build_sn_quotient_action(3, 3);
  auto q33 = coinvariant_dimension(a33, elementary_symmetric_images(3, 3));
  CHECK(q33.finite);
  CHECK(q33.dim == 6);

  auto a42 = build_sn_quotient_action(4, 2);
  auto q42 = coinvariant_dimension(a42, elementary_symmetric_images(4, 2));
  CHECK(q42.finite);
  CHECK(q42.dim == 24);

  auto g2 = build_g2_weyl_action(2);
  auto gens = find_polynomial_generators(g2, 12);
  auto qg = coinvariant_dimension(g2, gens);
  CHECK(qg.finite);
  CHECK(qg.dim == 6);  // the image order, not the abstract order 12
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(build_g2_weyl_action(2)));
  CHECK(is_irreducible(build_sn_quotient_action(2, 2)));  // one-dimensional
  // the unreduced permutation module has the invariant line spanned by (1,..,1)
  CHECK_FALSE(is_irreducible(permutation_action(3, 3)));
  GroupAction big = permutation_action(3, 3);
  big.dim = 7;  // over budget
  CHECK_THROWS_AS(is_irreducible(big), ResourceError);
}

TEST_CASE("low-degree invariants lie in the generator subalgebra at (3,3)") {
  auto a = build_sn_quotient_action(3, 3);
  auto sbars = elementary_symmetric_images(3, 3);
  for (uint32_t d = 1; d <= 6; ++d) {
    for (const auto& inv : invariant_space(a, d))
      CHECK(subalgebra_membership(inv, sbars));
  }
}

TEST_CASE("invariant spaces grow when generators are removed") {
  auto a = build_sn_quotient_action(4, 2);
  for (uint32_t d = 1; d <= 4; ++d) {
    size_t full = invariant_space(a, d).size();
    for (size_t drop = 0; drop < a.generators.size(); ++drop) {
      GroupAction sub = a;
      sub.generators.erase(sub.generators.begin() + static_cast<long>(drop));
      CHECK(invariant_space(sub, d).size() >= full);
    }
  }
}
