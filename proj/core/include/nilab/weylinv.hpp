#pragma once

// Finite matrix-group actions over F_p, degreewise invariant rings,
// polynomiality certificates, faithfulness, irreducibility, and
// coinvariant-dimension (freeness) checks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilab/linalg.hpp"
#include "nilab/mpoly.hpp"

namespace nilab {

struct GroupAction {
  FieldPtr field;                 // prime field
  uint32_t dim = 0;               // module dimension
  std::vector<Mat> generators;    // invertible dim x dim matrices
  uint64_t group_order = 0;       // order of the abstract group, 0 if unknown
  std::string label;
};

// order of the generated matrix group (BFS closure; throws ResourceError past the budget)
uint64_t matrix_group_order(const GroupAction& a, uint64_t budget = 10000);

// S_n acting on X = V/U in the basis of images of e_1..e_{n-1}; generated by
// the transposition (1 2) and the n-cycle; requires p | n
GroupAction build_sn_quotient_action(uint32_t n, uint32_t p);

// 2-dimensional action of the order-12 dihedral Weyl group of G_2 over F_p,
// p in {2, 3}, via the simple reflections reduced mod p
GroupAction build_g2_weyl_action(uint32_t p);

// true iff the matrix group has the full abstract order
bool is_faithful(const GroupAction& a, uint64_t budget = 10000);

// basis of the degree-d invariants of Sym(X) under substitution by each
// generator, in canonical (reduced-echelon) form
std::vector<MultiPoly> invariant_space(const GroupAction& a, uint32_t d, uint32_t degree_cap = 12);

// images of the elementary symmetric polynomials s_2..s_n under e_n -> -(e_1+...+e_{n-1});
// requires p | n
std::vector<MultiPoly> elementary_symmetric_images(uint32_t n, uint32_t p);

struct InvariantCert {
  std::vector<uint32_t> degrees;
  std::vector<MultiPoly> generators;
  uint64_t image_order = 0;
  uint64_t group_order = 0;       // abstract order, for unfaithful-action reporting
  bool all_invariant = false;
  bool independent = false;
  uint64_t degree_product = 0;
  bool certified_polynomial = false;
};

InvariantCert certify_polynomial_invariants(const GroupAction& a,
                                            const std::vector<MultiPoly>& candidates,
                                            const GroebnerBudget& budget = {});

// dimension of Sym(X)/(gens); infinite dimension reported via QuotientDim
QuotientDim coinvariant_dimension(const GroupAction& a, const std::vector<MultiPoly>& gens,
                                  const GroebnerBudget& budget = {});

// exhaustive: no proper nonzero subspace stable under all generators
bool is_irreducible(const GroupAction& a);

// ascending-degree search for homogeneous invariant generators: within a
// degree prefer fewer terms, require algebraic independence from the chosen
// set, stop once the degree product reaches the image order
std::vector<MultiPoly> find_polynomial_generators(const GroupAction& a, uint32_t max_degree,
                                                  const GroebnerBudget& budget = {});

}  // namespace nilab
