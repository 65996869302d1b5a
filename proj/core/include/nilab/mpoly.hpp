#pragma once

// Sparse multivariate polynomials over a finite field, monomial orders,
// formal derivatives, and a Buchberger engine with explicit resource budgets.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilab/ff.hpp"

namespace nilab {

using Monomial = std::vector<uint8_t>;  // exponent vector, one entry per variable

inline uint32_t total_degree(const Monomial& m) {
  uint32_t d = 0;
  for (uint8_t e : m) d += e;
  return d;
}

enum class MonomialOrder { Lex, GRevLex };

// strict "a > b" under the given order
bool mono_greater(const Monomial& a, const Monomial& b, MonomialOrder ord);
bool mono_divides(const Monomial& a, const Monomial& b);           // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);           // b | a required
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// Immutable value type; terms keyed by monomial, no zero coefficients stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(FieldPtr field, size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static MultiPoly zero(FieldPtr f, size_t nvars) { return MultiPoly(std::move(f), nvars); }
  static MultiPoly constant(FieldPtr f, size_t nvars, uint32_t c);
  static MultiPoly variable(FieldPtr f, size_t nvars, size_t i);
  static MultiPoly monomial(FieldPtr f, const Monomial& m, uint32_t c);

  const FieldPtr& field() const { return field_; }
  size_t nvars() const { return nvars_; }
  const std::map<Monomial, uint32_t>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  uint32_t degree() const;  // total degree, 0 for the zero polynomial
  bool is_homogeneous() const;
  uint32_t coeff(const Monomial& m) const;

  void set_coeff(const Monomial& m, uint32_t c);  // builder-style mutation

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(uint32_t s) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  uint32_t eval(const std::vector<uint32_t>& point) const;
  // simultaneous substitution of every variable by a polynomial
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  // reinterpret in a ring with more variables (same leading variable indices)
  MultiPoly extended(size_t new_nvars) const;
  MultiPoly derivative(size_t var) const;  // formal derivative, d(x^p)/dx = 0

  std::string to_string() const;  // variables printed x0..x{n-1}

  // leading term under an order (throws on zero polynomial)
  const Monomial& leading_monomial(MonomialOrder ord) const;

 private:
  FieldPtr field_;
  size_t nvars_ = 0;
  std::map<Monomial, uint32_t> terms_;
};

MultiPoly parse_poly(const std::string& text, FieldPtr field, size_t nvars);

// rank over the field of the matrix of formal partials evaluated at a point
size_t jacobian_rank_at(const std::vector<MultiPoly>& polys, const std::vector<uint32_t>& point);

// ---------------------------------------------------------------------------
// Groebner machinery

struct GroebnerBudget {
  size_t max_pairs = 20000;
  size_t max_basis = 5000;
};

struct PolyIdeal {
  std::vector<MultiPoly> generators;
  MonomialOrder order = MonomialOrder::GRevLex;
  std::optional<std::vector<MultiPoly>> gb;  // reduced Groebner basis when computed
};

// full normal form against a set of polynomials
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, MonomialOrder ord);

// reduced Groebner basis; idempotent; throws ResourceError past the budget
PolyIdeal groebner(PolyIdeal ideal, const GroebnerBudget& budget = {});

struct QuotientDim {
  bool finite = false;
  uint64_t dim = 0;
};

// number of standard monomials of K[x]/I when finite
QuotientDim quotient_dimension(PolyIdeal ideal, const GroebnerBudget& budget = {});

// true iff the given polynomials satisfy no polynomial relation; computed by
// eliminating the original variables from {y_i - f_i} under lex with the
// original variables ranked above the tag variables
bool algebraically_independent(const std::vector<MultiPoly>& polys,
                               const GroebnerBudget& budget = {});

// h in K[gens]? decided by the same elimination ideal via normal form
bool subalgebra_membership(const MultiPoly& h, const std::vector<MultiPoly>& gens,
                           const GroebnerBudget& budget = {});

}  // namespace nilab
