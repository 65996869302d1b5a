#pragma once

// The nilpotent cone of pgl_n over F_q: canonical coset representatives,
// ad-nilpotency, adjoint orbits, adjoint-invariant polynomials, the Steinberg
// quotient, the smooth/regular comparison and codimension evidence.

#include <cstdint>
#include <optional>
#include <vector>

#include "nilab/linalg.hpp"
#include "nilab/mpoly.hpp"
#include "nilab/partitions.hpp"
#include "nilab/report.hpp"

namespace nilab {

// Coset of pgl_n(F_q) by its canonical representative: the unique lift with
// bottom-right entry zero.
struct PglElement {
  FieldPtr field;
  uint32_t n = 0;
  std::vector<uint32_t> rep;  // row-major n*n codes, rep[n*n-1] == 0

  uint64_t key() const;  // base-q encoding of the n^2-1 free entries
  bool operator==(const PglElement& o) const { return n == o.n && rep == o.rep; }
};

PglElement make_pgl(FieldPtr field, uint32_t n, std::vector<uint32_t> matrix);
PglElement pgl_from_key(FieldPtr field, uint32_t n, uint64_t key);
PglElement pgl_zero(FieldPtr field, uint32_t n);

// basis labels of pgl_n: off-diagonal (i,j), then diagonal (k,k) for k < n-1
std::vector<std::pair<uint32_t, uint32_t>> pgl_basis_labels(uint32_t n);

// ad_x on the fixed basis; checked to be lift-independent and to kill x
Mat ad_operator(const PglElement& x);
size_t ad_tangent_rank(const PglElement& x);
bool is_ad_nilpotent(const PglElement& x);

// the unique nilpotent matrix lift of an ad-nilpotent coset
std::optional<Mat> nilpotent_lift(const PglElement& x);
Partition jordan_type_of(const Mat& nilpotent);

struct ConeEnumeration {
  std::vector<PglElement> elements;  // sorted by key
  uint64_t domain_size = 0;          // q^(n^2-1)
  bool exhaustive = true;
  uint64_t samples_drawn = 0;        // sampling mode only
  uint64_t estimated_size = 0;       // sampling mode only
};

ConeEnumeration enumerate_nilcone(FieldPtr field, uint32_t n, const RunConfig& cfg = {});

struct OrbitRecord {
  PglElement representative;
  uint64_t size_over_q = 0;
  size_t tangent_rank = 0;
  Partition jordan_type;
  bool is_regular = false;
};

struct ConeOrbits {
  std::vector<OrbitRecord> records;            // sorted by decreasing size
  std::vector<std::vector<uint64_t>> members;  // element keys per orbit, sorted
};

std::vector<Mat> pgl_group_generators(FieldPtr field, uint32_t n);
ConeOrbits adjoint_orbits(const ConeEnumeration& cone, FieldPtr field, uint32_t n);

// ---------------------------------------------------------------------------
// Adjoint invariants. Polynomials live in the n^2-1 basis variables of pgl_n
// and are invariant for the substitution action on the basis by Ad(I + tE_ij)
// as a polynomial identity in t, together with the diagonal one-parameter
// conjugations (imposed through the torus-weight-zero support restriction).
// As functions they are polynomial functions on the dual space, identified
// with the traceless matrices via the trace pairing.

std::vector<MultiPoly> invariant_space_adjoint(uint32_t n, uint32_t p, uint32_t d);

// point-function variant: invariance of polynomials in the canonical-representative
// coordinates under conjugation of the point itself (diagnostic; see the
// (2,2) smooth/regular anomaly)
std::vector<MultiPoly> invariant_space_coset_functions(uint32_t n, uint32_t p, uint32_t d);

// one generator per degree d = 2..n, chosen deterministically (fewest terms,
// then echelon position) among candidates whose differentials at a reference
// regular nilpotent element stay independent
std::vector<MultiPoly> compute_invariant_generators(uint32_t n, uint32_t p);

// coordinates of a traceless matrix in the dual pairing <xi, E_ij> = xi_ji
std::vector<uint32_t> dual_coordinates(const Mat& sl_elt);
// evaluation point of a coset: the nilpotent lift when ad-nilpotent, the
// canonical representative otherwise
std::vector<uint32_t> evaluation_coordinates(const PglElement& x);

std::vector<FieldElement> steinberg_quotient(const PglElement& x,
                                             const std::vector<MultiPoly>& gens);

// closed-form adjoint orbit size of Jordan type lam over F_Q
unsigned __int128 orbit_size_formula(const Partition& lam, uint32_t n, uint64_t Q);
std::string u128_to_string(unsigned __int128 v);

// ---------------------------------------------------------------------------
// Reports

CheckResult cone_count_report(const ConeEnumeration& cone, uint32_t n, uint32_t q);
CheckResult orbit_report(const ConeOrbits& orbits, const ConeEnumeration& cone, uint32_t n, uint32_t q);
CheckResult steinberg_fiber_report(FieldPtr field, uint32_t n, const std::vector<MultiPoly>& gens,
                                   const ConeEnumeration& cone, const RunConfig& cfg = {});
CheckResult smooth_vs_regular_report(FieldPtr field, uint32_t n, const std::vector<MultiPoly>& gens,
                                     const ConeOrbits& orbits);
std::vector<CheckResult> codimension_report(FieldPtr field, uint32_t n, const ConeOrbits& orbits);
std::vector<CheckResult> kw_compatibility_report(uint32_t n, uint32_t p);

// full battery for the `cone` subcommand; checks is a subset of
// {count, orbits, smooth-regular, codim, kw, steinberg}
std::vector<CheckResult> run_cone_checks(uint32_t n, uint32_t p, uint32_t k,
                                         const std::vector<std::string>& checks,
                                         const RunConfig& cfg);

}  // namespace nilab
