#pragma once

// Verification-report data model shared by all modules, plus run configuration.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace nilab {

enum class CheckStatus { Pass, Fail, Anomaly, Skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  nlohmann::json expected;
  nlohmann::json actual;
  std::string claim_anchor;  // the mathematical claim this check verifies, or "plumbing"
  std::string notes;

  nlohmann::json to_json() const;
};

inline CheckResult make_check(std::string name, bool pass, nlohmann::json expected,
                              nlohmann::json actual, std::string anchor, std::string notes = "") {
  return CheckResult{std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail,
                     std::move(expected), std::move(actual), std::move(anchor), std::move(notes)};
}

struct RunConfig {
  uint32_t max_q_exponent = 2;
  uint64_t groebner_pair_budget = 20000;
  uint64_t groebner_basis_budget = 5000;
  uint32_t degree_cap = 12;
  uint64_t sample_size = 0;  // 0 = exhaustive
  uint32_t threads = 0;      // 0 = library picks (hardware, or NILCONE_THREADS)
  uint64_t seed = 0;

  void validate() const;
  uint32_t effective_threads() const;
  nlohmann::json to_json() const;
};

// line-oriented `key = value` file; unknown keys and malformed lines are
// errors naming the line number
RunConfig load_config(const std::string& path);
RunConfig parse_config_text(const std::string& text, const RunConfig& base);

struct Report {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::string toolkit_version;
  uint64_t seed = 0;
  uint64_t duration_ms = 0;
  std::vector<CheckResult> checks;

  nlohmann::json to_json() const;
  std::string to_markdown() const;
  bool any_fail() const;
  int exit_code() const { return any_fail() ? 1 : 0; }
};

extern const char* kToolkitVersion;

// registry of claim anchors used across modules
namespace anchors {
inline constexpr const char* kPlumbing = "plumbing";
inline constexpr const char* kBadPrimes =
    "prime classification: bad primes are the primes among the highest-root coefficients; "
    "B/C/D -> {2}; E6,E7,F4,G2 -> {2,3}; E8 -> {2,3,5}; type A -> none";
inline constexpr const char* kVeryGood =
    "very good primes: good and, in type A_n, p not dividing n+1";
inline constexpr const char* kSpecialPrimes =
    "special primes: exactly (B,2), (C,2), (F4,2), (G2,3)";
inline constexpr const char* kDimTable =
    "per-type table: dim of the flag variety and minimal half-orbit dimension r";
inline constexpr const char* kWeylPolynomial =
    "for PGL_n with p | n the Weyl invariant ring of the Cartan quotient module is a polynomial "
    "ring generated by the images of the elementary symmetric polynomials s_2..s_n";
inline constexpr const char* kFaithful =
    "the S_n action on the quotient module X is faithful for n > 2 and trivial at n = p = 2";
inline constexpr const char* kFreeness =
    "the symmetric algebra is a free module over a polynomial invariant ring; at desk scale the "
    "coinvariant dimension equals the order of the faithfully acting image";
inline constexpr const char* kG2Polynomial =
    "for type G2 in characteristic 2 the Weyl invariant ring is polynomial (degrees 2 and 3)";
inline constexpr const char* kIrreducible =
    "the Weyl action on the Cartan subalgebra is irreducible for the listed (type, p) pairs";
inline constexpr const char* kAffineCone =
    "the nilpotent cone is the vanishing set of the positive-degree invariants";
inline constexpr const char* kConeCount =
    "ad-nilpotent coset count equals q^(n^2-n): each ad-nilpotent coset has a unique nilpotent lift";
inline constexpr const char* kFinitelyManyOrbits =
    "finitely many adjoint orbits in the nilpotent cone, labeled by Jordan types";
inline constexpr const char* kKWIsomorphism =
    "restriction to the Cartan subalgebra maps the adjoint invariants isomorphically onto the "
    "Weyl invariants, degree by degree";
inline constexpr const char* kSteinbergFiber =
    "the Steinberg quotient's fiber over zero is the nilpotent cone";
inline constexpr const char* kSmoothRegular =
    "the smooth points of the nilpotent cone are precisely the regular nilpotent elements";
inline constexpr const char* kCodimension =
    "the nilpotent cone is irreducible of codimension rank(G), and the complement of the regular "
    "orbit has codimension at least 2";
inline constexpr const char* kBirationality =
    "the springer fiber over a regular element is a single point";
inline constexpr const char* kFiberDimension =
    "dim of the springer fiber over y equals dim B minus half the orbit dimension of y";
inline constexpr const char* kIncidence =
    "double count of the incidence variety: total fiber size equals flag count times q^(dim n)";
inline constexpr const char* kCentralizerBound =
    "dim Z_G(y) <= sum_i i*m_i over Jordan block sizes; at the all-ones partition this is n(n+1)/2";
inline constexpr const char* kSweepInequality =
    "dim B - (dim Z_G(y) - rank)/2 >= r for every nonzero nilpotent y";
inline constexpr const char* kSweepExceptions =
    "claimed exception list for the crude centralizer bound: B2, B3, D4 and D5";
}  // namespace anchors

}  // namespace nilab
