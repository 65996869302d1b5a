#pragma once

// Complete flags over F_q, Springer fibers of ad-nilpotent cosets, fiber
// dimension evidence, and the incidence double count.

#include <cstdint>
#include <optional>
#include <vector>

#include "nilab/nilcone.hpp"

namespace nilab {

// chain of reduced-echelon basis matrices for F_1 < F_2 < ... < F_{n-1}
struct Flag {
  FieldPtr field;
  uint32_t n = 0;
  std::vector<Mat> chain;
};

uint64_t flag_count_formula(uint32_t n, uint64_t q);
std::vector<Flag> enumerate_flags(FieldPtr field, uint32_t n, uint64_t budget = 1000000);

// strictly-lowering condition N F_i <= F_{i-1} with F_0 = 0 and F_n the whole
// space; the weaker Borel-containment variant (N F_i <= F_i) is available for
// comparison but excluded from acceptance checks
uint64_t springer_fiber_size(const Mat& nilpotent, const std::vector<Flag>& flags,
                             bool strictly_lowering = true);

struct FiberRecord {
  PglElement element;
  uint64_t fiber_size = 0;
  int expected_dim = 0;                  // dim B - orbit_dim / 2
  std::optional<int> count_based_dim;    // from two q values, otherwise unknown
};

FiberRecord springer_fiber(const PglElement& x, const std::vector<Flag>& flags);

std::vector<CheckResult> run_springer_checks(uint32_t n, uint32_t p, uint32_t k,
                                             const std::optional<Partition>& only_partition,
                                             bool two_q, const RunConfig& cfg);

}  // namespace nilab
