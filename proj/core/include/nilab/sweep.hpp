#pragma once

// Centralizer-bound inequality sweep over classical types: per-rank partition
// enumeration, the crude bound sum(i*m_i), the exact type-A centralizer
// dimension, and comparison against the claimed exception list.

#include <cstdint>
#include <string>
#include <vector>

#include "nilab/partitions.hpp"
#include "nilab/report.hpp"
#include "nilab/rootsys.hpp"

namespace nilab {

struct SweepRow {
  LieType type;
  uint32_t rank = 0;
  Partition partition;        // Jordan block sizes summing to the rank
  uint64_t bound_dimZ = 0;
  int64_t lhs_times_2 = 0;    // 2*dimB - (bound - rank), kept exact
  uint32_t r_min_orbit = 0;
  bool passes = false;        // lhs >= r
};

// enumerate nontrivial partitions of each rank (the all-ones partition is the
// zero element and is excluded); bound is sum(i*m_i) for B/C/D, and for type A
// either the rank^2 group bound or, with exact_a, the conjugate-partition
// centralizer dimension
std::vector<SweepRow> run_sweep(const std::vector<LieType>& types, uint32_t max_rank,
                                bool exact_a = false);

CheckResult exception_report(const std::vector<SweepRow>& rows);

std::string sweep_rows_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_rows_json(const std::vector<SweepRow>& rows);

std::vector<CheckResult> run_sweep_checks(const std::vector<LieType>& types, uint32_t max_rank,
                                          bool exact_a);

}  // namespace nilab
