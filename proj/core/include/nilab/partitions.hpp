#pragma once

// Partitions (Jordan types) and centralizer-dimension formulas.

#include <cstdint>
#include <string>
#include <vector>

namespace nilab {

// weakly decreasing positive parts
using Partition = std::vector<uint32_t>;

std::vector<Partition> all_partitions(uint32_t n);
Partition conjugate_partition(const Partition& lam);
std::string partition_to_string(const Partition& lam);

// sum_i i*m_i over the sorted parts (1-based i)
uint64_t centralizer_bound(const Partition& lam);

// sum of squared conjugate-partition parts: the gl_n centralizer dimension
uint64_t centralizer_exact_typeA(const Partition& lam);

// dim over F_p of the commutant of the nilpotent Jordan matrix J_lam in gl_n,
// by solving [Y, J] = 0 as a linear system
uint64_t commutant_dimension_bruteforce(const Partition& lam, uint32_t p);

}  // namespace nilab
