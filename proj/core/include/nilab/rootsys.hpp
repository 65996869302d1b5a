#pragma once

// Root systems for types A..G from hard-coded Cartan matrices, with positive
// roots generated by closure, plus the prime classifications and the
// per-type (dim B, minimal orbit half-dimension) table.

#include <cstdint>
#include <string>
#include <vector>

namespace nilab {

enum class LieType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

LieType lie_type_from_char(char c);

struct PrimeClass {
  bool good = false;
  bool very_good = false;
  bool special = false;
};

struct RootSystemData {
  LieType type;
  uint32_t rank;
  std::vector<std::vector<int>> cartan;           // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::vector<int>> positive_roots;   // coefficient vectors over simple roots
  std::vector<int> highest_root;
  uint64_t weyl_order;
  bool a3_isomorphic = false;  // set for D_3, which coincides with A_3

  std::string name() const { return std::string(1, static_cast<char>(type)) + std::to_string(rank); }
  uint32_t dim_borel() const;       // number of positive roots
  uint32_t r_min_orbit() const;     // half the minimal nonzero coadjoint orbit dimension
  std::vector<uint32_t> bad_primes() const;
};

RootSystemData build_root_system(LieType type, uint32_t rank);

PrimeClass classify_prime(const RootSystemData& rs, uint32_t p);

// (dim B, r_min_orbit) straight from the per-type table
std::pair<uint32_t, uint32_t> table_values(const RootSystemData& rs);

// simple reflection matrices on the span of the simple roots, reduced mod p;
// column j of matrix i is the image of alpha_j under s_i
std::vector<std::vector<std::vector<uint32_t>>> simple_reflections_mod_p(const RootSystemData& rs,
                                                                         uint32_t p);

}  // namespace nilab
