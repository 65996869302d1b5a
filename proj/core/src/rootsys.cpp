#include "nilab/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nilab/ff.hpp"

namespace nilab {

LieType lie_type_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return LieType::A;
    case 'B': case 'b': return LieType::B;
    case 'C': case 'c': return LieType::C;
    case 'D': case 'd': return LieType::D;
    case 'E': case 'e': return LieType::E;
    case 'F': case 'f': return LieType::F;
    case 'G': case 'g': return LieType::G;
    default: throw std::invalid_argument(std::string("unknown Lie type '") + c + "'");
  }
}

namespace {

void check_rank(LieType t, uint32_t rank) {
  bool ok = false;
  switch (t) {
    case LieType::A: ok = rank >= 1; break;
    case LieType::B: ok = rank >= 2; break;
    case LieType::C: ok = rank >= 2; break;
    case LieType::D: ok = rank >= 3; break;  // D_3 allowed, flagged as A_3
    case LieType::E: ok = rank >= 6 && rank <= 8; break;
    case LieType::F: ok = rank == 4; break;
    case LieType::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid (type, rank) pair: " + std::string(1, static_cast<char>(t)) +
                                std::to_string(rank));
  if (rank > 64) throw std::invalid_argument("rank above 64 not supported");
}

std::vector<std::vector<int>> cartan_matrix(LieType t, uint32_t n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (uint32_t i = 0; i < n; ++i) c[i][i] = 2;
  auto edge = [&](uint32_t i, uint32_t j) { c[i][j] = -1; c[j][i] = -1; };
  switch (t) {
    case LieType::A:
      for (uint32_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case LieType::B:
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      for (uint32_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case LieType::C:
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      for (uint32_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case LieType::D:
      for (uint32_t i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case LieType::E:
      // Bourbaki numbering: chain 1-3-4-5-...-n with 2 attached to 4
      edge(0, 2);
      for (uint32_t i = 2; i + 1 < n; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
    case LieType::F:
      edge(0, 1); edge(1, 2); edge(2, 3);
      c[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case LieType::G:
      c[0][1] = -3;  // alpha_1 short
      c[1][0] = -1;
      break;
  }
  return c;
}

uint64_t factorial(uint32_t n) {
  uint64_t f = 1;
  for (uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

uint64_t weyl_order_of(LieType t, uint32_t n) {
  switch (t) {
    case LieType::A: return factorial(n + 1);
    case LieType::B:
    case LieType::C: return (uint64_t{1} << n) * factorial(n);
    case LieType::D: return (uint64_t{1} << (n - 1)) * factorial(n);
    case LieType::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case LieType::F: return 1152;
    case LieType::G: return 12;
  }
  return 0;
}

}  // namespace

RootSystemData build_root_system(LieType type, uint32_t rank) {
  check_rank(type, rank);
  RootSystemData rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type, rank);
  rs.weyl_order = weyl_order_of(type, rank);
  rs.a3_isomorphic = (type == LieType::D && rank == 3);

  // closure under simple-root addition via root chains
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (uint32_t i = 0; i < rank; ++i) {
    std::vector<int> a(rank, 0);
    a[i] = 1;
    roots.insert(a);
    frontier.push_back(a);
  }
  auto pairing = [&](const std::vector<int>& r, uint32_t i) {
    int s = 0;
    for (uint32_t j = 0; j < rank; ++j) s += rs.cartan[i][j] * r[j];
    return s;
  };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& r : frontier) {
      for (uint32_t i = 0; i < rank; ++i) {
        int down = 0;
        std::vector<int> probe = r;
        while (true) {
          probe[i] -= 1;
          if (probe[i] < 0 || !roots.count(probe)) break;
          ++down;
        }
        int up = down - pairing(r, i);
        if (up >= 1) {
          std::vector<int> nr = r;
          nr[i] += 1;
          if (roots.insert(nr).second) next.push_back(nr);
        }
      }
    }
    frontier = std::move(next);
  }
  rs.positive_roots.assign(roots.begin(), roots.end());
  // highest root: unique root of maximal height
  auto height = [](const std::vector<int>& r) {
    int h = 0;
    for (int x : r) h += x;
    return h;
  };
  rs.highest_root = rs.positive_roots.front();
  for (const auto& r : rs.positive_roots)
    if (height(r) > height(rs.highest_root)) rs.highest_root = r;
  return rs;
}

uint32_t RootSystemData::dim_borel() const { return static_cast<uint32_t>(positive_roots.size()); }

uint32_t RootSystemData::r_min_orbit() const {
  switch (type) {
    case LieType::A: return rank;
    case LieType::B: return 2 * rank - 2;
    case LieType::C: return rank;
    case LieType::D: return 2 * rank - 3;
    case LieType::E: return rank == 6 ? 11 : (rank == 7 ? 17 : 29);
    case LieType::F: return 8;
    case LieType::G: return 3;
  }
  return 0;
}

std::vector<uint32_t> RootSystemData::bad_primes() const {
  std::set<uint32_t> bad;
  for (int m : highest_root)
    if (m >= 2 && is_prime(static_cast<uint32_t>(m))) bad.insert(static_cast<uint32_t>(m));
  return {bad.begin(), bad.end()};
}

PrimeClass classify_prime(const RootSystemData& rs, uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("classify_prime: p must be prime");
  PrimeClass pc;
  bool bad = false;
  for (int m : rs.highest_root)
    if (static_cast<uint32_t>(m) == p) bad = true;
  pc.good = !bad;
  if (rs.type == LieType::A || rs.a3_isomorphic)  // D_3 carries the A_3 diagram
    pc.very_good = pc.good && (rs.rank + 1) % p != 0;
  else
    pc.very_good = pc.good;
  pc.special = (rs.type == LieType::B && p == 2) || (rs.type == LieType::C && p == 2) ||
               (rs.type == LieType::F && p == 2) || (rs.type == LieType::G && p == 3);
  return pc;
}

std::pair<uint32_t, uint32_t> table_values(const RootSystemData& rs) {
  uint32_t dim_b;
  switch (rs.type) {
    case LieType::A: dim_b = rs.rank * (rs.rank + 1) / 2; break;
    case LieType::B:
    case LieType::C: dim_b = rs.rank * rs.rank; break;
    case LieType::D: dim_b = rs.rank * rs.rank - rs.rank; break;
    case LieType::E: dim_b = rs.rank == 6 ? 36 : (rs.rank == 7 ? 63 : 120); break;
    case LieType::F: dim_b = 24; break;
    case LieType::G: dim_b = 6; break;
    default: throw std::logic_error("table_values");
  }
  return {dim_b, rs.r_min_orbit()};
}

std::vector<std::vector<std::vector<uint32_t>>> simple_reflections_mod_p(const RootSystemData& rs,
                                                                         uint32_t p) {
  std::vector<std::vector<std::vector<uint32_t>>> out;
  uint32_t n = rs.rank;
  for (uint32_t i = 0; i < n; ++i) {
    std::vector<std::vector<uint32_t>> m(n, std::vector<uint32_t>(n, 0));
    for (uint32_t j = 0; j < n; ++j) {
      // s_i(alpha_j) = alpha_j - c[i][j] alpha_i
      m[j][j] = 1;
      int v = static_cast<int>(m[i][j]) - rs.cartan[i][j];
      int r = v % static_cast<int>(p);
      if (r < 0) r += p;
      m[i][j] = static_cast<uint32_t>(r);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace nilab
