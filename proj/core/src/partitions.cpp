#include "nilab/partitions.hpp"

#include <sstream>

#include "nilab/ff.hpp"
#include "nilab/linalg.hpp"

namespace nilab {

namespace {
void gen_partitions(uint32_t n, uint32_t maxp, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (uint32_t f = std::min(n, maxp); f >= 1; --f) {
    cur.push_back(f);
    gen_partitions(n - f, f, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> all_partitions(uint32_t n) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

Partition conjugate_partition(const Partition& lam) {
  if (lam.empty()) return {};
  Partition out;
  for (uint32_t i = 1; i <= lam[0]; ++i) {
    uint32_t c = 0;
    for (uint32_t part : lam)
      if (part >= i) ++c;
    out.push_back(c);
  }
  return out;
}

std::string partition_to_string(const Partition& lam) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < lam.size(); ++i) {
    if (i) os << ",";
    os << lam[i];
  }
  os << ")";
  return os.str();
}

uint64_t centralizer_bound(const Partition& lam) {
  if (lam.empty()) throw std::invalid_argument("centralizer_bound: empty partition");
  uint64_t s = 0;
  for (size_t i = 0; i < lam.size(); ++i) s += (i + 1) * static_cast<uint64_t>(lam[i]);
  return s;
}

uint64_t centralizer_exact_typeA(const Partition& lam) {
  if (lam.empty()) throw std::invalid_argument("centralizer_exact_typeA: empty partition");
  uint64_t s = 0;
  for (uint32_t c : conjugate_partition(lam)) s += static_cast<uint64_t>(c) * c;
  return s;
}

uint64_t commutant_dimension_bruteforce(const Partition& lam, uint32_t p) {
  uint32_t n = 0;
  for (uint32_t part : lam) n += part;
  FieldPtr f = ExtField::make(p, 1);
  // Jordan matrix for the partition
  Mat J(f, n, n);
  uint32_t pos = 0;
  for (uint32_t part : lam) {
    for (uint32_t i = 0; i + 1 < part; ++i) J.at(pos + i, pos + i + 1) = 1;
    pos += part;
  }
  // [Y, J] = 0 as linear constraints on the n^2 entries of Y
  std::vector<std::vector<uint32_t>> rows;
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      std::vector<uint32_t> row(static_cast<size_t>(n) * n, 0);
      for (uint32_t k = 0; k < n; ++k) {
        // (YJ - JY)_{ab} = sum_k Y_ak J_kb - J_ak Y_kb
        row[a * n + k] = f->add(row[a * n + k], J.at(k, b));
        row[k * n + b] = f->sub(row[k * n + b], J.at(a, k));
      }
      rows.push_back(std::move(row));
    }
  size_t rk = row_rank(f, rows, static_cast<size_t>(n) * n);
  return static_cast<uint64_t>(n) * n - rk;
}

}  // namespace nilab
