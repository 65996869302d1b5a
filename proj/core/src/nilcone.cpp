#include "nilab/nilcone.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "nilab/parallel.hpp"
#include "nilab/weylinv.hpp"

namespace nilab {

namespace {

std::vector<std::pair<uint32_t, uint32_t>> free_entries(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (!(i == n - 1 && j == n - 1)) out.emplace_back(i, j);
  return out;
}

Mat rep_matrix(const PglElement& x) {
  Mat m(x.field, x.n, x.n);
  for (uint32_t i = 0; i < x.n; ++i)
    for (uint32_t j = 0; j < x.n; ++j) m.at(i, j) = x.rep[i * x.n + j];
  return m;
}

}  // namespace

uint64_t PglElement::key() const {
  const uint64_t q = field->q();
  uint64_t k = 0;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (!(i == n - 1 && j == n - 1)) k = k * q + rep[i * n + j];
  return k;
}

PglElement make_pgl(FieldPtr field, uint32_t n, std::vector<uint32_t> matrix) {
  if (matrix.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("make_pgl: matrix size mismatch");
  // shift by a scalar so the bottom-right entry vanishes
  uint32_t lam = matrix[static_cast<size_t>(n) * n - 1];
  if (lam) {
    for (uint32_t i = 0; i < n; ++i)
      matrix[static_cast<size_t>(i) * n + i] = field->sub(matrix[static_cast<size_t>(i) * n + i], lam);
  }
  return PglElement{std::move(field), n, std::move(matrix)};
}

PglElement pgl_from_key(FieldPtr field, uint32_t n, uint64_t key) {
  const uint64_t q = field->q();
  std::vector<uint32_t> m(static_cast<size_t>(n) * n, 0);
  auto entries = free_entries(n);
  for (size_t idx = entries.size(); idx-- > 0;) {
    auto [i, j] = entries[idx];
    m[static_cast<size_t>(i) * n + j] = static_cast<uint32_t>(key % q);
    key /= q;
  }
  return PglElement{std::move(field), n, std::move(m)};
}

PglElement pgl_zero(FieldPtr field, uint32_t n) {
  return PglElement{std::move(field), n, std::vector<uint32_t>(static_cast<size_t>(n) * n, 0)};
}

std::vector<std::pair<uint32_t, uint32_t>> pgl_basis_labels(uint32_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> vs;
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      if (i != j) vs.emplace_back(i, j);
  for (uint32_t k = 0; k + 1 < n; ++k) vs.emplace_back(k, k);
  return vs;
}

namespace {

// coordinates of an n x n matrix's coset in the pgl basis
std::vector<uint32_t> coset_coordinates(const Mat& m, uint32_t n) {
  const ExtField& F = *m.field();
  uint32_t lam = m.at(n - 1, n - 1);
  std::vector<uint32_t> out;
  for (auto [i, j] : pgl_basis_labels(n)) {
    if (i != j)
      out.push_back(m.at(i, j));
    else
      out.push_back(F.sub(m.at(i, i), lam));
  }
  return out;
}

Mat ad_of_matrix(const Mat& X, uint32_t n) {
  auto labels = pgl_basis_labels(n);
  Mat ad(X.field(), labels.size(), labels.size());
  for (size_t c = 0; c < labels.size(); ++c) {
    Mat E(X.field(), n, n);
    E.at(labels[c].first, labels[c].second) = 1;
    Mat bracket = X * E - E * X;
    auto col = coset_coordinates(bracket, n);
    for (size_t r = 0; r < labels.size(); ++r) ad.at(r, c) = col[r];
  }
  return ad;
}

}  // namespace

Mat ad_operator(const PglElement& x) {
  Mat X = rep_matrix(x);
  Mat ad = ad_of_matrix(X, x.n);
  // lift independence: the shifted lift X + I must give the same operator
  Mat shifted = X + Mat::identity(x.field, x.n);
  if (!(ad_of_matrix(shifted, x.n) == ad))
    throw std::logic_error("ad_operator: lift dependence detected");
  // ad_x(x) = 0
  auto xc = coset_coordinates(X, x.n);
  const ExtField& F = *x.field;
  for (size_t r = 0; r < xc.size(); ++r) {
    uint32_t acc = 0;
    for (size_t c = 0; c < xc.size(); ++c) acc = F.add(acc, F.mul(ad.at(r, c), xc[c]));
    if (acc) throw std::logic_error("ad_operator: ad_x(x) != 0");
  }
  return ad;
}

size_t ad_tangent_rank(const PglElement& x) { return ad_operator(x).rank(); }

bool is_ad_nilpotent(const PglElement& x) {
  uint32_t n = x.n;
  Mat A = ad_of_matrix(rep_matrix(x), n);
  uint32_t dim = n * n - 1;
  // square until the exponent reaches dim
  uint32_t e = 1;
  while (e < dim) {
    if (A.is_zero()) return true;
    A = A * A;
    e *= 2;
  }
  return A.is_zero();
}

std::optional<Mat> nilpotent_lift(const PglElement& x) {
  const ExtField& F = *x.field;
  uint32_t n = x.n;
  std::optional<Mat> found;
  for (uint32_t lam = 0; lam < F.q(); ++lam) {
    Mat L = rep_matrix(x);
    for (uint32_t i = 0; i < n; ++i) L.at(i, i) = F.add(L.at(i, i), lam);
    Mat P = L;
    bool nil = false;
    for (uint32_t s = 0; s < n; ++s) {
      if (P.is_zero()) { nil = true; break; }
      P = P * L;
    }
    if (!nil) nil = P.is_zero();
    if (nil) {
      if (found) throw std::logic_error("nilpotent_lift: lift not unique");
      found = L;
    }
  }
  return found;
}

Partition jordan_type_of(const Mat& nilpotent) {
  uint32_t n = static_cast<uint32_t>(nilpotent.rows());
  std::vector<size_t> ranks{n};
  Mat P = nilpotent;
  for (uint32_t i = 1; i <= n; ++i) {
    ranks.push_back(P.rank());
    P = P * nilpotent;
  }
  Partition conj;
  for (uint32_t i = 1; i <= n; ++i) {
    size_t d = ranks[i - 1] - ranks[i];
    if (d > 0) conj.push_back(static_cast<uint32_t>(d));
  }
  if (conj.empty()) return Partition(n, 1);  // the zero matrix
  return conjugate_partition(conj);
}

ConeEnumeration enumerate_nilcone(FieldPtr field, uint32_t n, const RunConfig& cfg) {
  ConeEnumeration out;
  const uint64_t q = field->q();
  uint64_t domain = 1;
  for (uint32_t i = 0; i + 1 < n * n; ++i) {
    if (domain > 100000000ull / q + 1) { domain = 200000000ull; break; }
    domain *= q;
  }
  out.domain_size = domain;

  if (cfg.sample_size > 0) {
    out.exhaustive = false;
    out.samples_drawn = cfg.sample_size;
    std::mt19937_64 rng(cfg.seed);
    // domain may exceed 64-bit-safe exact range only for huge q^e; cap enforced above
    std::uniform_int_distribution<uint64_t> dist(0, domain - 1);
    uint64_t hits = 0;
    std::set<uint64_t> keys;
    for (uint64_t s = 0; s < cfg.sample_size; ++s) {
      uint64_t code = dist(rng);
      PglElement x = pgl_from_key(field, n, code);
      if (is_ad_nilpotent(x)) {
        ++hits;
        if (keys.size() < 100000) keys.insert(code);
      }
    }
    out.estimated_size = static_cast<uint64_t>(
        std::llround(static_cast<double>(hits) / cfg.sample_size * static_cast<double>(domain)));
    for (uint64_t k : keys) out.elements.push_back(pgl_from_key(field, n, k));
    return out;
  }

  if (domain > 100000000ull)
    throw ResourceError("enumerate_nilcone: domain q^(n^2-1) above 1e8; use sampling mode");

  uint32_t threads = cfg.effective_threads();
  std::vector<std::vector<uint64_t>> found(threads && domain >= 2048 ? threads : 1);
  parallel_chunks(domain, threads, [&](uint32_t chunk, uint64_t begin, uint64_t end) {
    auto& local = found[chunk];
    for (uint64_t code = begin; code < end; ++code) {
      PglElement x = pgl_from_key(field, n, code);
      if (is_ad_nilpotent(x)) local.push_back(code);
    }
  });
  for (const auto& chunk : found)
    for (uint64_t code : chunk) out.elements.push_back(pgl_from_key(field, n, code));
  std::sort(out.elements.begin(), out.elements.end(),
            [](const PglElement& a, const PglElement& b) { return a.key() < b.key(); });
  return out;
}

std::vector<Mat> pgl_group_generators(FieldPtr field, uint32_t n) {
  std::vector<Mat> gens;
  const uint32_t q = field->q();
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (uint32_t t = 1; t < q; ++t) {
        Mat g = Mat::identity(field, n);
        g.at(i, j) = t;
        gens.push_back(std::move(g));
      }
    }
  if (q > 2) {
    // diagonal generator diag(gamma, 1, .., 1) with gamma of maximal order
    for (uint32_t g = 2; g < q; ++g) {
      uint32_t x = g, order = 1;
      while (x != 1) { x = field->mul(x, g); ++order; }
      if (order == q - 1) {
        Mat d = Mat::identity(field, n);
        d.at(0, 0) = g;
        gens.push_back(std::move(d));
        break;
      }
    }
  }
  return gens;
}

ConeOrbits adjoint_orbits(const ConeEnumeration& cone, FieldPtr field, uint32_t n) {
  if (!cone.exhaustive)
    throw ResourceError("adjoint_orbits: requires an exhaustive cone enumeration");
  ConeOrbits out;
  std::unordered_map<uint64_t, size_t> index;
  index.reserve(cone.elements.size() * 2);
  for (size_t i = 0; i < cone.elements.size(); ++i) index.emplace(cone.elements[i].key(), i);

  auto gens = pgl_group_generators(field, n);
  std::vector<Mat> gens_inv;
  for (const Mat& g : gens) gens_inv.push_back(g.inverse());

  std::vector<char> visited(cone.elements.size(), 0);
  struct RawOrbit {
    size_t seed;
    std::vector<uint64_t> keys;
  };
  std::vector<RawOrbit> raw;
  for (size_t start = 0; start < cone.elements.size(); ++start) {
    if (visited[start]) continue;
    RawOrbit orbit{start, {}};
    std::vector<size_t> frontier{start};
    visited[start] = 1;
    orbit.keys.push_back(cone.elements[start].key());
    while (!frontier.empty()) {
      size_t cur = frontier.back();
      frontier.pop_back();
      Mat X = rep_matrix(cone.elements[cur]);
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        Mat Y = gens[gi] * X * gens_inv[gi];
        PglElement y = make_pgl(field, n, std::vector<uint32_t>(Y.data()));
        auto it = index.find(y.key());
        if (it == index.end())
          throw std::logic_error("adjoint_orbits: conjugate left the enumerated cone");
        if (!visited[it->second]) {
          visited[it->second] = 1;
          orbit.keys.push_back(y.key());
          frontier.push_back(it->second);
        }
      }
    }
    std::sort(orbit.keys.begin(), orbit.keys.end());
    raw.push_back(std::move(orbit));
  }

  std::sort(raw.begin(), raw.end(), [](const RawOrbit& a, const RawOrbit& b) {
    if (a.keys.size() != b.keys.size()) return a.keys.size() > b.keys.size();
    return a.keys.front() < b.keys.front();
  });
  uint64_t max_size = raw.empty() ? 0 : raw.front().keys.size();
  for (auto& orbit : raw) {
    OrbitRecord rec;
    rec.representative = cone.elements[orbit.seed];
    rec.size_over_q = orbit.keys.size();
    rec.tangent_rank = ad_tangent_rank(rec.representative);
    auto lift = nilpotent_lift(rec.representative);
    if (!lift) throw std::logic_error("adjoint_orbits: cone element without nilpotent lift");
    rec.jordan_type = jordan_type_of(*lift);
    rec.is_regular = rec.size_over_q == max_size;
    // a regular orbit must carry the single-block Jordan type
    if (rec.is_regular && rec.jordan_type != Partition{n})
      throw std::logic_error("adjoint_orbits: maximal orbit is not the single Jordan block");
    out.records.push_back(std::move(rec));
    out.members.push_back(std::move(orbit.keys));
  }
  return out;
}

// ---------------------------------------------------------------------------
// invariants

namespace {

// images of the basis vectors under Ad(I + tE_ab), canonicalized, split by
// power of t: images[var] = list of (tpow, coordinate vector)
struct OneParamAction {
  std::vector<std::vector<std::pair<uint32_t, std::vector<uint32_t>>>> images;
};

OneParamAction transvection_action(uint32_t n, const FieldPtr& f, uint32_t a, uint32_t b,
                                   bool transpose) {
  auto labels = pgl_basis_labels(n);
  size_t nv = labels.size();
  // matrices per t-power, columns = images of basis elements
  std::vector<Mat> tcols(3, Mat(f, nv, nv));
  for (size_t c = 0; c < nv; ++c) {
    Mat E(f, n, n);
    E.at(labels[c].first, labels[c].second) = 1;
    Mat Eab(f, n, n);
    Eab.at(a, b) = 1;
    Mat t0 = E;
    Mat t1 = Eab * E - E * Eab;
    Mat t2 = (Eab * E * Eab).scaled(f->neg(1));
    Mat parts[3] = {t0, t1, t2};
    for (uint32_t tp = 0; tp < 3; ++tp) {
      auto col = coset_coordinates(parts[tp], n);
      for (size_t r = 0; r < nv; ++r) tcols[tp].at(r, c) = col[r];
    }
  }
  OneParamAction act;
  act.images.resize(nv);
  for (size_t v = 0; v < nv; ++v) {
    for (uint32_t tp = 0; tp < 3; ++tp) {
      std::vector<uint32_t> vec(nv, 0);
      bool nonzero = false;
      for (size_t r = 0; r < nv; ++r) {
        // substitution on basis variables uses columns; the point-function
        // variant transforms coordinates, which is the transposed action
        uint32_t entry = transpose ? tcols[tp].at(v, r) : tcols[tp].at(r, v);
        vec[r] = entry;
        nonzero = nonzero || entry;
      }
      if (nonzero) act.images[v].emplace_back(tp, std::move(vec));
    }
  }
  return act;
}

std::vector<Monomial> weight_zero_monomials(uint32_t n, uint32_t d) {
  auto labels = pgl_basis_labels(n);
  size_t nv = labels.size();
  std::vector<Monomial> out;
  Monomial cur(nv, 0);
  std::function<void(size_t, uint32_t)> rec = [&](size_t v, uint32_t left) {
    if (v + 1 == nv) {
      cur[v] = static_cast<uint8_t>(left);
      // torus weight of the monomial must vanish coordinatewise
      std::vector<int> w(n, 0);
      for (size_t i = 0; i < nv; ++i) {
        if (!cur[i]) continue;
        auto [a, b] = labels[i];
        if (a != b) {
          w[a] += cur[i];
          w[b] -= cur[i];
        }
      }
      bool zero = true;
      for (int x : w) zero = zero && x == 0;
      if (zero) out.push_back(cur);
      return;
    }
    for (uint32_t e = 0; e <= left; ++e) {
      cur[v] = static_cast<uint8_t>(e);
      rec(v + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

using TPoly = std::map<std::pair<Monomial, uint32_t>, uint32_t>;  // (monomial, t-power) -> coeff

TPoly tpoly_mul(const TPoly& A, const TPoly& B, const ExtField& F) {
  TPoly out;
  for (const auto& [ka, ca] : A)
    for (const auto& [kb, cb] : B) {
      auto key = std::make_pair(mono_mul(ka.first, kb.first), ka.second + kb.second);
      uint32_t& slot = out[key];
      slot = F.add(slot, F.mul(ca, cb));
      if (!slot) out.erase(key);
    }
  return out;
}

std::vector<MultiPoly> invariant_space_impl(uint32_t n, uint32_t p, uint32_t d, bool transpose) {
  FieldPtr f = ExtField::make(p, 1);
  auto labels = pgl_basis_labels(n);
  size_t nv = labels.size();
  auto mons = weight_zero_monomials(n, d);
  std::map<Monomial, size_t> midx;
  for (size_t i = 0; i < mons.size(); ++i) midx[mons[i]] = i;

  std::vector<std::vector<uint32_t>> rows;
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = 0; b < n; ++b) {
      if (a == b) continue;
      OneParamAction act = transvection_action(n, f, a, b, transpose);
      std::map<std::pair<Monomial, uint32_t>, std::vector<uint32_t>> con;
      for (size_t j = 0; j < mons.size(); ++j) {
        TPoly acc{{{Monomial(nv, 0), 0}, 1}};
        for (size_t v = 0; v < nv; ++v) {
          for (uint8_t e = 0; e < mons[j][v]; ++e) {
            TPoly img;
            for (const auto& [tp, vec] : act.images[v]) {
              for (size_t r = 0; r < nv; ++r) {
                if (!vec[r]) continue;
                Monomial m(nv, 0);
                m[r] = 1;
                img[{m, tp}] = vec[r];
              }
            }
            acc = tpoly_mul(acc, img, *f);
          }
        }
        for (const auto& [key, c] : acc) {
          if (key.second == 0) continue;  // t^0 part equals the original monomial
          auto& row = con.try_emplace(key, std::vector<uint32_t>(mons.size(), 0)).first->second;
          row[j] = c;
        }
      }
      for (auto& [key, row] : con) rows.push_back(std::move(row));
    }
  }
  std::vector<MultiPoly> basis;
  for (const auto& vec : kernel_of_rows(f, rows, mons.size())) {
    MultiPoly g(f, nv);
    for (size_t i = 0; i < mons.size(); ++i)
      if (vec[i]) g.set_coeff(mons[i], vec[i]);
    basis.push_back(std::move(g));
  }
  return basis;
}

}  // namespace

std::vector<MultiPoly> invariant_space_adjoint(uint32_t n, uint32_t p, uint32_t d) {
  return invariant_space_impl(n, p, d, /*transpose=*/false);
}

std::vector<MultiPoly> invariant_space_coset_functions(uint32_t n, uint32_t p, uint32_t d) {
  return invariant_space_impl(n, p, d, /*transpose=*/true);
}

std::vector<uint32_t> dual_coordinates(const Mat& sl_elt) {
  uint32_t n = static_cast<uint32_t>(sl_elt.rows());
  std::vector<uint32_t> out;
  for (auto [i, j] : pgl_basis_labels(n)) {
    if (i != j)
      out.push_back(sl_elt.at(j, i));  // <xi, E_ij> = xi_ji
    else
      out.push_back(sl_elt.at(i, i));
  }
  return out;
}

std::vector<uint32_t> evaluation_coordinates(const PglElement& x) {
  if (auto lift = nilpotent_lift(x)) return dual_coordinates(*lift);
  return dual_coordinates(rep_matrix(x));
}

std::vector<MultiPoly> compute_invariant_generators(uint32_t n, uint32_t p) {
  if (!is_prime(p) || n % p != 0)
    throw std::invalid_argument("compute_invariant_generators: requires p | n");
  if (n > 4) throw ResourceError("compute_invariant_generators: n <= 4 required");
  FieldPtr f = ExtField::make(p, 1);
  // reference regular nilpotent lift: the single Jordan block
  Mat N(f, n, n);
  for (uint32_t i = 0; i + 1 < n; ++i) N.at(i, i + 1) = 1;
  auto ref = dual_coordinates(N);

  std::vector<MultiPoly> chosen;
  for (uint32_t d = 2; d <= n; ++d) {
    auto basis = invariant_space_adjoint(n, p, d);
    std::vector<size_t> order(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      return basis[x].term_count() < basis[y].term_count();
    });
    bool picked = false;
    for (size_t i : order) {
      std::vector<MultiPoly> trial = chosen;
      trial.push_back(basis[i]);
      // differentials independent at the reference point certify algebraic
      // independence of the chosen set
      if (jacobian_rank_at(trial, ref) == trial.size()) {
        chosen = std::move(trial);
        picked = true;
        break;
      }
    }
    if (!picked) {
      if (basis.empty())
        throw std::logic_error("compute_invariant_generators: empty invariant space in degree " +
                               std::to_string(d));
      chosen.push_back(basis[0]);
    }
  }
  return chosen;
}

std::vector<FieldElement> steinberg_quotient(const PglElement& x,
                                             const std::vector<MultiPoly>& gens) {
  auto coords = evaluation_coordinates(x);
  // embed coordinates into the generator field if x lives in an extension
  std::vector<FieldElement> out;
  for (const auto& g : gens) {
    MultiPoly gg = g;
    uint32_t v;
    if (x.field->k() > 1) {
      // re-evaluate with extension-field arithmetic
      MultiPoly lifted(x.field, g.nvars());
      for (const auto& [m, c] : g.terms()) lifted.set_coeff(m, c);
      v = lifted.eval(coords);
    } else {
      v = gg.eval(coords);
    }
    out.emplace_back(x.field, v);
  }
  return out;
}

unsigned __int128 orbit_size_formula(const Partition& lam, uint32_t n, uint64_t Q) {
  auto conj = conjugate_partition(lam);
  uint64_t sum_conj_sq = 0;
  for (uint32_t c : conj) sum_conj_sq += static_cast<uint64_t>(c) * c;
  // |GL_n| = Q^(n(n-1)/2) prod_{i=1..n} (Q^i - 1)
  unsigned __int128 gl = 1;
  for (uint32_t i = 0; i < n; ++i) {
    unsigned __int128 t = 1;
    for (uint32_t j = 0; j < n; ++j) t *= Q;
    unsigned __int128 qi = 1;
    for (uint32_t j = 0; j < i; ++j) qi *= Q;
    gl *= (t - qi);
  }
  // |Z(J_lam)| = Q^(sum conj^2 - sum_k m_k(m_k+1)/2) prod_k prod_{i=1..m_k} (Q^i - 1)
  std::map<uint32_t, uint32_t> mult;
  for (uint32_t part : lam) mult[part] += 1;
  uint64_t exp = sum_conj_sq;
  unsigned __int128 z = 1;
  for (auto [part, m] : mult) {
    exp -= static_cast<uint64_t>(m) * (m + 1) / 2;
    for (uint32_t i = 1; i <= m; ++i) {
      unsigned __int128 qi = 1;
      for (uint32_t j = 0; j < i; ++j) qi *= Q;
      z *= (qi - 1);
    }
  }
  for (uint64_t i = 0; i < exp; ++i) z *= Q;
  return gl / z;
}

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

// ---------------------------------------------------------------------------
// reports

CheckResult cone_count_report(const ConeEnumeration& cone, uint32_t n, uint32_t q) {
  uint64_t expected = 1;
  for (uint32_t i = 0; i < n * n - n; ++i) expected *= q;
  if (!cone.exhaustive) {
    double p0 = static_cast<double>(expected) / static_cast<double>(cone.domain_size);
    double phat = cone.samples_drawn
                      ? static_cast<double>(cone.estimated_size) / static_cast<double>(cone.domain_size)
                      : 0.0;
    double sigma = std::sqrt(p0 * (1 - p0) / static_cast<double>(cone.samples_drawn));
    bool ok = std::abs(phat - p0) <= 4 * sigma + 1e-12;
    CheckResult c = make_check(
        "cone-count-sampled", ok, nlohmann::json{{"count", expected}},
        nlohmann::json{{"estimate", cone.estimated_size}, {"samples", cone.samples_drawn}},
        anchors::kConeCount, "non-exhaustive sampling estimate; tolerance 4 binomial sigma");
    return c;
  }
  return make_check("cone-count", cone.elements.size() == expected, expected, cone.elements.size(),
                    anchors::kConeCount,
                    "ad-nilpotent canonical cosets vs the unique-nilpotent-lift count q^(n^2-n)");
}

CheckResult orbit_report(const ConeOrbits& orbits, const ConeEnumeration& cone, uint32_t n,
                         uint32_t q) {
  uint64_t pgl_order = 1;
  {
    unsigned __int128 gl = 1;
    for (uint32_t i = 0; i < n; ++i) {
      unsigned __int128 qn = 1, qi = 1;
      for (uint32_t j = 0; j < n; ++j) qn *= q;
      for (uint32_t j = 0; j < i; ++j) qi *= q;
      gl *= (qn - qi);
    }
    pgl_order = static_cast<uint64_t>(gl / (q - 1));
  }
  size_t expected_orbits = all_partitions(n).size();
  uint64_t total = 0;
  bool divides = true, formula_ok = true;
  nlohmann::json sizes = nlohmann::json::array();
  for (const auto& rec : orbits.records) {
    total += rec.size_over_q;
    divides = divides && pgl_order % rec.size_over_q == 0;
    uint64_t closed = static_cast<uint64_t>(orbit_size_formula(rec.jordan_type, n, q));
    formula_ok = formula_ok && closed == rec.size_over_q;
    sizes.push_back({{"jordan", partition_to_string(rec.jordan_type)},
                     {"size", rec.size_over_q},
                     {"tangent_rank", rec.tangent_rank}});
  }
  bool ok = orbits.records.size() == expected_orbits && total == cone.elements.size() && divides &&
            formula_ok;
  return make_check("orbits", ok,
                    nlohmann::json{{"orbit_count", expected_orbits},
                                   {"total", cone.elements.size()},
                                   {"sizes_divide_group_order", true},
                                   {"sizes_match_centralizer_formula", true}},
                    nlohmann::json{{"orbit_count", orbits.records.size()},
                                   {"total", total},
                                   {"sizes_divide_group_order", divides},
                                   {"sizes_match_centralizer_formula", formula_ok},
                                   {"orbits", sizes}},
                    anchors::kFinitelyManyOrbits,
                    "BFS orbit partition under transvection and diagonal generators");
}

CheckResult steinberg_fiber_report(FieldPtr field, uint32_t n, const std::vector<MultiPoly>& gens,
                                   const ConeEnumeration& cone, const RunConfig& cfg) {
  const uint64_t q = field->q();
  uint64_t domain = 1;
  for (uint32_t i = 0; i + 1 < n * n; ++i) domain *= q;
  if (!cone.exhaustive || domain > 100000000ull) {
    CheckResult c;
    c.name = "steinberg-fiber";
    c.status = CheckStatus::Skipped;
    c.claim_anchor = anchors::kSteinbergFiber;
    c.notes = "requires an exhaustive enumeration";
    return c;
  }
  // lift generator coefficients into the working field
  std::vector<MultiPoly> lifted;
  for (const auto& g : gens) {
    MultiPoly lg(field, g.nvars());
    for (const auto& [m, c] : g.terms()) lg.set_coeff(m, c);
    lifted.push_back(std::move(lg));
  }
  uint32_t threads = cfg.effective_threads();
  std::vector<std::array<uint64_t, 3>> local(threads, {0, 0, 0});  // vanish, nilpotent, nil-not-vanish
  parallel_chunks(domain, threads, [&](uint32_t chunk, uint64_t begin, uint64_t end) {
    auto& acc = local[chunk];
    for (uint64_t code = begin; code < end; ++code) {
      // decode a traceless matrix: free entries everywhere except bottom-right
      Mat xi(field, n, n);
      uint64_t c = code;
      auto entries = free_entries(n);
      for (size_t idx = entries.size(); idx-- > 0;) {
        auto [i, j] = entries[idx];
        xi.at(i, j) = static_cast<uint32_t>(c % q);
        c /= q;
      }
      uint32_t tr = 0;
      for (uint32_t i = 0; i + 1 < n; ++i) tr = field->add(tr, xi.at(i, i));
      xi.at(n - 1, n - 1) = field->neg(tr);
      auto coords = dual_coordinates(xi);
      bool vanish = true;
      for (const auto& g : lifted)
        if (g.eval(coords) != 0) { vanish = false; break; }
      Mat P = xi;
      bool nil = false;
      for (uint32_t s = 0; s < n; ++s) {
        if (P.is_zero()) { nil = true; break; }
        P = P * xi;
      }
      nil = nil || P.is_zero();
      if (vanish) ++acc[0];
      if (nil) ++acc[1];
      if (nil && !vanish) ++acc[2];
    }
  });
  uint64_t vanish = 0, nil = 0, bad = 0;
  for (const auto& a : local) { vanish += a[0]; nil += a[1]; bad += a[2]; }
  bool superset = bad == 0;
  bool equal = superset && vanish == nil;
  CheckResult c = make_check(
      "steinberg-fiber", superset, nlohmann::json{{"fiber_contains_nilpotent_set", true}},
      nlohmann::json{{"fiber_size", vanish},
                     {"nilpotent_count", nil},
                     {"fiber_contains_nilpotent_set", superset},
                     {"fiber_equals_nilpotent_set", equal}},
      anchors::kSteinbergFiber,
      equal ? "fiber over zero equals the nilpotent set at this (n, q)"
            : "fiber over zero strictly contains the nilpotent set at this (n, q)");
  return c;
}

CheckResult smooth_vs_regular_report(FieldPtr field, uint32_t n, const std::vector<MultiPoly>& gens,
                                     const ConeOrbits& orbits) {
  const uint32_t p = field->p();
  // precompute formal partials once
  std::vector<std::vector<MultiPoly>> partials;
  for (const auto& g : gens) {
    std::vector<MultiPoly> row;
    for (size_t v = 0; v < g.nvars(); ++v) row.push_back(g.derivative(v));
    partials.push_back(std::move(row));
  }
  size_t nv = n * n - 1;
  std::vector<uint64_t> smooth, regular;
  for (size_t oi = 0; oi < orbits.records.size(); ++oi) {
    for (uint64_t key : orbits.members[oi]) {
      PglElement x = pgl_from_key(field, n, key);
      auto lift = nilpotent_lift(x);
      auto coords = dual_coordinates(*lift);
      Mat J(field, gens.size(), nv);
      for (size_t gi = 0; gi < gens.size(); ++gi)
        for (size_t v = 0; v < nv; ++v) J.at(gi, v) = partials[gi][v].eval(coords);
      if (J.rank() == n - 1) smooth.push_back(key);
      if (orbits.records[oi].is_regular) regular.push_back(key);
    }
  }
  std::sort(smooth.begin(), smooth.end());
  std::sort(regular.begin(), regular.end());
  bool equal = smooth == regular;
  std::vector<uint64_t> mismatches;
  std::set_symmetric_difference(smooth.begin(), smooth.end(), regular.begin(), regular.end(),
                                std::back_inserter(mismatches));
  nlohmann::json actual{{"smooth_count", smooth.size()},
                        {"regular_count", regular.size()},
                        {"sets_coincide", equal},
                        {"mismatch_count", mismatches.size()}};
  if (!mismatches.empty()) {
    nlohmann::json mm = nlohmann::json::array();
    for (size_t i = 0; i < mismatches.size() && i < 32; ++i) mm.push_back(mismatches[i]);
    actual["mismatch_keys"] = mm;
  }

  if (n == 2 && p == 2) {
    // documented edge case, always reported as an anomaly rather than a pass:
    // the Weyl invariant ring at (2,2) is generated in degree 1 (the S_2
    // action on X is trivial), no degree-1 adjoint invariant exists, and the
    // degree-1 coset-function invariant (the trace) has everywhere-full
    // Jacobian rank although 0 is not regular
    auto coset_d1 = invariant_space_coset_functions(2, 2, 1);
    std::string note =
        "documented (2,2) edge: outside the n > 2 scope of the smooth/regular statement; ";
    note += "adjoint degree-1 invariant space is empty while the Weyl side is generated in degree 1; ";
    if (!coset_d1.empty()) {
      std::vector<uint64_t> coset_smooth;
      for (size_t oi = 0; oi < orbits.records.size(); ++oi)
        for (uint64_t key : orbits.members[oi]) {
          PglElement x = pgl_from_key(field, n, key);
          auto coords = dual_coordinates(*nilpotent_lift(x));
          if (jacobian_rank_at(coset_d1, coords) == 1) coset_smooth.push_back(key);
        }
      note += "the degree-1 coset-function invariant (trace, '" + coset_d1[0].to_string() +
              "') has full Jacobian rank at " + std::to_string(coset_smooth.size()) + " of " +
              std::to_string(regular.size() + 1) +
              " cone points including 0, which is not regular";
      actual["trace_smooth_count"] = coset_smooth.size();
    }
    CheckResult c;
    c.name = "smooth-vs-regular";
    c.status = CheckStatus::Anomaly;
    c.expected = nlohmann::json{{"sets_coincide", true}};
    c.actual = actual;
    c.claim_anchor = anchors::kSmoothRegular;
    c.notes = note;
    return c;
  }
  return make_check("smooth-vs-regular", equal, nlohmann::json{{"sets_coincide", true}}, actual,
                    anchors::kSmoothRegular,
                    "Jacobian-smooth cone points vs the maximal adjoint orbit");
}

std::vector<CheckResult> codimension_report(FieldPtr field, uint32_t n, const ConeOrbits& orbits) {
  const uint32_t q = field->q();
  std::vector<CheckResult> out;

  // formula oracle: conjugate-partition centralizer dimension vs brute force
  bool oracle_ok = true;
  nlohmann::json oracle = nlohmann::json::array();
  for (const auto& lam : all_partitions(n)) {
    uint64_t formula = centralizer_exact_typeA(lam);
    uint64_t brute = commutant_dimension_bruteforce(lam, field->p());
    oracle_ok = oracle_ok && formula == brute;
    oracle.push_back({{"partition", partition_to_string(lam)},
                      {"formula", formula},
                      {"bruteforce", brute}});
  }
  out.push_back(make_check("codim-centralizer-oracle", oracle_ok,
                           nlohmann::json{{"formula_matches_bruteforce", true}},
                           nlohmann::json{{"partitions", oracle}}, anchors::kCodimension,
                           "sum of squared conjugate parts vs linear solve of [y, x] = 0"));

  // per-orbit dimensions: partition formula is the arbiter; tangent rank and
  // two-q point counts are recorded as evidence
  uint64_t cone_dim = static_cast<uint64_t>(n) * n - n;
  uint64_t reg_dim = 0, max_nonreg = 0;
  nlohmann::json rows = nlohmann::json::array();
  bool sizes_ok = true;
  for (const auto& rec : orbits.records) {
    uint64_t sum_sq = centralizer_exact_typeA(rec.jordan_type);
    uint64_t dim = static_cast<uint64_t>(n) * n - sum_sq;
    unsigned __int128 s1 = orbit_size_formula(rec.jordan_type, n, q);
    unsigned __int128 s2 = orbit_size_formula(rec.jordan_type, n, static_cast<uint64_t>(q) * q);
    // point-count evidence: the log ratio carries finite-field corrections at
    // small q, so the exact partition formula is the arbiter
    double estimate = dim == 0 ? 0.0
                               : std::log(static_cast<double>(s2) / static_cast<double>(s1)) /
                                     std::log(static_cast<double>(q));
    sizes_ok = sizes_ok && static_cast<uint64_t>(s1) == rec.size_over_q;
    if (rec.is_regular)
      reg_dim = dim;
    else
      max_nonreg = std::max(max_nonreg, dim);
    rows.push_back({{"jordan", partition_to_string(rec.jordan_type)},
                    {"dim_formula", dim},
                    {"dim_point_count_estimate", estimate},
                    {"tangent_rank", rec.tangent_rank},
                    {"size_q", rec.size_over_q},
                    {"size_q2", u128_to_string(s2)}});
  }
  bool dim_ok = reg_dim == cone_dim && sizes_ok;
  out.push_back(make_check(
      "codim-cone-dimension", dim_ok,
      nlohmann::json{{"cone_dim", cone_dim}, {"bfs_sizes_match_formula", true}},
      nlohmann::json{{"regular_orbit_dim", reg_dim}, {"orbits", rows},
                     {"bfs_sizes_match_formula", sizes_ok}},
      anchors::kCodimension,
      "cone dimension equals dim G - rank via the partition formula; tangent ranks and two-q "
      "point-count estimates are recorded as evidence and may deviate at small q"));

  uint64_t gap = cone_dim - max_nonreg;
  out.push_back(make_check("codim-complement-gap", gap >= 2, nlohmann::json{{"min_gap", 2}},
                           nlohmann::json{{"gap", gap}, {"largest_nonregular_dim", max_nonreg}},
                           anchors::kCodimension,
                           "complement of the regular orbit has codimension at least 2"));
  return out;
}

std::vector<CheckResult> kw_compatibility_report(uint32_t n, uint32_t p) {
  std::vector<CheckResult> out;
  GroupAction weyl = build_sn_quotient_action(n, p);
  FieldPtr f = ExtField::make(p, 1);
  auto labels = pgl_basis_labels(n);
  for (uint32_t d = 1; d <= n; ++d) {
    auto dual = invariant_space_adjoint(n, p, d);
    auto weyl_basis = invariant_space(weyl, d, std::max(12u, n));
    // restriction to the diagonal: kill off-diagonal variables, rename the
    // diagonal variables to the X basis
    std::vector<MultiPoly> restricted;
    for (const auto& g : dual) {
      MultiPoly r(f, n - 1);
      for (const auto& [m, c] : g.terms()) {
        Monomial rm(n - 1, 0);
        bool diagonal_only = true;
        for (size_t v = 0; v < labels.size() && diagonal_only; ++v) {
          if (!m[v]) continue;
          auto [a, b] = labels[v];
          if (a != b)
            diagonal_only = false;
          else
            rm[a] = static_cast<uint8_t>(rm[a] + m[v]);
        }
        if (diagonal_only) r.set_coeff(rm, f->add(r.coeff(rm), c));
      }
      restricted.push_back(std::move(r));
    }
    // injectivity: the restrictions stay linearly independent
    std::set<Monomial> support;
    for (const auto& r : restricted)
      for (const auto& [m, c] : r.terms()) support.insert(m);
    for (const auto& w : weyl_basis)
      for (const auto& [m, c] : w.terms()) support.insert(m);
    std::vector<Monomial> cols(support.begin(), support.end());
    std::map<Monomial, size_t> cidx;
    for (size_t i = 0; i < cols.size(); ++i) cidx[cols[i]] = i;
    auto to_row = [&](const MultiPoly& g) {
      std::vector<uint32_t> row(cols.size(), 0);
      for (const auto& [m, c] : g.terms()) row[cidx[m]] = c;
      return row;
    };
    std::vector<std::vector<uint32_t>> rrows;
    for (const auto& r : restricted) rrows.push_back(to_row(r));
    size_t restriction_rank = cols.empty() ? 0 : row_rank(f, rrows, cols.size());
    // restriction lands inside the Weyl invariant space
    std::vector<std::vector<uint32_t>> wrows;
    for (const auto& w : weyl_basis) wrows.push_back(to_row(w));
    size_t weyl_rank = cols.empty() ? 0 : row_rank(f, wrows, cols.size());
    std::vector<std::vector<uint32_t>> joint = wrows;
    joint.insert(joint.end(), rrows.begin(), rrows.end());
    size_t joint_rank = cols.empty() ? 0 : row_rank(f, joint, cols.size());
    bool lands_in_weyl = joint_rank == weyl_rank;
    bool dims_match = dual.size() == weyl_basis.size();
    bool injective = restriction_rank == dual.size();
    bool ok = dims_match && injective && lands_in_weyl;
    CheckResult c = make_check(
        "kw-compat-degree-" + std::to_string(d), ok,
        nlohmann::json{{"dims_match", true}, {"restriction_injective", true},
                       {"restriction_in_weyl_space", true}},
        nlohmann::json{{"adjoint_dim", dual.size()},
                       {"weyl_dim", weyl_basis.size()},
                       {"restriction_rank", restriction_rank},
                       {"restriction_in_weyl_space", lands_in_weyl}},
        anchors::kKWIsomorphism, "");
    if (!ok && n == 2) {
      // the rank-1 case sits outside the restriction-isomorphism hypotheses
      c.status = CheckStatus::Anomaly;
      c.notes = "documented (2,2) edge: restriction isomorphism fails in degree 1; the Weyl side "
                "has the degree-1 trace-type invariant while the adjoint side has none";
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckResult> run_cone_checks(uint32_t n, uint32_t p, uint32_t k,
                                         const std::vector<std::string>& checks,
                                         const RunConfig& cfg) {
  auto wants = [&](const std::string& name) {
    if (checks.empty()) return true;
    return std::find(checks.begin(), checks.end(), name) != checks.end();
  };
  std::vector<CheckResult> out;
  FieldPtr field = ExtField::make(p, k);
  ConeEnumeration cone = enumerate_nilcone(field, n, cfg);
  const uint32_t q = field->q();

  if (wants("count")) out.push_back(cone_count_report(cone, n, q));

  std::optional<ConeOrbits> orbits;
  auto need_orbits = [&]() -> bool {
    if (!cone.exhaustive) return false;
    if (!orbits) orbits = adjoint_orbits(cone, field, n);
    return true;
  };
  auto skipped = [&](const char* name, const char* anchor) {
    CheckResult c;
    c.name = name;
    c.status = CheckStatus::Skipped;
    c.claim_anchor = anchor;
    c.notes = "requires an exhaustive enumeration";
    return c;
  };

  if (wants("orbits")) {
    if (need_orbits())
      out.push_back(orbit_report(*orbits, cone, n, q));
    else
      out.push_back(skipped("orbits", anchors::kFinitelyManyOrbits));
  }

  std::optional<std::vector<MultiPoly>> gens;
  auto need_gens = [&]() -> const std::vector<MultiPoly>& {
    if (!gens) gens = compute_invariant_generators(n, p);
    return *gens;
  };

  if (wants("steinberg")) out.push_back(steinberg_fiber_report(field, n, need_gens(), cone, cfg));
  if (wants("smooth-regular")) {
    if (need_orbits())
      out.push_back(smooth_vs_regular_report(field, n, need_gens(), *orbits));
    else
      out.push_back(skipped("smooth-vs-regular", anchors::kSmoothRegular));
  }
  if (wants("codim")) {
    if (need_orbits()) {
      auto rs = codimension_report(field, n, *orbits);
      out.insert(out.end(), rs.begin(), rs.end());
    } else {
      out.push_back(skipped("codim", anchors::kCodimension));
    }
  }
  if (wants("kw")) {
    auto rs = kw_compatibility_report(n, p);
    out.insert(out.end(), rs.begin(), rs.end());
  }
  return out;
}

}  // namespace nilab
