#include "nilab/weylinv.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "nilab/rootsys.hpp"

namespace nilab {

namespace {

std::vector<Monomial> degree_monomials(size_t nvars, uint32_t d) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  // odometer over exponent vectors with total degree d
  std::function<void(size_t, uint32_t)> rec = [&](size_t v, uint32_t left) {
    if (v + 1 == nvars) {
      cur[v] = static_cast<uint8_t>(left);
      out.push_back(cur);
      return;
    }
    for (uint32_t e = 0; e <= left; ++e) {
      cur[v] = static_cast<uint8_t>(e);
      rec(v + 1, left - e);
    }
  };
  if (nvars == 0) return out;
  rec(0, d);
  return out;
}

std::vector<MultiPoly> generator_images(const GroupAction& a, const Mat& g) {
  // substitution images: variable x_j -> sum_i g[i][j] x_i
  std::vector<MultiPoly> images;
  for (uint32_t j = 0; j < a.dim; ++j) {
    MultiPoly im(a.field, a.dim);
    for (uint32_t i = 0; i < a.dim; ++i) {
      if (g.at(i, j)) {
        Monomial m(a.dim, 0);
        m[i] = 1;
        im.set_coeff(m, g.at(i, j));
      }
    }
    images.push_back(std::move(im));
  }
  return images;
}

}  // namespace

uint64_t matrix_group_order(const GroupAction& a, uint64_t budget) {
  std::set<std::vector<uint32_t>> seen;
  Mat id = Mat::identity(a.field, a.dim);
  seen.insert(id.data());
  std::vector<Mat> frontier{id};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& x : frontier) {
      for (const Mat& g : a.generators) {
        Mat y = g * x;
        if (seen.insert(y.data()).second) {
          if (seen.size() > budget)
            throw ResourceError("matrix_group_order: enumeration budget exceeded");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

GroupAction build_sn_quotient_action(uint32_t n, uint32_t p) {
  if (n < 2) throw std::invalid_argument("build_sn_quotient_action: n must be >= 2");
  if (!is_prime(p)) throw std::invalid_argument("build_sn_quotient_action: p must be prime");
  if (n % p != 0)
    throw std::invalid_argument("build_sn_quotient_action: requires p | n, got n=" +
                                std::to_string(n) + ", p=" + std::to_string(p));
  GroupAction a;
  a.field = ExtField::make(p, 1);
  a.dim = n - 1;
  a.group_order = 1;
  for (uint32_t i = 2; i <= n; ++i) a.group_order *= i;
  a.label = "S" + std::to_string(n) + "-on-X-mod-" + std::to_string(p);

  auto perm_matrix = [&](const std::vector<uint32_t>& sigma) {
    // column j = image of ebar_j; ebar_{n-1} (0-indexed) equals -(sum of basis)
    Mat m(a.field, n - 1, n - 1);
    for (uint32_t j = 0; j + 1 < n; ++j) {
      uint32_t im = sigma[j];
      if (im + 1 < n) {
        m.at(im, j) = 1;
      } else {
        for (uint32_t i = 0; i + 1 < n; ++i) m.at(i, j) = a.field->neg(1);
      }
    }
    return m;
  };
  std::vector<uint32_t> transposition(n), cycle(n);
  for (uint32_t i = 0; i < n; ++i) transposition[i] = i;
  std::swap(transposition[0], transposition[1]);
  for (uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  a.generators = {perm_matrix(transposition), perm_matrix(cycle)};
  return a;
}

GroupAction build_g2_weyl_action(uint32_t p) {
  if (p != 2 && p != 3)
    throw std::invalid_argument("build_g2_weyl_action: only p in {2, 3} is supported");
  GroupAction a;
  a.field = ExtField::make(p, 1);
  a.dim = 2;
  a.group_order = 12;
  a.label = "G2-weyl-mod-" + std::to_string(p);
  RootSystemData rs = build_root_system(LieType::G, 2);
  for (const auto& refl : simple_reflections_mod_p(rs, p)) {
    Mat m(a.field, 2, 2);
    for (uint32_t i = 0; i < 2; ++i)
      for (uint32_t j = 0; j < 2; ++j) m.at(i, j) = refl[i][j];
    a.generators.push_back(std::move(m));
  }
  return a;
}

bool is_faithful(const GroupAction& a, uint64_t budget) {
  if (a.group_order == 0)
    throw std::invalid_argument("is_faithful: abstract group order unknown");
  if (a.group_order > budget) throw ResourceError("is_faithful: group order above budget");
  return matrix_group_order(a, budget) == a.group_order;
}

std::vector<MultiPoly> invariant_space(const GroupAction& a, uint32_t d, uint32_t degree_cap) {
  if (d > degree_cap)
    throw ResourceError("invariant_space: degree " + std::to_string(d) + " above cap " +
                        std::to_string(degree_cap));
  auto mons = degree_monomials(a.dim, d);
  std::map<Monomial, size_t> midx;
  for (size_t i = 0; i < mons.size(); ++i) midx[mons[i]] = i;

  std::vector<std::vector<uint32_t>> rows;
  for (const Mat& g : a.generators) {
    auto images = generator_images(a, g);
    // constraints: sub(m_j) - m_j = 0 for each basis monomial, rowed by target monomial
    std::map<Monomial, std::vector<uint32_t>> con;
    for (size_t j = 0; j < mons.size(); ++j) {
      MultiPoly sub = MultiPoly::monomial(a.field, mons[j], 1).substitute(images);
      sub.set_coeff(mons[j], a.field->sub(sub.coeff(mons[j]), 1));
      for (const auto& [m, c] : sub.terms()) {
        auto& row = con.try_emplace(m, std::vector<uint32_t>(mons.size(), 0)).first->second;
        row[j] = c;
      }
    }
    for (auto& [m, row] : con) rows.push_back(std::move(row));
  }
  std::vector<MultiPoly> basis;
  for (const auto& vec : kernel_of_rows(a.field, rows, mons.size())) {
    MultiPoly f(a.field, a.dim);
    for (size_t i = 0; i < mons.size(); ++i)
      if (vec[i]) f.set_coeff(mons[i], vec[i]);
    basis.push_back(std::move(f));
  }
  return basis;
}

std::vector<MultiPoly> elementary_symmetric_images(uint32_t n, uint32_t p) {
  if (!is_prime(p) || n % p != 0)
    throw std::invalid_argument("elementary_symmetric_images: requires p | n");
  FieldPtr f = ExtField::make(p, 1);
  size_t nv = n - 1;
  // e_1..e_{n-1} are the variables; e_n = -(e_1 + ... + e_{n-1})
  std::vector<MultiPoly> evars;
  for (uint32_t i = 0; i + 1 < n; ++i) evars.push_back(MultiPoly::variable(f, nv, i));
  MultiPoly last(f, nv);
  for (uint32_t i = 0; i + 1 < n; ++i) last = last - evars[i];
  evars.push_back(last);

  // elementary symmetric polynomials via the product prod (1 + t e_i), degree-sliced
  std::vector<MultiPoly> slices{MultiPoly::constant(f, nv, 1)};
  for (uint32_t i = 0; i < n; ++i) {
    std::vector<MultiPoly> next(slices.size() + 1, MultiPoly::zero(f, nv));
    for (size_t k = 0; k < slices.size(); ++k) {
      next[k] = next[k] + slices[k];
      next[k + 1] = next[k + 1] + slices[k] * evars[i];
    }
    slices = std::move(next);
  }
  return {slices.begin() + 2, slices.end()};  // s_2..s_n
}

InvariantCert certify_polynomial_invariants(const GroupAction& a,
                                            const std::vector<MultiPoly>& candidates,
                                            const GroebnerBudget& budget) {
  for (const auto& c : candidates)
    if (!c.is_homogeneous()) throw std::invalid_argument("certify: candidates must be homogeneous");
  InvariantCert cert;
  cert.generators = candidates;
  cert.group_order = a.group_order;
  cert.image_order = matrix_group_order(a);
  cert.all_invariant = true;
  cert.degree_product = 1;
  for (const auto& c : candidates) {
    cert.degrees.push_back(c.degree());
    cert.degree_product *= c.degree();
    for (const Mat& g : a.generators) {
      if (!(c.substitute(generator_images(a, g)) == c)) cert.all_invariant = false;
    }
  }
  cert.independent = algebraically_independent(candidates, budget);
  cert.certified_polynomial =
      cert.all_invariant && cert.independent && cert.degree_product == cert.image_order;
  return cert;
}

QuotientDim coinvariant_dimension(const GroupAction& a, const std::vector<MultiPoly>& gens,
                                  const GroebnerBudget& budget) {
  (void)a;
  PolyIdeal ideal{gens, MonomialOrder::GRevLex, std::nullopt};
  return quotient_dimension(std::move(ideal), budget);
}

bool is_irreducible(const GroupAction& a) {
  if (a.dim > 6 || a.field->q() > 9)
    throw ResourceError("is_irreducible: dim <= 6 and q <= 9 required for exhaustive search");
  if (a.dim == 1) return true;
  uint32_t q = a.field->q();
  uint64_t total = 1;
  for (uint32_t i = 0; i < a.dim; ++i) total *= q;
  // a proper nonzero stable subspace contains the submodule generated by one
  // of its vectors, so it suffices to scan the submodule generated by each v
  for (uint64_t code = 1; code < total; ++code) {
    std::vector<uint32_t> v(a.dim);
    uint64_t c = code;
    for (uint32_t i = 0; i < a.dim; ++i) { v[i] = static_cast<uint32_t>(c % q); c /= q; }
    // grow span of {g.v} under the generators
    Mat span(a.field, 1, a.dim);
    for (uint32_t i = 0; i < a.dim; ++i) span.at(0, i) = v[i];
    span.rref();
    size_t dim = 1;
    bool grew = true;
    std::vector<std::vector<uint32_t>> basis{v};
    while (grew && dim < a.dim) {
      grew = false;
      std::vector<std::vector<uint32_t>> fresh;
      for (const auto& b : basis) {
        for (const Mat& g : a.generators) {
          std::vector<uint32_t> gb(a.dim, 0);
          for (uint32_t i = 0; i < a.dim; ++i)
            for (uint32_t j = 0; j < a.dim; ++j)
              gb[i] = a.field->add(gb[i], a.field->mul(g.at(i, j), b[j]));
          fresh.push_back(std::move(gb));
        }
      }
      std::vector<std::vector<uint32_t>> all = basis;
      all.insert(all.end(), fresh.begin(), fresh.end());
      size_t r = row_rank(a.field, all, a.dim);
      if (r > dim) {
        dim = r;
        basis = std::move(all);
        grew = true;
      }
    }
    if (dim < a.dim) return false;
  }
  return true;
}

std::vector<MultiPoly> find_polynomial_generators(const GroupAction& a, uint32_t max_degree,
                                                  const GroebnerBudget& budget) {
  uint64_t image_order = matrix_group_order(a);
  std::vector<MultiPoly> chosen;
  uint64_t product = 1;
  for (uint32_t d = 1; d <= max_degree && product < image_order; ++d) {
    auto basis = invariant_space(a, d, max_degree);
    std::vector<size_t> order(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
      return basis[x].term_count() < basis[y].term_count();
    });
    for (size_t i : order) {
      if (product * d > image_order) break;
      std::vector<MultiPoly> trial = chosen;
      trial.push_back(basis[i]);
      if (algebraically_independent(trial, budget)) {
        chosen = std::move(trial);
        product *= d;
        if (product == image_order) break;
      }
    }
  }
  return chosen;
}

}  // namespace nilab
