#include "nilab/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "nilab/linalg.hpp"

namespace nilab {

bool mono_greater(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (ord == MonomialOrder::Lex) {
    return a > b;  // lexicographic on exponent vectors, x0 ranked highest
  }
  uint32_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  // graded reverse lex: smaller exponent in the last differing variable wins
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = static_cast<uint8_t>(a[i] + b[i]);
  return m;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = static_cast<uint8_t>(a[i] - b[i]);
  return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

MultiPoly MultiPoly::constant(FieldPtr f, size_t nvars, uint32_t c) {
  MultiPoly p(std::move(f), nvars);
  if (c) p.terms_[Monomial(nvars, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(FieldPtr f, size_t nvars, size_t i) {
  MultiPoly p(std::move(f), nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.terms_[m] = 1;
  return p;
}

MultiPoly MultiPoly::monomial(FieldPtr f, const Monomial& m, uint32_t c) {
  MultiPoly p(std::move(f), m.size());
  if (c) p.terms_[m] = c;
  return p;
}

uint32_t MultiPoly::degree() const {
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  uint32_t d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  return true;
}

uint32_t MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::set_coeff(const Monomial& m, uint32_t c) {
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  const ExtField& F = *field_;
  MultiPoly out = *this;
  for (const auto& [m, c] : o.terms_) {
    uint32_t s = F.add(out.coeff(m), c);
    out.set_coeff(m, s);
  }
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  const ExtField& F = *field_;
  MultiPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.set_coeff(m, F.sub(out.coeff(m), c));
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  const ExtField& F = *field_;
  MultiPoly out(field_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = mono_mul(ma, mb);
      out.set_coeff(m, F.add(out.coeff(m), F.mul(ca, cb)));
    }
  return out;
}

MultiPoly MultiPoly::scaled(uint32_t s) const {
  const ExtField& F = *field_;
  MultiPoly out(field_, nvars_);
  if (s == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_[m] = F.mul(c, s);
  return out;
}

uint32_t MultiPoly::eval(const std::vector<uint32_t>& point) const {
  const ExtField& F = *field_;
  uint32_t acc = 0;
  for (const auto& [m, c] : terms_) {
    uint32_t v = c;
    for (size_t i = 0; i < nvars_; ++i)
      if (m[i]) v = F.mul(v, F.pow(point[i], m[i]));
    acc = F.add(acc, v);
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  const ExtField& F = *field_;
  size_t out_nvars = images.empty() ? nvars_ : images[0].nvars();
  MultiPoly out(field_, out_nvars);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = MultiPoly::constant(field_, out_nvars, c);
    for (size_t i = 0; i < nvars_; ++i)
      for (uint8_t e = 0; e < m[i]; ++e) t = t * images[i];
    out = out + t;
  }
  return out;
}

MultiPoly MultiPoly::extended(size_t new_nvars) const {
  MultiPoly out(field_, new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial mm(new_nvars, 0);
    std::copy(m.begin(), m.end(), mm.begin());
    out.terms_[mm] = c;
  }
  return out;
}

MultiPoly MultiPoly::derivative(size_t var) const {
  const ExtField& F = *field_;
  MultiPoly out(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    if (!m[var]) continue;
    uint32_t fc = F.mul(c, F.from_int(m[var]));
    if (!fc) continue;
    Monomial mm = m;
    mm[var] -= 1;
    out.set_coeff(mm, F.add(out.coeff(mm), fc));
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  // print highest grevlex terms first
  std::vector<const std::pair<const Monomial, uint32_t>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    return mono_greater(a->first, b->first, MonomialOrder::GRevLex);
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    if (!first) os << " + ";
    first = false;
    const auto& [m, c] = *t;
    bool printed = false;
    if (c != 1 || total_degree(m) == 0) {
      os << field_->to_string(c);
      printed = true;
    }
    for (size_t i = 0; i < nvars_; ++i) {
      if (!m[i]) continue;
      if (printed) os << "*";
      os << "x" << i;
      if (m[i] > 1) os << "^" << static_cast<int>(m[i]);
      printed = true;
    }
  }
  return os.str();
}

const Monomial& MultiPoly::leading_monomial(MonomialOrder ord) const {
  if (terms_.empty()) throw std::domain_error("leading_monomial of zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : terms_)
    if (!best || mono_greater(m, *best, ord)) best = &m;
  return *best;
}

MultiPoly parse_poly(const std::string& text, FieldPtr field, size_t nvars) {
  // grammar: term (('+'|'-') term)* ; term: factor ('*' factor)* ;
  // factor: integer | x<k> ['^' integer]
  MultiPoly out(field, nvars);
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto parse_int = [&]() -> int64_t {
    size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (s == i) throw std::invalid_argument("parse_poly: expected integer at position " + std::to_string(s));
    return std::stoll(text.substr(s, i - s));
  };
  skip();
  bool negate = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negate = text[i] == '-';
    ++i;
  }
  while (true) {
    skip();
    uint32_t coeff = 1;
    Monomial m(nvars, 0);
    bool any = false;
    while (true) {
      skip();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        coeff = field->mul(coeff, field->from_int(parse_int()));
        any = true;
      } else if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
        ++i;
        int64_t vi = parse_int();
        if (vi < 0 || static_cast<size_t>(vi) >= nvars)
          throw std::invalid_argument("parse_poly: variable index out of range");
        int64_t e = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          e = parse_int();
        }
        if (m[vi] + e > 255) throw std::invalid_argument("parse_poly: exponent too large");
        m[vi] = static_cast<uint8_t>(m[vi] + e);
        any = true;
      } else {
        throw std::invalid_argument("parse_poly: unexpected character at position " + std::to_string(i));
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) throw std::invalid_argument("parse_poly: empty term");
    if (negate) coeff = field->neg(coeff);
    out.set_coeff(m, field->add(out.coeff(m), coeff));
    skip();
    if (i >= text.size()) break;
    if (text[i] == '+' || text[i] == '-') {
      negate = text[i] == '-';
      ++i;
    } else {
      throw std::invalid_argument("parse_poly: expected '+' or '-' at position " + std::to_string(i));
    }
  }
  return out;
}

size_t jacobian_rank_at(const std::vector<MultiPoly>& polys, const std::vector<uint32_t>& point) {
  if (polys.empty()) return 0;
  const FieldPtr& f = polys[0].field();
  size_t nv = polys[0].nvars();
  Mat J(f, polys.size(), nv);
  for (size_t i = 0; i < polys.size(); ++i)
    for (size_t v = 0; v < nv; ++v) J.at(i, v) = polys[i].derivative(v).eval(point);
  return J.rank();
}

// ---------------------------------------------------------------------------

namespace {

struct TermRef {
  Monomial mono;
  uint32_t coeff;
};

TermRef leading_term(const MultiPoly& f, MonomialOrder ord) {
  const Monomial& m = f.leading_monomial(ord);
  return {m, f.coeff(m)};
}

MultiPoly make_monic(const MultiPoly& f, MonomialOrder ord) {
  auto lt = leading_term(f, ord);
  return f.scaled(f.field()->inv(lt.coeff));
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis, MonomialOrder ord) {
  const FieldPtr& F = f.field();
  MultiPoly rem(F, f.nvars());
  MultiPoly cur = f;
  while (!cur.is_zero()) {
    auto lt = leading_term(cur, ord);
    bool reduced = false;
    for (const MultiPoly& g : basis) {
      if (g.is_zero()) continue;
      auto gl = leading_term(g, ord);
      if (!mono_divides(gl.mono, lt.mono)) continue;
      uint32_t c = F->mul(lt.coeff, F->inv(gl.coeff));
      MultiPoly q = MultiPoly::monomial(F, mono_div(lt.mono, gl.mono), c);
      cur = cur - q * g;
      reduced = true;
      break;
    }
    if (!reduced) {
      MultiPoly t = MultiPoly::monomial(F, lt.mono, lt.coeff);
      rem = rem + t;
      cur = cur - t;
    }
  }
  return rem;
}

PolyIdeal groebner(PolyIdeal ideal, const GroebnerBudget& budget) {
  if (ideal.gb) return ideal;
  if (ideal.generators.empty()) throw std::invalid_argument("groebner: empty generator list");
  const FieldPtr& F = ideal.generators[0].field();
  MonomialOrder ord = ideal.order;

  std::vector<MultiPoly> basis;
  for (const auto& g : ideal.generators)
    if (!g.is_zero()) basis.push_back(make_monic(g, ord));
  if (basis.empty()) throw std::invalid_argument("groebner: all generators are zero");

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > budget.max_pairs)
      throw ResourceError("groebner: S-pair budget exceeded (" + std::to_string(budget.max_pairs) + ")");
    auto [i, j] = pairs.front();
    pairs.pop_front();
    auto li = leading_term(basis[i], ord), lj = leading_term(basis[j], ord);
    Monomial lcm = mono_lcm(li.mono, lj.mono);
    // product criterion
    if (lcm == mono_mul(li.mono, lj.mono)) continue;
    MultiPoly spoly = MultiPoly::monomial(F, mono_div(lcm, li.mono), 1) * basis[i] -
                      MultiPoly::monomial(F, mono_div(lcm, lj.mono), 1) * basis[j];
    MultiPoly r = normal_form(spoly, basis, ord);
    if (r.is_zero()) continue;
    r = make_monic(r, ord);
    size_t k = basis.size();
    if (k + 1 > budget.max_basis)
      throw ResourceError("groebner: basis size budget exceeded (" + std::to_string(budget.max_basis) + ")");
    for (size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
    basis.push_back(std::move(r));
  }

  // minimalize: drop elements whose leading term is divisible by another's
  std::vector<MultiPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    auto li = leading_term(basis[i], ord);
    bool keep = true;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      auto lj = leading_term(basis[j], ord);
      if (mono_divides(lj.mono, li.mono) && !(lj.mono == li.mono && j > i)) {
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(basis[i]);
  }
  // reduce: each element reduced against the others
  std::vector<MultiPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MultiPoly r = others.empty() ? minimal[i] : normal_form(minimal[i], others, ord);
    if (!r.is_zero()) reduced.push_back(make_monic(r, ord));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return mono_greater(a.leading_monomial(ord), b.leading_monomial(ord), ord);
  });
  ideal.gb = std::move(reduced);
  return ideal;
}

QuotientDim quotient_dimension(PolyIdeal ideal, const GroebnerBudget& budget) {
  ideal = groebner(std::move(ideal), budget);
  const auto& gb = *ideal.gb;
  size_t nv = ideal.generators[0].nvars();
  // unit ideal
  for (const auto& g : gb)
    if (total_degree(g.leading_monomial(ideal.order)) == 0) return {true, 0};
  std::vector<Monomial> lts;
  for (const auto& g : gb) lts.push_back(g.leading_monomial(ideal.order));
  // finiteness: every variable must have a pure power among leading terms
  std::vector<uint32_t> cap(nv, 0);
  for (size_t v = 0; v < nv; ++v) {
    bool found = false;
    for (const auto& m : lts) {
      bool pure = m[v] > 0;
      for (size_t w = 0; w < nv && pure; ++w)
        if (w != v && m[w]) pure = false;
      if (pure) {
        cap[v] = m[v];
        found = true;
        break;
      }
    }
    if (!found) return {false, 0};
  }
  // count standard monomials below the caps
  uint64_t count = 0;
  Monomial cur(nv, 0);
  auto divisible_by_lt = [&](const Monomial& m) {
    for (const auto& lt : lts)
      if (mono_divides(lt, m)) return true;
    return false;
  };
  // iterative odometer over the finite box
  while (true) {
    if (!divisible_by_lt(cur)) ++count;
    size_t v = 0;
    while (v < nv) {
      if (cur[v] + 1u < cap[v]) {
        ++cur[v];
        break;
      }
      cur[v] = 0;
      ++v;
    }
    if (v == nv) break;
  }
  return {true, count};
}

namespace {

// generators of the relation ideal {y_i - f_i} in K[x_0..x_{n-1}, y_0..y_{m-1}]
std::vector<MultiPoly> relation_generators(const std::vector<MultiPoly>& polys) {
  const FieldPtr& F = polys[0].field();
  size_t n = polys[0].nvars();
  size_t m = polys.size();
  std::vector<MultiPoly> gens;
  for (size_t i = 0; i < m; ++i) {
    MultiPoly yi = MultiPoly::variable(F, n + m, n + i);
    gens.push_back(yi - polys[i].extended(n + m));
  }
  return gens;
}

bool supported_on_tags(const MultiPoly& g, size_t n) {
  for (const auto& [m, c] : g.terms()) {
    for (size_t v = 0; v < n; ++v)
      if (m[v]) return false;
  }
  return true;
}

}  // namespace

bool algebraically_independent(const std::vector<MultiPoly>& polys, const GroebnerBudget& budget) {
  if (polys.empty()) return true;
  size_t n = polys[0].nvars();
  if (polys.size() > n)
    return false;  // more polynomials than variables always satisfy a relation
  for (const auto& f : polys)
    if (f.is_zero() || f.degree() == 0) return false;
  PolyIdeal ideal{relation_generators(polys), MonomialOrder::Lex, std::nullopt};
  ideal = groebner(std::move(ideal), budget);
  for (const auto& g : *ideal.gb)
    if (supported_on_tags(g, n)) return false;  // nontrivial relation among the f_i
  return true;
}

bool subalgebra_membership(const MultiPoly& h, const std::vector<MultiPoly>& gens,
                           const GroebnerBudget& budget) {
  if (h.is_zero() || h.degree() == 0) return true;
  if (gens.empty()) return false;
  size_t n = h.nvars();
  PolyIdeal ideal{relation_generators(gens), MonomialOrder::Lex, std::nullopt};
  ideal = groebner(std::move(ideal), budget);
  MultiPoly nf = normal_form(h.extended(n + gens.size()), *ideal.gb, MonomialOrder::Lex);
  return supported_on_tags(nf, n);
}

}  // namespace nilab
