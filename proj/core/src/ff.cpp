#include "nilab/ff.hpp"

#include <sstream>

namespace nilab {

bool is_prime(uint32_t m) {
  if (m < 2) return false;
  for (uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
  if (p > 251) throw std::invalid_argument("PrimeField: modulus above 251 not supported");
}

ExtField::ExtField(uint32_t p, uint32_t k) : p_(p), k_(k) {
  PrimeField check(p);  // validates primality and range
  if (k < 1 || k > 3) throw std::invalid_argument("ExtField: extension degree must be 1..3");
  q_ = 1;
  for (uint32_t i = 0; i < k; ++i) q_ *= p;

  if (k == 1) {
    mod_ = {0};  // modulus x
  } else {
    // scan coefficient tuples in increasing code order; for k in {2,3} a monic
    // polynomial is irreducible over F_p iff it has no root in F_p
    for (uint32_t code = 0;; ++code) {
      if (code >= q_) throw std::logic_error("ExtField: no irreducible modulus found");
      std::vector<uint32_t> cs(k);
      uint32_t v = code;
      for (uint32_t i = 0; i < k; ++i) { cs[i] = v % p; v /= p; }
      if (!modulus_has_root(cs)) { mod_ = cs; break; }
    }
  }

  if (q_ <= 4096) {
    mul_table_.assign(static_cast<size_t>(q_) * q_, 0);
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = a; b < q_; ++b) {
        uint32_t m = mul_nocache(a, b);
        mul_table_[static_cast<size_t>(a) * q_ + b] = m;
        mul_table_[static_cast<size_t>(b) * q_ + a] = m;
      }
    inv_table_.assign(q_, 0);
    for (uint32_t a = 1; a < q_; ++a)
      for (uint32_t b = 1; b < q_; ++b)
        if (mul_table_[static_cast<size_t>(a) * q_ + b] == 1) { inv_table_[a] = b; break; }
  }
}

bool ExtField::modulus_has_root(const std::vector<uint32_t>& cs) const {
  for (uint32_t x = 0; x < p_; ++x) {
    uint64_t v = 1;
    for (uint32_t i = 0; i < k_; ++i) v = v * x % p_;  // x^k
    for (uint32_t i = 0; i < k_; ++i) {
      uint64_t t = cs[i];
      for (uint32_t j = 0; j < i; ++j) t = t * x % p_;
      v = (v + t) % p_;
    }
    if (v == 0) return true;
  }
  return false;
}

FieldPtr ExtField::make(uint32_t p, uint32_t k) {
  return FieldPtr(new ExtField(p, k));
}

uint32_t ExtField::add(uint32_t a, uint32_t b) const {
  if (k_ == 1) { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
  uint32_t out = 0, mul = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * mul;
    a /= p_; b /= p_; mul *= p_;
  }
  return out;
}

uint32_t ExtField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t ExtField::neg(uint32_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  uint32_t out = 0, mul = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t c = a % p_;
    out += (c == 0 ? 0 : p_ - c) * mul;
    a /= p_; mul *= p_;
  }
  return out;
}

uint32_t ExtField::mul_nocache(uint32_t a, uint32_t b) const {
  if (k_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  uint32_t A[3] = {0, 0, 0}, B[3] = {0, 0, 0};
  for (uint32_t i = 0; i < k_; ++i) { A[i] = a % p_; a /= p_; B[i] = b % p_; b /= p_; }
  uint64_t prod[5] = {0, 0, 0, 0, 0};
  for (uint32_t i = 0; i < k_; ++i)
    for (uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + static_cast<uint64_t>(A[i]) * B[j]) % p_;
  // reduce by x^k = -mod
  for (int d = 2 * static_cast<int>(k_) - 2; d >= static_cast<int>(k_); --d) {
    uint64_t c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (uint32_t i = 0; i < k_; ++i) {
      uint64_t t = (p_ - mod_[i] % p_) % p_;
      prod[d - k_ + i] = (prod[d - k_ + i] + c * t) % p_;
    }
  }
  uint32_t out = 0, mulc = 1;
  for (uint32_t i = 0; i < k_; ++i) { out += static_cast<uint32_t>(prod[i]) * mulc; mulc *= p_; }
  return out;
}

uint32_t ExtField::mul(uint32_t a, uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
  return mul_nocache(a, b);
}

uint32_t ExtField::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t ExtField::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("ExtField::inv: inversion of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, static_cast<uint64_t>(q_) - 2);
}

uint32_t ExtField::from_int(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);
}

std::vector<uint32_t> ExtField::coeffs(uint32_t a) const {
  std::vector<uint32_t> cs(k_);
  for (uint32_t i = 0; i < k_; ++i) { cs[i] = a % p_; a /= p_; }
  return cs;
}

uint32_t ExtField::encode(const std::vector<uint32_t>& coeffs) const {
  if (coeffs.size() != k_) throw std::invalid_argument("ExtField::encode: wrong coefficient count");
  uint32_t out = 0;
  for (uint32_t i = k_; i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("ExtField::encode: coefficient out of range");
    out = out * p_ + coeffs[i];
  }
  return out;
}

std::string ExtField::to_string(uint32_t a) const {
  if (k_ == 1) return std::to_string(a);
  auto cs = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (uint32_t i = k_; i-- > 0;) {
    if (!cs[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || cs[i] != 1) os << cs[i];
    if (i >= 1) os << (cs[i] != 1 ? "*x" : "x");
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

static void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field || !b.field || !a.field->same_field(*b.field))
    throw std::invalid_argument("field elements from different fields");
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field, a.field->add(a.code, b.code)};
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field, a.field->mul(a.code, b.code)};
}

FieldElement inv(const FieldElement& a) { return {a.field, a.field->inv(a.code)}; }

FieldElement frobenius(const FieldElement& a) { return {a.field, a.field->frobenius(a.code)}; }

}  // namespace nilab
