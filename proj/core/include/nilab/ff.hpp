#pragma once

// Exact arithmetic in F_p and F_{p^k}, k <= 3. Elements are stored as
// canonical codes sum(c_i * p^i) with 0 <= c_i < p, so equality and hashing
// are structural. Fields are immutable after construction and safe to share
// across threads.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilab {

class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

bool is_prime(uint32_t m);

class PrimeField {
 public:
  explicit PrimeField(uint32_t p);
  uint32_t p() const { return p_; }

 private:
  uint32_t p_;
};

class ExtField;
using FieldPtr = std::shared_ptr<const ExtField>;

// F_{p^k} with the lexicographically least monic irreducible modulus of
// degree k (coefficient tuples compared from the leading coefficient down,
// i.e. by the value sum(c_i p^i)).
class ExtField {
 public:
  static FieldPtr make(uint32_t p, uint32_t k = 1);

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t q() const { return q_; }
  // Coefficients c_0..c_{k-1} of the modulus x^k + c_{k-1} x^{k-1} + ... + c_0.
  const std::vector<uint32_t>& modulus() const { return mod_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t frobenius(uint32_t a) const { return pow(a, p_); }

  uint32_t from_int(int64_t v) const;  // embed an integer via the prime subfield
  std::vector<uint32_t> coeffs(uint32_t a) const;
  uint32_t encode(const std::vector<uint32_t>& coeffs) const;
  std::string to_string(uint32_t a) const;

  bool same_field(const ExtField& o) const { return p_ == o.p_ && k_ == o.k_; }

 private:
  ExtField(uint32_t p, uint32_t k);
  uint32_t mul_nocache(uint32_t a, uint32_t b) const;
  bool modulus_has_root(const std::vector<uint32_t>& cs) const;

  uint32_t p_, k_, q_;
  std::vector<uint32_t> mod_;
  // multiplication / inverse tables when q is small
  std::vector<uint32_t> mul_table_;
  std::vector<uint32_t> inv_table_;
};

// Element with its parent field, for API-level use. Hot loops work on raw
// codes through ExtField directly.
struct FieldElement {
  FieldPtr field;
  uint32_t code = 0;

  FieldElement() = default;
  FieldElement(FieldPtr f, uint32_t c) : field(std::move(f)), code(c) {}

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code == b.code && a.field && b.field && a.field->same_field(*b.field);
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement frobenius(const FieldElement& a);

}  // namespace nilab
