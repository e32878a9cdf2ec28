#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace srg {

class FieldElement;

// Finite field GF(p^k), p^k <= 625.
//
// Elements are indexed 0..q-1 by reading their coefficient vector (constant
// term first) as a base-p integer, so the prime subfield occupies indices
// 0..p-1 and addition/multiplication are dense table lookups. Moduli are
// pinned per (p,k): Conway polynomials for every size this library builds
// geometry over, the lexicographically first primitive polynomial otherwise.
// A prime field uses the modulus "x".
//
// Field is a cheap handle to shared immutable tables; two handles compare
// equal iff they describe the same (p,k).
class Field {
 public:
  using Index = std::uint16_t;

  static constexpr int kMaxOrder = 625;

  // Throws std::invalid_argument for non-prime p, k < 1 or p^k > 625.
  static Field make(int p, int k);
  // Convenience: the field of the given prime-power order.
  static Field of_order(int q);

  int characteristic() const;
  int degree() const;
  int order() const;
  // Monic modulus, coefficients low to high (length k+1).
  std::span<const int> modulus() const;

  Index add(Index a, Index b) const { return tab_->add[a * q_ + b]; }
  Index sub(Index a, Index b) const { return tab_->add[a * q_ + tab_->neg[b]]; }
  Index neg(Index a) const { return tab_->neg[a]; }
  Index mul(Index a, Index b) const { return tab_->mul[a * q_ + b]; }
  // Throws std::domain_error on zero.
  Index inv(Index a) const;
  Index pow(Index a, long long e) const;
  // x -> x^base_q, the involution of GF(base_q^2). Throws std::invalid_argument
  // unless base_q^2 equals the field order.
  Index conjugate(Index a, int base_q) const;

  // Constant term first; missing high coefficients are zero.
  Index from_coefficients(std::span<const int> coeffs) const;
  std::vector<int> coefficients(Index a) const;

  FieldElement element(Index a) const;
  FieldElement zero() const;
  FieldElement one() const;

  // Multiplicative order of a nonzero element.
  int multiplicative_order(Index a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  struct Tables {
    std::vector<int> modulus;
    std::vector<Index> add, mul, neg, inv;
  };

  Field(int p, int k, std::shared_ptr<const Tables> tab)
      : p_(p), k_(k), q_(tab->neg.size()), tab_(std::move(tab)) {}

  static std::shared_ptr<const Tables> build(int p, int k);

  int p_ = 0;
  int k_ = 0;
  int q_ = 0;
  std::shared_ptr<const Tables> tab_;
};

// Value-type element bound to its field. Mixing fields throws
// std::invalid_argument.
class FieldElement {
 public:
  FieldElement(Field f, Field::Index i) : f_(std::move(f)), i_(i) {}

  const Field& field() const { return f_; }
  Field::Index index() const { return i_; }
  bool is_zero() const { return i_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const { return {f_, f_.neg(i_)}; }
  FieldElement inv() const { return {f_, f_.inv(i_)}; }
  FieldElement pow(long long e) const { return {f_, f_.pow(i_, e)}; }
  FieldElement conjugate(int base_q) const { return {f_, f_.conjugate(i_, base_q)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.f_ == b.f_ && a.i_ == b.i_;
  }

 private:
  void same_field(const FieldElement& o) const;

  Field f_;
  Field::Index i_;
};

// Prime-power helpers.
bool is_prime(int n);
// Returns {p, k} with q = p^k, or {0, 0} when q is not a prime power.
std::pair<int, int> prime_power(int q);

}  // namespace srg
