#include "srgkit/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace srg {
namespace {

// Conway polynomials, coefficients low to high, monic.
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
      {{17, 2}, {3, 16, 1}},
      {{19, 2}, {2, 18, 1}},
      {{23, 2}, {5, 21, 1}},
  };
  return table;
}

// Polynomial arithmetic modulo (p, modulus) on coefficient vectors of length k.
struct PolyRing {
  int p, k;
  std::vector<int> mod;  // length k+1, monic

  std::vector<int> decode(int idx) const {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) {
      c[i] = idx % p;
      idx /= p;
    }
    return c;
  }
  int encode(const std::vector<int>& c) const {
    int idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * p + c[i];
    return idx;
  }
  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int d = 2 * k - 2; d >= k; --d) {
      int c = prod[d];
      if (c == 0) continue;
      for (int i = 0; i <= k; ++i)
        prod[d - k + i] = ((prod[d - k + i] - c * mod[i]) % p + p) % p;
    }
    prod.resize(k);
    return prod;
  }
};

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Multiplicative order of x modulo the polynomial; 0 if x is not invertible.
int order_of_x(const PolyRing& r) {
  const int q = ipow(r.p, r.k);
  std::vector<int> x(r.k, 0), cur(r.k, 0);
  if (r.k == 1) return 0;
  x[1] = 1;
  cur = x;
  std::vector<int> one(r.k, 0);
  one[0] = 1;
  for (int e = 1; e < q; ++e) {
    if (cur == one) return e;
    cur = r.mul(cur, x);
  }
  return 0;
}

std::vector<int> first_primitive(int p, int k) {
  const int q = ipow(p, k);
  // Enumerate monic polynomials by the base-p value of their lower coefficients.
  for (int low = 0; low < q; ++low) {
    PolyRing r{p, k, {}};
    r.mod = r.decode(low);
    r.mod.push_back(1);
    if (r.mod[0] == 0) continue;
    if (order_of_x(r) == q - 1) return r.mod;
  }
  throw std::logic_error("no primitive polynomial found");
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return {0, 0};
  return {p, k};
}

std::shared_ptr<const Field::Tables> Field::build(int p, int k) {
  auto tab = std::make_shared<Tables>();
  int q = 1;
  for (int i = 0; i < k; ++i) q *= p;

  PolyRing ring{p, k, {}};
  if (k == 1) {
    ring.mod = {0, 1};
  } else if (auto it = conway_table().find({p, k}); it != conway_table().end()) {
    ring.mod = it->second;
  } else {
    ring.mod = first_primitive(p, k);
  }
  tab->modulus = ring.mod;

  tab->add.resize(q * q);
  tab->mul.resize(q * q);
  tab->neg.resize(q);
  tab->inv.assign(q, 0);
  std::vector<std::vector<int>> coeffs(q);
  for (int a = 0; a < q; ++a) coeffs[a] = ring.decode(a);

  for (int a = 0; a < q; ++a) {
    std::vector<int> n(k);
    for (int i = 0; i < k; ++i) n[i] = (p - coeffs[a][i]) % p;
    tab->neg[a] = static_cast<Index>(ring.encode(n));
    for (int b = 0; b < q; ++b) {
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (coeffs[a][i] + coeffs[b][i]) % p;
      tab->add[a * q + b] = static_cast<Index>(ring.encode(s));
      if (k == 1) {
        tab->mul[a * q + b] = static_cast<Index>((a * b) % p);
      } else {
        tab->mul[a * q + b] = static_cast<Index>(ring.encode(ring.mul(coeffs[a], coeffs[b])));
      }
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (tab->mul[a * q + b] == 1) {
        tab->inv[a] = static_cast<Index>(b);
        break;
      }
  return tab;
}

Field Field::make(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("field: characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("field: extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field: order exceeds 625");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Tables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = build(p, k);
  return Field(p, k, slot);
}

Field Field::of_order(int q) {
  auto [p, k] = prime_power(q);
  if (p == 0) throw std::invalid_argument("field: " + std::to_string(q) + " is not a prime power");
  return make(p, k);
}

int Field::characteristic() const { return p_; }
int Field::degree() const { return k_; }
int Field::order() const { return q_; }
std::span<const int> Field::modulus() const { return tab_->modulus; }

Field::Index Field::inv(Index a) const {
  if (a == 0) throw std::domain_error("field: inverse of zero");
  return tab_->inv[a];
}

Field::Index Field::pow(Index a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Index result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Field::Index Field::conjugate(Index a, int base_q) const {
  if (base_q * base_q != q_)
    throw std::invalid_argument("conjugate: " + std::to_string(base_q) + "^2 != " + std::to_string(q_));
  return pow(a, base_q);
}

Field::Index Field::from_coefficients(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > k_) throw std::invalid_argument("field: coefficient vector length");
  int idx = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (coeffs[i] < 0 || coeffs[i] >= p_) throw std::invalid_argument("field: coefficient out of range");
    idx = idx * p_ + coeffs[i];
  }
  return static_cast<Index>(idx);
}

std::vector<int> Field::coefficients(Index a) const {
  std::vector<int> c(k_);
  int idx = a;
  for (int i = 0; i < k_; ++i) {
    c[i] = idx % p_;
    idx /= p_;
  }
  return c;
}

FieldElement Field::element(Index a) const {
  if (a >= q_) throw std::out_of_range("field: element index");
  return FieldElement(*this, a);
}
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

int Field::multiplicative_order(Index a) const {
  if (a == 0) throw std::domain_error("field: order of zero");
  Index x = a;
  int e = 1;
  while (x != 1) {
    x = mul(x, a);
    ++e;
  }
  return e;
}

void FieldElement::same_field(const FieldElement& o) const {
  if (!(f_ == o.f_)) throw std::invalid_argument("field element: mixed fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  same_field(o);
  return {f_, f_.add(i_, o.i_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  same_field(o);
  return {f_, f_.sub(i_, o.i_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  same_field(o);
  return {f_, f_.mul(i_, o.i_)};
}

}  // namespace srg
