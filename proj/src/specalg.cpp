#include "srgkit/specalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace srg {

IntMatrix adjacency_matrix(const Graph& g) {
  const int n = g.order();
  IntMatrix a = IntMatrix::Zero(n, n);
  for (Vertex u = 0; u < n; ++u) for_each_bit(g.row(u), [&](int v) { a(u, v) = 1; });
  return a;
}

std::string to_string(const SrgParams& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.a) + "," +
         std::to_string(p.c) + ")";
}

SrgParams gq_params(int s, int t) { return {(s + 1) * (s * t + 1), s * (t + 1), s - 1, t + 1}; }

std::optional<std::pair<int, int>> gq_shape(const SrgParams& p) {
  const int s = p.a + 1, t = p.c - 1;
  if (s < 1 || t < 1) return std::nullopt;
  if (gq_params(s, t) == p) return std::make_pair(s, t);
  return std::nullopt;
}

std::optional<SrgParams> check_srg(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  const int k = g.degree(0);
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  if (k == 0 || k == n - 1) return std::nullopt;
  int a = -1, c = -1;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      const int cn = common_neighbor_count(g, x, y);
      int& slot = g.adjacent(x, y) ? a : c;
      if (slot < 0)
        slot = cn;
      else if (slot != cn)
        return std::nullopt;
    }
  if (a < 0) a = 0;
  if (c < 0) return std::nullopt;
  return SrgParams{n, k, a, c};
}

Eigenmatrix eigenmatrix(int s, int t) {
  if (s < t) throw std::invalid_argument("eigenmatrix: requires s >= t");
  const long long S = s, T = t;
  Eigenmatrix p;
  p << 1, (S - 1) * (T + 1), (S - 1) * (T * T - 1), T - 1, (S - 1) * T * (S - T),
       1, S - 1, 1 - S, -1, 0,
       1, S - T - 1, (T - 1) * (S - T - 1), T - 1, -T * (S - T),
       1, -T - 1, T + 1, -1, 0,
       1, -T - 1, 1 - T * T, T - 1, T * T;
  return p;
}

namespace {

struct Fraction {
  __int128 num = 0, den = 1;

  static __int128 gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 r = a % b;
      a = b;
      b = r;
    }
    return a;
  }
  Fraction() = default;
  Fraction(__int128 n, __int128 d = 1) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Fraction operator+(const Fraction& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Fraction operator*(const Fraction& o) const { return {num * o.num, den * o.den}; }
  Fraction operator/(const Fraction& o) const { return {num * o.den, den * o.num}; }
};

}  // namespace

std::vector<long long> scheme_multiplicities(int s, int t) {
  const Eigenmatrix p = eigenmatrix(s, t);
  const int r = s == t ? 4 : 5;
  long long n = 0;
  for (int i = 0; i < r; ++i) n += p(0, i);
  std::vector<long long> m(r);
  for (int l = 0; l < r; ++l) {
    Fraction sum;
    for (int i = 0; i < r; ++i) sum = sum + Fraction(static_cast<__int128>(p(l, i)) * p(l, i), p(0, i));
    Fraction ml = Fraction(n) / sum;
    if (ml.den != 1) throw std::logic_error("eigenmatrix: non-integral multiplicity");
    m[l] = static_cast<long long>(ml.num);
  }
  return m;
}

std::vector<std::vector<std::vector<long long>>> scheme_intersection_numbers(int s, int t) {
  const Eigenmatrix p = eigenmatrix(s, t);
  const int r = s == t ? 4 : 5;
  const auto m = scheme_multiplicities(s, t);
  long long n = 0;
  for (int i = 0; i < r; ++i) n += p(0, i);
  std::vector<std::vector<std::vector<long long>>> out(r, std::vector<std::vector<long long>>(r, std::vector<long long>(r)));
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        __int128 sum = 0;
        for (int l = 0; l < r; ++l) sum += static_cast<__int128>(m[l]) * p(l, i) * p(l, j) * p(l, k);
        const __int128 den = static_cast<__int128>(n) * p(0, k);
        if (sum % den != 0 || sum < 0) throw std::logic_error("eigenmatrix: non-integral intersection number");
        out[k][i][j] = static_cast<long long>(sum / den);
      }
  return out;
}

SchemeResult scheme_check(const Graph& g, Vertex v, GqOrder order) {
  auto params = check_srg(g);
  if (!params || !(*params == gq_params(order.s, order.t)))
    return {std::nullopt, "PRECONDITION FAIL: not SRG" + to_string(gq_params(order.s, order.t))};
  return scheme_check_unchecked(g, v, order);
}

SchemeResult scheme_check_unchecked(const Graph& g, Vertex v, GqOrder order) {
  const int s = order.s, t = order.t;
  if (v < 0 || v >= g.order()) throw std::out_of_range("scheme: vertex out of range");

  SchemePartition sp;
  sp.order = order;
  sp.base_vertex = v;
  for (Vertex x = 0; x < g.order(); ++x)
    if (x != v && !g.adjacent(v, x)) sp.vertices.push_back(x);
  sp.base = induced_subgraph(g, sp.vertices).graph;
  const int n = sp.size();
  const Graph& b = sp.base;

  // Fibres: identical neighbourhoods inside Γ1(v).
  std::map<std::vector<Word>, int> fibre_by_key;
  sp.fibre_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    auto rx = g.row(sp.vertices[x]);
    auto rv = g.row(v);
    std::vector<Word> key(rx.size());
    for (std::size_t i = 0; i < key.size(); ++i) key[i] = rx[i] & rv[i];
    auto [it, inserted] = fibre_by_key.try_emplace(std::move(key), static_cast<int>(sp.fibres.size()));
    if (inserted) sp.fibres.emplace_back();
    sp.fibres[it->second].push_back(x);
    sp.fibre_of[x] = it->second;
  }

  sp.relations.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      int rel;
      if (b.adjacent(x, y)) {
        rel = 1;
      } else if (sp.fibre_of[x] == sp.fibre_of[y]) {
        rel = 3;
      } else {
        const int cn = common_neighbor_count(b, x, y);
        if (cn == t) {
          rel = 2;
        } else if (cn == t + 1) {
          if (s == t) return {std::nullopt, "RELATION FAIL: relation 4 nonempty with s = t"};
          rel = 4;
        } else {
          return {std::nullopt, "RELATION FAIL: non-adjacent pair with " + std::to_string(cn) + " common neighbours"};
        }
      }
      sp.relations[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint8_t>(rel);
    }

  const int r = sp.class_count() + 1;
  const auto expected = scheme_intersection_numbers(s, t);
  // Relation rows as bitsets, rel_rows[i][x].
  std::vector<std::vector<Bitset>> rel_rows(r, std::vector<Bitset>(n, Bitset(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rel_rows[sp.relation(x, y)][x].set(y);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int k = sp.relation(x, y);
      for (int i = 0; i < r; ++i) {
        auto ri = rel_rows[i][x].words();
        for (int j = 0; j < r; ++j) {
          auto rj = rel_rows[j][y].words();
          long long cnt = 0;
          for (std::size_t w = 0; w < ri.size(); ++w) cnt += std::popcount(ri[w] & rj[w]);
          if (cnt != expected[k][i][j])
            return {std::nullopt, "P-MATRIX FAIL at p^" + std::to_string(k) + "_{" + std::to_string(i) +
                                      std::to_string(j) + "}"};
        }
      }
    }

  // Relation 3 is a disjoint union of t-cliques: every fibre has size t.
  for (const auto& f : sp.fibres)
    if (static_cast<int>(f.size()) != t) return {std::nullopt, "FIBRE FAIL: fibre of size " + std::to_string(f.size())};
  return {std::move(sp), {}};
}

std::optional<SchemePartition> scheme_on_second_subconstituent(const Graph& g, Vertex v, GqOrder order) {
  return scheme_check(g, v, order).scheme;
}

bool EquationReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

int EquationReport::failures() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; }));
}

std::string EquationReport::to_text() const {
  std::string out;
  for (const auto& r : results) out += r.name + (r.pass ? " PASS\n" : " FAIL\n");
  return out;
}

EquationReport verify_subconstituent_equations(const Graph& g, Vertex v, GqOrder order) {
  const long long s = order.s, t = order.t;
  std::vector<Vertex> cv, bv;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x == v) continue;
    (g.adjacent(v, x) ? cv : bv).push_back(x);
  }
  const int nc = static_cast<int>(cv.size()), nb = static_cast<int>(bv.size());
  const IntMatrix a = adjacency_matrix(g);
  IntMatrix c(nc, nc), n(nc, nb), b(nb, nb);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j) c(i, j) = a(cv[i], cv[j]);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nb; ++j) n(i, j) = a(cv[i], bv[j]);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) b(i, j) = a(bv[i], bv[j]);

  // Fibres from identical Γ1(v)-neighbourhoods, in order of first member.
  std::vector<int> fibre_of(nb, -1);
  std::vector<std::vector<int>> fibres;
  for (int x = 0; x < nb; ++x) {
    if (fibre_of[x] >= 0) continue;
    fibre_of[x] = static_cast<int>(fibres.size());
    fibres.push_back({x});
    for (int y = x + 1; y < nb; ++y)
      if (fibre_of[y] < 0 && n.col(x) == n.col(y)) {
        fibre_of[y] = fibre_of[x];
        fibres.back().push_back(y);
      }
  }
  const int nf = static_cast<int>(fibres.size());

  const IntMatrix ntn = n.transpose() * n;
  IntMatrix b2 = IntMatrix::Zero(nb, nb), b3 = IntMatrix::Zero(nb, nb), b4 = IntMatrix::Zero(nb, nb);
  for (int x = 0; x < nb; ++x)
    for (int y = 0; y < nb; ++y) {
      if (x == y || b(x, y)) continue;
      if (fibre_of[x] == fibre_of[y])
        b3(x, y) = 1;
      else if (ntn(x, y) > 0)
        b2(x, y) = 1;
      else
        b4(x, y) = 1;
    }

  IntMatrix m = IntMatrix::Zero(nc, nf), bhat = IntMatrix::Zero(nf, nf);
  for (int l = 0; l < nc; ++l)
    for (int f = 0; f < nf; ++f) {
      bool all = true;
      for (int x : fibres[f]) all = all && n(l, x) == 1;
      m(l, f) = all ? 1 : 0;
    }
  for (int x = 0; x < nb; ++x)
    for (int y = 0; y < nb; ++y)
      if (b(x, y) && fibre_of[x] != fibre_of[y]) bhat(fibre_of[x], fibre_of[y]) = 1;

  auto I = [](int k) { return IntMatrix::Identity(k, k); };
  auto J = [](int r, int cc) { return IntMatrix::Constant(r, cc, 1); };

  const IntMatrix b_sq = b * b;
  const IntMatrix c_sq = c * c;
  const IntMatrix nnt = n * n.transpose();

  EquationReport rep;
  auto add = [&](const char* name, const IntMatrix& lhs, const IntMatrix& rhs) {
    bool ok = lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols() && lhs == rhs;
    rep.results.push_back({name, ok});
  };
  add("EQ2", b_sq, (s - 1) * (t + 1) * I(nb) + (s - 2) * b + t * b2 + (t + 1) * b4);
  add("EQ5", c_sq + nnt, (s - t - 2) * c + (t + 1) * (s - 1) * I(nc) + t * J(nc, nc));
  add("EQ6", c * n + n * b, (s - t - 2) * n + (t + 1) * J(nc, nb));
  add("EQ7", b_sq + ntn, (s - t - 2) * b + (t + 1) * (s - 1) * I(nb) + (t + 1) * J(nb, nb));
  add("EQ8", c_sq, (s - 1) * I(nc) + (s - 2) * c);
  add("EQ9", nnt, t * s * I(nc) + t * (J(nc, nc) - I(nc) - c));
  add("EQ10", ntn, (t + 1) * (b3 + I(nb)) + b + b2);
  add("EQ11", m * m.transpose(), s * I(nc) + (J(nc, nc) - I(nc) - c));
  add("EQ12", m.transpose() * m, (t + 1) * I(nf) + bhat);
  return rep;
}

std::string IntersectionArray::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ';';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << '}';
  return os.str();
}

std::optional<IntersectionArray> intersection_array(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  std::optional<IntersectionArray> arr;
  for (Vertex x = 0; x < n; ++x) {
    auto dist = distances_from(g, x);
    int d = 0;
    for (int dv : dist) {
      if (dv < 0) return std::nullopt;
      d = std::max(d, dv);
    }
    IntersectionArray local{std::vector<int>(d, -1), std::vector<int>(d, -1)};
    for (Vertex y = 0; y < n; ++y) {
      const int i = dist[y];
      int bi = 0, ci = 0;
      for_each_bit(g.row(y), [&](int z) {
        if (dist[z] == i + 1) ++bi;
        if (dist[z] == i - 1) ++ci;
      });
      if (i < d) {
        if (local.b[i] < 0) local.b[i] = bi;
        if (local.b[i] != bi) return std::nullopt;
      }
      if (i > 0) {
        if (local.c[i - 1] < 0) local.c[i - 1] = ci;
        if (local.c[i - 1] != ci) return std::nullopt;
      }
    }
    if (!arr)
      arr = local;
    else if (!(*arr == local))
      return std::nullopt;
  }
  return arr;
}

std::vector<std::vector<Vertex>> antipodal_classes(const Graph& g) {
  const int n = g.order();
  std::vector<int> class_of(n, -1);
  std::vector<std::vector<Vertex>> classes;
  for (Vertex x = 0; x < n; ++x) {
    auto dist = distances_from(g, x);
    std::vector<Vertex> cls;
    for (Vertex y = 0; y < n; ++y)
      if (y == x || dist[y] == 3) cls.push_back(y);
    if (class_of[x] < 0) {
      for (Vertex y : cls) {
        if (class_of[y] >= 0) return {};
        class_of[y] = static_cast<int>(classes.size());
      }
      classes.push_back(cls);
    } else if (classes[class_of[x]] != cls) {
      return {};
    }
  }
  return classes;
}

bool check_antipodal_cover(const Graph& g, int q) {
  auto arr = intersection_array(g);
  const IntersectionArray want{{q * q - 1, q * q - q, 1}, {1, q, q * q - 1}};
  if (!arr || !(*arr == want)) return false;
  auto classes = antipodal_classes(g);
  if (classes.empty()) return false;
  return std::all_of(classes.begin(), classes.end(), [q](const auto& c) { return static_cast<int>(c.size()) == q; });
}

bool check_spectrum_by_annihilation(const IntMatrix& a, const std::vector<Eigenvalue>& spectrum) {
  const long long n = a.rows();
  if (a.cols() != n) return false;
  long long total = 0;
  for (const auto& e : spectrum) {
    if (e.multiplicity < 0) return false;
    total += e.multiplicity;
  }
  if (total != n) return false;

  // Entry bound for the running product; keep well inside int64.
  long double bound = 1;
  long long max_entry = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) max_entry = std::max(max_entry, std::llabs(a.data()[i]));
  IntMatrix prod = IntMatrix::Identity(n, n);
  for (const auto& e : spectrum) {
    const long double factor_max = static_cast<long double>(max_entry + std::llabs(e.value));
    bound *= static_cast<long double>(n) * factor_max;
    if (bound > 4e18L) throw std::overflow_error("annihilation check: int64 bound exceeded");
    prod = prod * (a - e.value * IntMatrix::Identity(n, n));
  }
  if (!prod.isZero()) return false;

  IntMatrix power = IntMatrix::Identity(n, n);
  for (int j = 0; j <= 3; ++j) {
    __int128 expect = 0;
    for (const auto& e : spectrum) {
      __int128 th = 1;
      for (int i = 0; i < j; ++i) th *= e.value;
      expect += th * e.multiplicity;
    }
    if (static_cast<__int128>(power.trace()) != expect) return false;
    power = power * a;
  }
  return true;
}

bool check_spectrum_by_annihilation(const Graph& g, const std::vector<Eigenvalue>& spectrum) {
  return check_spectrum_by_annihilation(adjacency_matrix(g), spectrum);
}

}  // namespace srg
