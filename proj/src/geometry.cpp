#include "srgkit/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace srg {

GqOrder GqOrder::make(int s, int t) {
  if (t < 2 || s < t)
    throw std::invalid_argument("GqOrder: need s >= t >= 2, got (" + std::to_string(s) + "," + std::to_string(t) + ")");
  return {s, t};
}

void require_supported_q(int q) {
  auto [p, k] = prime_power(q);
  if (p == 0 || q > 25) throw std::invalid_argument("unsupported q = " + std::to_string(q));
}

namespace {

int encode4(int q, const std::array<Field::Index, 4>& v) {
  return ((v[0] * q + v[1]) * q + v[2]) * q + v[3];
}

}  // namespace

ProjectiveSpace3::ProjectiveSpace3(Field f) : f_(std::move(f)) {
  const int q = f_.order();
  index_of_code_.assign(q * q * q * q, -1);
  // Lexicographic order of canonical representatives: leading 1 at the
  // first nonzero coordinate, enumerated by code.
  for (int code = 1; code < q * q * q * q; ++code) {
    std::array<Field::Index, 4> v{};
    int c = code;
    for (int i = 3; i >= 0; --i) {
      v[i] = static_cast<Field::Index>(c % q);
      c /= q;
    }
    int lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    index_of_code_[code] = static_cast<int>(points_.size());
    points_.push_back({v});
  }
}

int ProjectiveSpace3::index_of(std::array<Field::Index, 4> v) const {
  int lead = 0;
  while (lead < 4 && v[lead] == 0) ++lead;
  if (lead == 4) throw std::invalid_argument("projective point: zero vector");
  Field::Index s = f_.inv(v[lead]);
  for (auto& x : v) x = f_.mul(x, s);
  return index_of_code_[encode4(f_.order(), v)];
}

ProjLine ProjectiveSpace3::line(int i, int j) const {
  if (i == j) throw std::invalid_argument("line: points must be distinct");
  const auto& x = points_.at(i).coords;
  const auto& y = points_.at(j).coords;
  ProjLine l{{i, j}, {i}};
  // Points y + a x for all a, plus x itself.
  for (int a = 0; a < f_.order(); ++a) {
    std::array<Field::Index, 4> v{};
    for (int c = 0; c < 4; ++c) v[c] = f_.add(y[c], f_.mul(static_cast<Field::Index>(a), x[c]));
    l.points.push_back(index_of(v));
  }
  std::sort(l.points.begin(), l.points.end());
  return l;
}

std::vector<ProjPoint> pg3_points(int q) {
  require_supported_q(q);
  return ProjectiveSpace3(Field::of_order(q)).points();
}

Graph wq_graph(int q) {
  require_supported_q(q);
  ProjectiveSpace3 pg(Field::of_order(q));
  const Field& f = pg.field();
  const auto& pts = pg.points();
  auto form = [&](const ProjPoint& a, const ProjPoint& b) {
    const auto& x = a.coords;
    const auto& y = b.coords;
    Field::Index r = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
    return f.add(r, f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2])));
  };
  return Graph::from_predicate(pg.point_count(), [&](Vertex u, Vertex v) { return form(pts[u], pts[v]) == 0; });
}

namespace {

Field::Index hermitian_form(const Field& f, int q, const ProjPoint& a, const ProjPoint& b) {
  Field::Index r = 0;
  for (int i = 0; i < 4; ++i) r = f.add(r, f.mul(a.coords[i], f.pow(b.coords[i], q)));
  return r;
}

}  // namespace

std::vector<int> hermitian_points(int q) {
  require_supported_q(q);
  ProjectiveSpace3 pg(Field::of_order(q * q));
  std::vector<int> out;
  for (int i = 0; i < pg.point_count(); ++i)
    if (hermitian_form(pg.field(), q, pg.points()[i], pg.points()[i]) == 0) out.push_back(i);
  return out;
}

Graph hermitian_gq_graph(int q) {
  require_supported_q(q);
  if (q > 4) throw std::invalid_argument("hermitian_gq_graph: q = " + std::to_string(q) + " too large");
  ProjectiveSpace3 pg(Field::of_order(q * q));
  const Field& f = pg.field();
  std::vector<ProjPoint> pts;
  for (const auto& p : pg.points())
    if (hermitian_form(f, q, p, p) == 0) pts.push_back(p);
  return Graph::from_predicate(static_cast<int>(pts.size()),
                               [&](Vertex u, Vertex v) { return hermitian_form(f, q, pts[u], pts[v]) == 0; });
}

Net affine_plane(int q) {
  require_supported_q(q);
  Field f = Field::of_order(q);
  Net net;
  net.point_count = q * q;
  for (int m = 0; m < q; ++m) {
    std::vector<int> cls;
    for (int b = 0; b < q; ++b) {
      std::vector<int> block;
      for (int x = 0; x < q; ++x) {
        int y = f.add(f.mul(static_cast<Field::Index>(m), static_cast<Field::Index>(x)), static_cast<Field::Index>(b));
        block.push_back(x * q + y);
      }
      std::sort(block.begin(), block.end());
      cls.push_back(static_cast<int>(net.blocks.size()));
      net.blocks.push_back(std::move(block));
    }
    net.parallel_classes.push_back(std::move(cls));
  }
  std::vector<int> verticals;
  for (int c = 0; c < q; ++c) {
    std::vector<int> block;
    for (int y = 0; y < q; ++y) block.push_back(c * q + y);
    verticals.push_back(static_cast<int>(net.blocks.size()));
    net.blocks.push_back(std::move(block));
  }
  net.parallel_classes.push_back(std::move(verticals));
  return net;
}

std::vector<std::vector<int>> Net::blocks_on_points() const {
  std::vector<std::vector<int>> on(point_count);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (int p : blocks[b]) on.at(p).push_back(b);
  return on;
}

void Net::validate() const {
  const int s = order();
  if (s < 1 || point_count != s * s) throw std::invalid_argument("net: point count is not the square of the block size");
  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) != s) throw std::invalid_argument("net: blocks of unequal size");
    for (int p : b)
      if (p < 0 || p >= point_count) throw std::invalid_argument("net: point out of range");
  }
  std::vector<int> class_of(blocks.size(), -1);
  for (int c = 0; c < classes(); ++c) {
    if (static_cast<int>(parallel_classes[c].size()) != s) throw std::invalid_argument("net: parallel class size");
    for (int b : parallel_classes[c]) {
      if (class_of.at(b) >= 0) throw std::invalid_argument("net: block in two parallel classes");
      class_of[b] = c;
    }
  }
  for (int c : class_of)
    if (c < 0) throw std::invalid_argument("net: block outside every parallel class");
  auto on = blocks_on_points();
  for (int p = 0; p < point_count; ++p) {
    if (static_cast<int>(on[p].size()) != classes())
      throw std::invalid_argument("net: point " + std::to_string(p) + " not on one block per class");
    std::vector<char> hit(classes(), 0);
    for (int b : on[p]) {
      if (hit[class_of[b]]) throw std::invalid_argument("net: point on two parallel blocks");
      hit[class_of[b]] = 1;
    }
  }
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      std::vector<int> meet;
      std::set_intersection(blocks[a].begin(), blocks[a].end(), blocks[b].begin(), blocks[b].end(),
                            std::back_inserter(meet));
      const std::size_t want = class_of[a] == class_of[b] ? 0 : 1;
      if (meet.size() != want)
        throw std::invalid_argument("net: blocks " + std::to_string(a) + " and " + std::to_string(b) + " meet in " +
                                    std::to_string(meet.size()) + " points");
    }
}

Graph net_collinearity_graph(const Net& net) {
  GraphBuilder b(net.point_count);
  for (const auto& block : net.blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (!b.adjacent(block[i], block[j])) b.add_edge(block[i], block[j]);
  return std::move(b).build();
}

Graph net_incidence_graph(const Net& net) {
  GraphBuilder b(net.point_count + static_cast<int>(net.blocks.size()));
  for (int i = 0; i < static_cast<int>(net.blocks.size()); ++i)
    for (int p : net.blocks[i]) b.add_edge(p, net.point_count + i);
  return std::move(b).build();
}

std::array<Field::Index, 4> bilinear_matrix(int q, int vertex) {
  std::array<Field::Index, 4> m{};
  for (int i = 3; i >= 0; --i) {
    m[i] = static_cast<Field::Index>(vertex % q);
    vertex /= q;
  }
  return m;
}

int bilinear_vertex(int q, std::array<Field::Index, 4> m) { return encode4(q, m); }

Graph bilinear_forms_graph(int q) {
  require_supported_q(q);
  Field f = Field::of_order(q);
  const int n = q * q * q * q;
  return Graph::from_predicate(n, [&](Vertex u, Vertex v) {
    auto x = bilinear_matrix(q, u), y = bilinear_matrix(q, v);
    std::array<Field::Index, 4> d{};
    for (int i = 0; i < 4; ++i) d[i] = f.sub(x[i], y[i]);
    // u != v so the difference is nonzero; rank 1 iff the determinant vanishes.
    return f.sub(f.mul(d[0], d[3]), f.mul(d[1], d[2])) == 0;
  });
}

std::vector<Vertex> bilinear_transpose(int q) {
  const int n = q * q * q * q;
  std::vector<Vertex> perm(n);
  for (int v = 0; v < n; ++v) {
    auto m = bilinear_matrix(q, v);
    std::swap(m[1], m[2]);
    perm[v] = bilinear_vertex(q, m);
  }
  return perm;
}

BilinearCliqueType bilinear_clique_type(int q, const std::vector<Vertex>& clique) {
  if (clique.size() < 2) return BilinearCliqueType::kNeither;
  Field f = Field::of_order(q);
  auto base = bilinear_matrix(q, clique[0]);
  bool same_cols = true, same_rows = true;
  std::array<Field::Index, 4> ref{};
  bool have_ref = false;
  for (std::size_t i = 1; i < clique.size(); ++i) {
    auto m = bilinear_matrix(q, clique[i]);
    std::array<Field::Index, 4> d{};
    for (int j = 0; j < 4; ++j) d[j] = f.sub(m[j], base[j]);
    if (!have_ref) {
      ref = d;
      have_ref = true;
      continue;
    }
    // Rank-1 matrices [[a,b],[c,d]] share a column space iff their columns are
    // parallel: (a,c) and (a',c') dependent etc. Check via 2x2 minors.
    auto col_dep = [&](int r0, int r1) {
      // columns of d and ref stacked: any column of d vs any column of ref.
      for (int cd = 0; cd < 2; ++cd)
        for (int cr = 0; cr < 2; ++cr) {
          Field::Index det = f.sub(f.mul(d[r0 * 2 + cd], ref[r1 * 2 + cr]), f.mul(d[r1 * 2 + cd], ref[r0 * 2 + cr]));
          if (det != 0) return false;
        }
      return true;
    };
    auto row_dep = [&]() {
      for (int rd = 0; rd < 2; ++rd)
        for (int rr = 0; rr < 2; ++rr) {
          Field::Index det = f.sub(f.mul(d[rd * 2], ref[rr * 2 + 1]), f.mul(d[rd * 2 + 1], ref[rr * 2]));
          if (det != 0) return false;
        }
      return true;
    };
    if (!col_dep(0, 1)) same_cols = false;
    if (!row_dep()) same_rows = false;
  }
  if (same_cols && !same_rows) return BilinearCliqueType::kFixedColumnSpace;
  if (same_rows && !same_cols) return BilinearCliqueType::kFixedRowSpace;
  return BilinearCliqueType::kNeither;
}

Graph lattice_graph(int m) {
  return Graph::from_predicate(m * m, [m](Vertex u, Vertex v) { return u / m == v / m || u % m == v % m; });
}

}  // namespace srg
