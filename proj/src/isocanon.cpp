#include "srgkit/isocanon.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace srg {
namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 31);
}

// Ordered partition: lab lists the vertices cell by cell; a cell is the
// position range [start, end[start]).
struct Partition {
  std::vector<int> lab, pos, cell, end;
  int cells = 0;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Per vertex: hash of the multiset over other vertices y of
// (adjacent?, number of edges inside N(x) ∩ N(y)).
std::vector<std::uint64_t> pair_invariant(const Graph& g) {
  const int n = g.order(), w = g.words_per_row();
  std::vector<std::vector<std::uint32_t>> vals(n);
  std::vector<Word> common(w);
  for (Vertex x = 0; x < n; ++x) {
    auto rx = g.row(x);
    for (Vertex y = x + 1; y < n; ++y) {
      auto ry = g.row(y);
      for (int i = 0; i < w; ++i) common[i] = rx[i] & ry[i];
      std::uint32_t edges = 0;
      for_each_bit(common, [&](int z) {
        auto rz = g.row(z);
        for (int i = 0; i < w; ++i) edges += std::popcount(rz[i] & common[i]);
      });
      const std::uint32_t v = (g.adjacent(x, y) ? 1u << 30 : 0u) | edges;
      vals[x].push_back(v);
      vals[y].push_back(v);
    }
  }
  std::vector<std::uint64_t> out(n);
  for (Vertex x = 0; x < n; ++x) {
    std::sort(vals[x].begin(), vals[x].end());
    std::uint64_t h = 0x51ed27;
    for (auto v : vals[x]) h = mix(h, v);
    out[x] = h;
  }
  return out;
}

class Search {
 public:
  Search(const Graph& g, std::span<const int> colours) : g_(g), n_(g.order()) {
    if (!colours.empty() && static_cast<int>(colours.size()) != n_)
      throw std::invalid_argument("canonical_labeling: colour vector size mismatch");
    colours_.assign(colours.begin(), colours.end());
    cnt_.assign(n_, 0);
    ntouched_.assign(n_, 0);
    ctouched_.assign(n_, 0);
    inq_.assign(n_, 0);
  }

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ == 0) {
      out.form = graph6_encode(g_);
      return out;
    }
    Partition root = initial_partition();
    descend(root, 0, true, 0);
    out.labeling.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.labeling[best_lab_[i]] = i;
    out.form = graph6_encode(g_.permuted(out.labeling));
    out.generators = std::move(gens_);
    out.leaves = leaves_;
    out.nodes = nodes_;
    return out;
  }

 private:
  Partition initial_partition() {
    std::vector<std::uint64_t> inv = pair_invariant(g_);
    std::vector<std::pair<std::pair<long long, std::uint64_t>, int>> keyed(n_);
    for (int v = 0; v < n_; ++v) keyed[v] = {{colours_.empty() ? 0 : colours_[v], inv[v]}, v};
    std::sort(keyed.begin(), keyed.end());
    Partition p;
    p.lab.resize(n_);
    p.pos.resize(n_);
    p.cell.resize(n_);
    p.end.assign(n_, 0);
    std::vector<int> starts;
    int start = 0;
    for (int i = 0; i < n_; ++i) {
      p.lab[i] = keyed[i].second;
      p.pos[keyed[i].second] = i;
      if (i + 1 == n_ || keyed[i + 1].first != keyed[i].first) {
        p.end[start] = i + 1;
        for (int j = start; j <= i; ++j) p.cell[p.lab[j]] = start;
        starts.push_back(start);
        ++p.cells;
        start = i + 1;
      }
    }
    refine(p, starts);
    return p;
  }

  std::uint64_t refine(Partition& p, const std::vector<int>& splitters) {
    std::uint64_t h = 0x2545f491;
    queue_.clear();
    std::size_t head = 0;
    for (int s : splitters) {
      queue_.push_back(s);
      inq_[s] = 1;
    }
    while (head < queue_.size()) {
      const int w = queue_[head++];
      inq_[w] = 0;
      if (p.cells == n_) continue;
      const int wend = p.end[w];
      h = mix(h, static_cast<std::uint64_t>(w) << 32 | static_cast<std::uint32_t>(wend - w));

      touched_.clear();
      for (int i = w; i < wend; ++i) {
        for_each_bit(g_.row(p.lab[i]), [&](int y) {
          const int c = p.cell[y];
          if (p.end[c] - c == 1) return;
          if (cnt_[y]++ == 0) {
            if (!ctouched_[c]) {
              ctouched_[c] = 1;
              ntouched_[c] = 0;
              touched_.push_back(c);
            }
            ++ntouched_[c];
          }
        });
      }
      std::sort(touched_.begin(), touched_.end());

      for (int c : touched_) {
        ctouched_[c] = 0;
        const int cend = p.end[c];
        const int first = cnt_[p.lab[c]];
        bool uniform = ntouched_[c] == cend - c;
        for (int i = c; uniform && i < cend; ++i) uniform = cnt_[p.lab[i]] == first;
        if (uniform) {
          h = mix(h, static_cast<std::uint64_t>(c) << 32 | static_cast<std::uint32_t>(first));
          for (int i = c; i < cend; ++i) cnt_[p.lab[i]] = 0;
          continue;
        }
        std::sort(p.lab.begin() + c, p.lab.begin() + cend, [&](int a, int b) { return cnt_[a] < cnt_[b]; });
        const bool was_queued = inq_[c];
        int largest = c, largest_size = 0;
        frag_.clear();
        int fs = c;
        for (int i = c; i < cend; ++i) {
          p.pos[p.lab[i]] = i;
          if (i + 1 == cend || cnt_[p.lab[i + 1]] != cnt_[p.lab[i]]) {
            p.end[fs] = i + 1;
            for (int j = fs; j <= i; ++j) p.cell[p.lab[j]] = fs;
            h = mix(h, static_cast<std::uint64_t>(fs) << 32 | static_cast<std::uint32_t>(cnt_[p.lab[i]]));
            if (fs != c) ++p.cells;
            if (i + 1 - fs > largest_size) {
              largest_size = i + 1 - fs;
              largest = fs;
            }
            frag_.push_back(fs);
            fs = i + 1;
          }
        }
        for (int f : frag_) {
          if (was_queued ? f == c : f == largest) continue;
          queue_.push_back(f);
          inq_[f] = 1;
        }
        for (int i = c; i < cend; ++i) cnt_[p.lab[i]] = 0;
      }
    }
    for (std::size_t i = head; i < queue_.size(); ++i) inq_[queue_[i]] = 0;
    return mix(h, static_cast<std::uint64_t>(p.cells));
  }

  void individualize(Partition& p, int v, int target) {
    const int at = p.pos[v];
    const int u = p.lab[target];
    std::swap(p.lab[target], p.lab[at]);
    p.pos[v] = target;
    p.pos[u] = at;
    const int cend = p.end[target];
    p.end[target] = target + 1;
    p.end[target + 1] = cend;
    for (int i = target + 1; i < cend; ++i) p.cell[p.lab[i]] = target + 1;
    ++p.cells;
  }

  void certificate(const Partition& p, std::vector<Word>& out) const {
    const int w = words_for(n_);
    out.assign(static_cast<std::size_t>(n_) * w, 0);
    for (int i = 0; i < n_; ++i) {
      Word* row = out.data() + static_cast<std::size_t>(i) * w;
      for_each_bit(g_.row(p.lab[i]), [&](int y) {
        const int j = p.pos[y];
        row[j >> 6] |= Word{1} << (j & 63);
      });
    }
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
  }

  void record_automorphism(const Partition& p, const std::vector<int>& other_lab) {
    Permutation gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[p.lab[i]] = other_lab[i];
    bool trivial = true;
    for (int i = 0; i < n_ && trivial; ++i) trivial = gamma[i] == i;
    if (!trivial) gens_.push_back(std::move(gamma));
  }

  void leaf(const Partition& p, bool eq_first, int cmp_best) {
    ++leaves_;
    certificate(p, cert_);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_seq_ = best_seq_ = seq_;
      first_prefix_ = best_prefix_ = prefix_;
      first_cert_ = best_cert_ = cert_;
      return;
    }
    if (eq_first && seq_.size() == first_seq_.size() && cert_ == first_cert_) {
      record_automorphism(p, first_lab_);
      jump_ = common_prefix(prefix_, first_prefix_);
      return;
    }
    int c = cmp_best;
    if (c == 0 && seq_.size() != best_seq_.size()) c = seq_.size() > best_seq_.size() ? 1 : -1;
    if (c == 0) c = cert_ < best_cert_ ? -1 : (cert_ == best_cert_ ? 0 : 1);
    if (c == 0) {
      record_automorphism(p, best_lab_);
      jump_ = common_prefix(prefix_, best_prefix_);
    } else if (c > 0) {
      best_lab_ = p.lab;
      best_seq_ = seq_;
      best_prefix_ = prefix_;
      best_cert_ = cert_;
    }
  }

  // Orbit representatives of the stored automorphisms fixing the current prefix.
  std::vector<int> prefix_orbits() const {
    UnionFind uf(n_);
    for (const auto& gamma : gens_) {
      bool fixes = true;
      for (int v : prefix_) fixes = fixes && gamma[v] == v;
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) uf.unite(x, gamma[x]);
    }
    std::vector<int> rep(n_);
    for (int x = 0; x < n_; ++x) rep[x] = uf.find(x);
    return rep;
  }

  void descend(const Partition& p, int level, bool eq_first, int cmp_best) {
    ++nodes_;
    if (p.cells == n_) {
      leaf(p, eq_first, cmp_best);
      return;
    }
    int target = -1, tsize = INT_MAX;
    for (int c = 0; c < n_; c = p.end[c]) {
      const int sz = p.end[c] - c;
      if (sz > 1 && sz < tsize) {
        tsize = sz;
        target = c;
      }
    }
    std::vector<int> cand(p.lab.begin() + target, p.lab.begin() + p.end[target]);
    std::sort(cand.begin(), cand.end());

    std::vector<int> explored_reps;
    std::vector<int> explored;
    std::size_t gens_seen = 0;
    std::vector<int> rep;
    for (int v : cand) {
      if (!explored.empty() && !gens_.empty()) {
        if (gens_seen != gens_.size()) {
          rep = prefix_orbits();
          gens_seen = gens_.size();
        }
        bool same = false;
        for (int e : explored) same = same || rep[e] == rep[v];
        if (same) continue;
      }
      explored.push_back(v);

      Partition child = p;
      individualize(child, v, target);
      std::uint64_t h = mix(refine(child, {target}), static_cast<std::uint64_t>(target));

      bool ef = eq_first;
      int cb = cmp_best;
      if (have_first_) {
        ef = ef && static_cast<std::size_t>(level) < first_seq_.size() && first_seq_[level] == h;
        if (cb == 0) {
          if (static_cast<std::size_t>(level) >= best_seq_.size())
            cb = 1;
          else
            cb = h < best_seq_[level] ? -1 : (h > best_seq_[level] ? 1 : 0);
        }
        if (!ef && cb < 0) continue;
      }
      seq_.push_back(h);
      prefix_.push_back(v);
      descend(child, level + 1, ef, cb);
      seq_.pop_back();
      prefix_.pop_back();
      if (jump_ >= 0) {
        if (jump_ < level) return;
        jump_ = -1;
      }
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colours_;
  std::vector<int> cnt_, ntouched_, touched_, queue_, frag_;
  std::vector<char> ctouched_, inq_;

  bool have_first_ = false;
  std::vector<int> first_lab_, best_lab_, first_prefix_, best_prefix_, prefix_;
  std::vector<std::uint64_t> first_seq_, best_seq_, seq_;
  std::vector<Word> first_cert_, best_cert_, cert_;
  std::vector<Permutation> gens_;
  int jump_ = -1;
  long long leaves_ = 0, nodes_ = 0;
};

// Stabilizer chain with transversals stored as full permutations.
class SchreierSims {
 public:
  explicit SchreierSims(int n) : n_(n) {}

  void add_generator(const Permutation& g) {
    if (is_identity(g)) return;
    int stop;
    Permutation r = sift(g, 0, stop);
    if (is_identity(r)) return;
    extend(r, 0, stop);
    close_from(0);
  }

  std::uint64_t order() const {
    unsigned __int128 o = 1;
    for (const auto& l : levels_) {
      o *= l.orbit.size();
      if (o > UINT64_MAX) throw std::overflow_error("group_order: exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(o);
  }

 private:
  struct Level {
    int base;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<Permutation> trans;  // trans[x] maps base to x (empty if x not in orbit)
    std::vector<std::vector<char>> checked;  // [gen][orbit position]
  };

  bool is_identity(const Permutation& g) const {
    for (int i = 0; i < n_; ++i)
      if (g[i] != i) return false;
    return true;
  }

  Permutation sift(Permutation g, int from, int& stop) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const auto& l = levels_[i];
      const int x = g[l.base];
      if (l.trans[x].empty()) {
        stop = static_cast<int>(i);
        return g;
      }
      g = compose(inverse(l.trans[x]), g);
    }
    stop = static_cast<int>(levels_.size());
    return g;
  }

  void grow_orbit(Level& l) {
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      const int y = l.orbit[k];
      for (const auto& s : l.gens) {
        const int z = s[y];
        if (l.trans[z].empty()) {
          l.trans[z] = compose(s, l.trans[y]);
          l.orbit.push_back(z);
        }
      }
    }
  }

  // r fixes the bases of levels [0, stop); it joins the generators of
  // levels from..stop.
  void extend(const Permutation& r, int from, int stop) {
    if (stop == static_cast<int>(levels_.size())) {
      Level l;
      l.base = 0;
      while (r[l.base] == l.base) ++l.base;
      l.trans.assign(n_, {});
      l.trans[l.base] = identity_permutation(n_);
      l.orbit.push_back(l.base);
      levels_.push_back(std::move(l));
    }
    for (int i = from; i <= stop; ++i) {
      Level& l = levels_[i];
      l.gens.push_back(r);
      l.checked.emplace_back();
      grow_orbit(l);
    }
  }

  // Ensure every Schreier generator at levels >= lo sifts to the identity.
  void close_from(int lo) {
    int i = static_cast<int>(levels_.size()) - 1;
    while (i >= lo) {
      bool added = false;
      Level& l = levels_[i];
      for (std::size_t s = 0; s < l.gens.size() && !added; ++s) {
        l.checked[s].resize(l.orbit.size(), 0);
        for (std::size_t k = 0; k < l.orbit.size() && !added; ++k) {
          if (l.checked[s][k]) continue;
          l.checked[s][k] = 1;
          const int x = l.orbit[k];
          const Permutation& gen = l.gens[s];
          Permutation h = compose(inverse(l.trans[gen[x]]), compose(gen, l.trans[x]));
          int stop;
          Permutation r = sift(std::move(h), i + 1, stop);
          if (!is_identity(r)) {
            extend(r, i + 1, stop);
            i = stop;
            added = true;
          }
        }
      }
      if (!added) --i;
    }
  }

  int n_;
  std::vector<Level> levels_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colours) {
  return Search(g, colours).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg(g.order()), dh(h.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

std::vector<Permutation> automorphism_generators(const Graph& g, std::span<const int> colours) {
  return canonical_labeling(g, colours).generators;
}

std::uint64_t group_order(std::span<const Permutation> gens, int n) {
  SchreierSims ss(n);
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != n || !is_permutation(g))
      throw std::invalid_argument("group_order: generator is not a permutation of the given degree");
    ss.add_generator(g);
  }
  return ss.order();
}

std::vector<std::vector<Vertex>> orbits(std::span<const Permutation> gens, int n) {
  UnionFind uf(n);
  for (const auto& g : gens)
    for (int x = 0; x < n; ++x) uf.unite(x, g[x]);
  std::map<int, std::vector<Vertex>> by_root;
  for (int x = 0; x < n; ++x) by_root[uf.find(x)].push_back(x);
  std::vector<std::vector<Vertex>> out;
  for (auto& [_, o] : by_root) out.push_back(std::move(o));
  return out;
}

bool is_automorphism(const Graph& g, std::span<const Vertex> p) {
  if (static_cast<int>(p.size()) != g.order() || !is_permutation(p)) return false;
  return g.permuted(p) == g;
}

bool is_collineation(std::span<const Vertex> sigma, const Net& net) {
  if (static_cast<int>(sigma.size()) != net.point_count)
    throw std::invalid_argument("is_collineation: permutation size does not match the net");
  if (!is_permutation(sigma)) throw std::invalid_argument("is_collineation: not a permutation");
  std::vector<std::vector<int>> blocks = net.blocks;
  std::sort(blocks.begin(), blocks.end());
  std::vector<int> image;
  for (const auto& b : net.blocks) {
    image.clear();
    for (int x : b) image.push_back(sigma[x]);
    std::sort(image.begin(), image.end());
    if (!std::binary_search(blocks.begin(), blocks.end(), image)) return false;
  }
  return true;
}

std::vector<Permutation> collineation_generators(const Net& net) {
  Graph inc = net_incidence_graph(net);
  std::vector<int> colours(inc.order(), 1);
  std::fill(colours.begin(), colours.begin() + net.point_count, 0);
  std::vector<Permutation> out;
  for (const auto& g : automorphism_generators(inc, colours)) {
    Permutation r(g.begin(), g.begin() + net.point_count);
    if (!std::equal(r.begin(), r.end(), identity_permutation(net.point_count).begin())) out.push_back(std::move(r));
  }
  return out;
}

std::optional<Permutation> non_collineation_automorphism(const Net& net) {
  for (const auto& g : automorphism_generators(net_collinearity_graph(net)))
    if (!is_collineation(g, net)) return g;
  return std::nullopt;
}

std::optional<Permutation> type_swapping_automorphism(int q) {
  Graph g = bilinear_forms_graph(q);
  Permutation tr = bilinear_transpose(q);
  if (!is_automorphism(g, tr)) return std::nullopt;
  auto cliques = maximal_cliques_of_size(g, q * q);
  for (const auto& c : cliques) {
    std::vector<Vertex> image;
    for (Vertex x : c) image.push_back(tr[x]);
    std::sort(image.begin(), image.end());
    auto a = bilinear_clique_type(q, c), b = bilinear_clique_type(q, image);
    if (a == BilinearCliqueType::kNeither || b == BilinearCliqueType::kNeither || a == b) return std::nullopt;
  }
  return tr;
}

std::optional<Permutation> type_swapping_automorphism(const Graph& bform) {
  const int n = bform.order();
  int m = 1;
  while ((m + 1) * (m + 1) <= n) ++m;
  if (m * m != n) return std::nullopt;
  auto cliques = maximal_cliques_of_size(bform, m);
  const int k = static_cast<int>(cliques.size());
  if (k == 0) return std::nullopt;
  // Cliques of different families meet in 0 or several vertices, within a
  // family in at most one; 2-colour the "meet in >= 2" graph.
  std::vector<Bitset> sets;
  for (const auto& c : cliques) sets.emplace_back(n, c);
  std::vector<int> family(k, -1);
  family[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int a = queue[h];
    for (int b = 0; b < k; ++b) {
      if (b == a) continue;
      Bitset meet = sets[a];
      meet &= sets[b].words();
      if (meet.count() < 2) continue;
      if (family[b] < 0) {
        family[b] = 1 - family[a];
        queue.push_back(b);
      } else if (family[b] == family[a]) {
        return std::nullopt;
      }
    }
  }
  if (std::count(family.begin(), family.end(), -1) > 0) return std::nullopt;
  std::map<std::vector<Vertex>, int> index;
  for (int i = 0; i < k; ++i) index[cliques[i]] = i;
  for (const auto& g : automorphism_generators(bform)) {
    std::vector<Vertex> image;
    for (Vertex x : cliques[0]) image.push_back(g[x]);
    std::sort(image.begin(), image.end());
    auto it = index.find(image);
    if (it != index.end() && family[it->second] != family[0]) return g;
  }
  return std::nullopt;
}

}  // namespace srg
