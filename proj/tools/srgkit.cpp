// srgkit command-line tool. Exit codes: 0 ok, 1 verification failure, 2 bad input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "srgkit/geometry.hpp"
#include "srgkit/isocanon.hpp"
#include "srgkit/regpoint.hpp"
#include "srgkit/specalg.hpp"
#include "srgkit/store.hpp"
#include "srgkit/switchkit.hpp"

using namespace srg;

namespace {

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Graph> read_graphs(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open " + path);
    in = &file;
  }
  std::vector<Graph> out;
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  if (out.empty()) throw std::invalid_argument("no graph6 input");
  return out;
}

std::optional<GqOrder> pseudo_gq_order(const Graph& g) {
  auto p = check_srg(g);
  if (!p) return std::nullopt;
  auto shape = gq_shape(*p);
  if (!shape || shape->first < shape->second || shape->second < 2) return std::nullopt;
  return GqOrder::make(shape->first, shape->second);
}

// "count^multiplicity" pairs, ascending count
std::string fingerprint(const Graph& g, int m) {
  std::map<int, int> hist;
  for (int c : clique_counts_per_vertex(g, m)) ++hist[c];
  std::string out;
  for (auto [c, k] : hist) out += (out.empty() ? "" : " ") + std::to_string(c) + "^" + std::to_string(k);
  return out;
}

std::string list_vertices(const std::vector<Vertex>& vs, std::size_t limit) {
  std::string out;
  for (std::size_t i = 0; i < vs.size() && i < limit; ++i) out += (i ? " " : "") + std::to_string(vs[i]);
  if (vs.size() > limit) out += " ...";
  return out;
}

// ---- construct

int cmd_construct(const std::string& family, int q) {
  if (family == "affine") {
    Net net = affine_plane(q);
    std::cout << "points " << net.point_count << "\n";
    for (std::size_t c = 0; c < net.parallel_classes.size(); ++c)
      for (int b : net.parallel_classes[c]) {
        std::cout << "block " << b << " class " << c << ":";
        for (int p : net.blocks[b]) std::cout << " " << p;
        std::cout << "\n";
      }
    return 0;
  }
  Graph g;
  if (family == "wq") g = wq_graph(q);
  else if (family == "hermitian") g = hermitian_gq_graph(q);
  else if (family == "bilinear") g = bilinear_forms_graph(q);
  else throw std::invalid_argument("unknown family " + family);
  std::cout << graph6_encode(g) << "\n";
  return 0;
}

// ---- analyze

void analyze_one(const Graph& g, std::optional<int> dump_at, std::size_t list_limit) {
  std::cout << "vertices " << g.order() << ", edges " << g.edge_count() << "\n";
  auto p = check_srg(g);
  if (!p) {
    auto ia = intersection_array(g);
    if (!ia) {
      std::cout << "not strongly regular\n";
      return;
    }
    auto classes = antipodal_classes(g);
    if (ia->b.size() == 3 && !classes.empty()) {
      std::cout << "cover of K" << classes.size() << ", array " << ia->to_string() << "\n";
      std::cout << "antipodal classes of size " << classes.front().size() << "\n";
    } else {
      std::cout << "distance-regular, array " << ia->to_string() << "\n";
    }
    return;
  }
  std::cout << "srg " << to_string(*p) << "\n";
  auto shape = gq_shape(*p);
  if (!shape) {
    std::cout << "not pseudo-GQ\n";
    return;
  }
  auto [s, t] = *shape;
  std::cout << "pseudo-GQ order (" << s << "," << t << ")\n";
  std::cout << "maxclique fingerprint " << fingerprint(g, s + 1) << "\n";
  if (s < t || t < 2) {
    std::cout << "regular points: not applicable for s < t\n";
    return;
  }
  GqOrder o = GqOrder::make(s, t);
  auto rp = regular_points(g, o);
  std::cout << rp.size() << " regular points\n";
  if (rp.empty()) return;
  std::cout << "regular: " << list_vertices(rp, list_limit) << "\n";
  const Vertex at = dump_at.value_or(rp.front());
  auto d = decompose(g, at, o);
  std::cout << "at " << at << ": " << d.fibres.size() << " fibres of size " << t << ", "
            << (s == t ? "affine plane" : std::to_string(t + 1) + "-net") << " of order " << s << ", quotient ";
  if (auto qp = check_srg(d.quotient)) std::cout << to_string(*qp) << "\n";
  else if (d.quotient == Graph::complete(s * s)) std::cout << "K" << s * s << "\n";
  else std::cout << "not strongly regular\n";
  std::map<std::string, int> second;
  for (Vertex v : rp) {
    std::vector<Vertex> far;
    for (Vertex x = 0; x < g.order(); ++x)
      if (x != v && !g.adjacent(v, x)) far.push_back(x);
    ++second[canonical_form(induced_subgraph(g, far).graph)];
  }
  std::cout << "second subconstituents at regular points: " << second.size() << " classes\n";
  if (dump_at) std::cout << to_text(d);
}

// ---- switch

struct SwitchOptions {
  int vertex = 0;
  std::string sigma;
  bool all = false;
  bool type_swap = false;
  long long random = 0;
  std::optional<unsigned long long> seed;
  bool dedupe = false;
  std::string store;
};

Permutation random_element(const std::vector<Permutation>& gens, int n, std::mt19937_64& rng) {
  Permutation p = identity_permutation(n);
  if (gens.empty()) return p;
  for (int i = 0; i < 40; ++i) p = compose(gens[rng() % gens.size()], p);
  return p;
}

int cmd_switch(const std::string& input, const SwitchOptions& opt) {
  Graph g = read_graphs(input).front();
  auto o = pseudo_gq_order(g);
  if (!o) throw VerificationFailure("input is not a pseudo-GQ strongly regular graph with s >= t >= 2");
  if (opt.vertex < 0 || opt.vertex >= g.order()) throw std::invalid_argument("vertex out of range");
  if (!is_regular_point(g, opt.vertex, *o))
    throw VerificationFailure("vertex " + std::to_string(opt.vertex) + " is not a regular point");
  auto d = decompose(g, opt.vertex, *o);
  const int points = d.net.point_count;

  std::optional<GraphStore> store;
  if (!opt.store.empty()) store.emplace(opt.store);
  std::unordered_set<CanonicalForm> seen;
  std::string seed_text;

  auto emit = [&](const Permutation& sigma) {
    Graph h = switch_sigma(d, sigma);
    if (opt.dedupe) {
      CanonicalForm f = canonical_form(h);
      if (!seen.insert(f).second) return;
      if (store && store->contains(h)) return;
    }
    if (store) store->insert(h, {"switch", seed_text, to_string(sigma)});
    std::cout << graph6_encode(h) << "\n";
  };

  if (!opt.sigma.empty()) {
    emit(parse_permutation(opt.sigma));
  } else if (opt.type_swap) {
    auto sw = type_swapping_automorphism(net_collinearity_graph(d.net));
    if (!sw) throw VerificationFailure("the net collinearity graph has no type-swapping automorphism");
    emit(*sw);
  } else if (opt.all) {
    if (o->s != o->t) throw std::invalid_argument("--all needs s = t");
    if (points > 10) throw std::invalid_argument("--all is limited to at most 10 net points");
    Permutation p = identity_permutation(points);
    do emit(p);
    while (std::next_permutation(p.begin(), p.end()));
  } else if (opt.random > 0) {
    const unsigned long long seed = opt.seed ? *opt.seed : std::random_device{}();
    seed_text = std::to_string(seed);
    std::cerr << "seed " << seed << "\n";
    std::mt19937_64 rng(seed);
    std::vector<Permutation> gens;
    if (o->s > o->t) gens = automorphism_generators(net_collinearity_graph(d.net));
    for (long long i = 0; i < opt.random; ++i) {
      Permutation p = identity_permutation(points);
      if (o->s == o->t) std::shuffle(p.begin(), p.end(), rng);
      else p = random_element(gens, points, rng);
      emit(p);
    }
  } else {
    throw std::invalid_argument("give one of --sigma, --all, --random, --type-swap");
  }
  return 0;
}

// ---- spreads and covers

std::vector<std::vector<Vertex>> checked_classes(const Graph& cover) {
  auto ia = intersection_array(cover);
  auto classes = antipodal_classes(cover);
  if (!ia || ia->b.size() != 3 || classes.empty())
    throw VerificationFailure("input is not a distance-regular antipodal cover of diameter 3");
  return classes;
}

int cmd_spreads(const std::string& input, int s, std::optional<std::size_t> limit) {
  for (const Graph& g : read_graphs(input)) {
    auto spreads = find_spreads(g, s, limit);
    std::cout << "spreads " << spreads.size() << "\n";
    for (const auto& sp : spreads) {
      std::string line;
      for (const auto& c : sp.cliques) {
        if (!line.empty()) line += " |";
        for (Vertex x : c) line += " " + std::to_string(x);
      }
      std::cout << line.substr(1) << "\n";
    }
  }
  return 0;
}

int cmd_cover(const std::string& action, const std::string& input, int s, std::optional<std::size_t> limit,
              bool dedupe) {
  std::unordered_set<CanonicalForm> seen;
  auto emit = [&](const Graph& h) {
    if (dedupe && !seen.insert(canonical_form(h)).second) return;
    std::cout << graph6_encode(h) << "\n";
  };
  for (const Graph& g : read_graphs(input)) {
    if (action == "remove") {
      if (s < 1) throw std::invalid_argument("cover remove needs --s");
      for (const auto& sp : find_spreads(g, s, limit)) {
        Graph c = remove_spread(g, sp);
        checked_classes(c);
        emit(c);
      }
    } else if (action == "add") {
      Graph h = add_spread(g, checked_classes(g));
      if (!check_srg(h)) throw VerificationFailure("adding the spread did not give a strongly regular graph");
      emit(h);
    } else {
      throw std::invalid_argument("cover action must be add or remove");
    }
  }
  return 0;
}

// ---- store

int cmd_store(const std::string& action, const std::string& dir, const std::string& input, const std::string& source,
              bool allow_any) {
  GraphStore store(dir);
  if (action == "insert") {
    auto graphs = read_graphs(input);
    std::size_t added = 0;
    for (const Graph& g : graphs) {
      if (!allow_any && !check_srg(g)) throw VerificationFailure("refusing to store a graph that is not strongly regular");
      added += store.insert(g, {source, "", ""}).inserted;
    }
    std::cout << "inserted " << added << " of " << graphs.size() << ", total " << store.size() << "\n";
  } else if (action == "list") {
    auto entries = store.list();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      std::cout << i << "\t" << graph6_decode(e.graph6).order() << "\t" << e.meta.source << "\t" << e.meta.seed << "\t"
                << e.meta.sigma << "\n";
    }
  } else if (action == "export") {
    store.export_graph6(std::cout);
  } else if (action == "count") {
    std::cout << store.size() << "\n";
  } else {
    throw std::invalid_argument("store action must be insert, list, export or count");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"srgkit: strongly regular graphs from generalized quadrangles"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string family;
  int q = 0;
  auto* construct = app.add_subcommand("construct", "print a graph (graph6) or, for affine, a net listing");
  construct->add_option("family", family, "wq | hermitian | bilinear | affine")->required();
  construct->add_option("q", q, "prime power")->required();

  std::optional<int> dump_at;
  std::size_t list_limit = 64;
  auto* analyze = app.add_subcommand("analyze", "parameters, regular points, decomposition summary");
  analyze->add_option("--input,-i", input, "graph6 file, default stdin");
  analyze->add_option("--dump", dump_at, "print the full decomposition at this regular point");
  analyze->add_option("--max-list", list_limit, "longest vertex list to print");

  SwitchOptions sw;
  auto* swc = app.add_subcommand("switch", "permutation switching at a regular point");
  swc->add_option("--input,-i", input, "graph6 file, default stdin (first graph is used)");
  swc->add_option("--vertex,-v", sw.vertex, "regular point")->required();
  swc->add_option("--sigma", sw.sigma, "image notation on net points, e.g. \"1 0 2 3\"");
  swc->add_flag("--all", sw.all, "every permutation of the net points (s = t, at most 10 points)");
  swc->add_flag("--type-swap", sw.type_swap, "a clique-type swapping automorphism of the quotient");
  swc->add_option("--random", sw.random, "number of random permutations");
  swc->add_option("--seed", sw.seed, "PRNG seed; generated and printed when absent");
  swc->add_flag("--dedupe", sw.dedupe, "only emit new isomorphism classes");
  swc->add_option("--store", sw.store, "store directory to insert the emitted graphs into");

  int s = 0;
  std::optional<std::size_t> limit;
  auto* spreads = app.add_subcommand("spreads", "list spreads (partitions into (s+1)-cliques)");
  spreads->add_option("--input,-i", input, "graph6 file, default stdin");
  spreads->add_option("--s", s, "clique size minus one")->required();
  spreads->add_option("--limit", limit, "stop after this many spreads");

  std::string cover_action;
  bool cover_dedupe = false;
  auto* cover = app.add_subcommand("cover", "remove spreads (SRG -> covers) or add the antipodal spread");
  cover->add_option("action", cover_action, "add | remove")->required();
  cover->add_option("--input,-i", input, "graph6 file, default stdin");
  cover->add_option("--s", s, "clique size minus one (remove)");
  cover->add_option("--limit", limit, "stop after this many spreads per graph");
  cover->add_flag("--dedupe", cover_dedupe, "only emit new isomorphism classes");

  std::string store_action, store_dir, source = "insert";
  bool allow_any = false;
  auto* store = app.add_subcommand("store", "canonical-form keyed graph store");
  store->add_option("action", store_action, "insert | list | export | count")->required();
  store->add_option("--dir,-d", store_dir, "store directory")->required();
  store->add_option("--input,-i", input, "graph6 file for insert, default stdin");
  store->add_option("--source", source, "metadata source field for insert");
  store->add_flag("--any", allow_any, "allow graphs that are not strongly regular");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*construct) return cmd_construct(family, q);
    if (*analyze) {
      for (const Graph& g : read_graphs(input)) analyze_one(g, dump_at, list_limit);
      return 0;
    }
    if (*swc) return cmd_switch(input, sw);
    if (*spreads) return cmd_spreads(input, s, limit);
    if (*cover) return cmd_cover(cover_action, input, s, limit, cover_dedupe);
    if (*store) return cmd_store(store_action, store_dir, input, source, allow_any);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
