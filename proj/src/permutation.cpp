#include <sstream>

#include "srgkit/graph.hpp"

namespace srg {

bool is_permutation(std::span<const Vertex> p) {
  std::vector<char> seen(p.size(), 0);
  for (Vertex x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation inverse(std::span<const Vertex> p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<Vertex>(i);
  return r;
}

Permutation compose(std::span<const Vertex> a, std::span<const Vertex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Permutation parse_permutation(std::string_view text) {
  std::istringstream in{std::string(text)};
  Permutation p;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("permutation: bad token '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("permutation: bad token '" + tok + "'");
    p.push_back(v);
  }
  if (!is_permutation(p)) throw std::invalid_argument("permutation: not a bijection of 0.." + std::to_string(p.size()) + "-1");
  return p;
}

std::string to_string(std::span<const Vertex> p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace srg
