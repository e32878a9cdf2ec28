#include "srgkit/graph.hpp"

namespace srg {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr long long kMaxGraph6Order = 68719476735LL;

void put_order(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

int sextet(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw Graph6Error(pos, "unexpected end of input");
  int c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw Graph6Error(pos, "byte outside printable range 63..126");
  return c - 63;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const long long n = g.order();
  std::string out;
  put_order(out, n);
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  long long n;
  int first = sextet(text, pos);
  if (first < 63) {
    n = first;
    pos += 1;
  } else if (sextet(text, pos + 1) < 63) {
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(text, pos + i);
    if (n < 63) throw Graph6Error(pos, "non-canonical length encoding");
    pos += 4;
  } else {
    n = 0;
    for (int i = 2; i <= 7; ++i) n = (n << 6) | sextet(text, pos + i);
    if (n < 258048) throw Graph6Error(pos, "non-canonical length encoding");
    if (n > kMaxGraph6Order) throw Graph6Error(pos, "order too large");
    pos += 8;
  }
  if (n > 100000) throw Graph6Error(pos, "order too large for dense graphs");

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != bytes)
    throw Graph6Error(pos, "expected " + std::to_string(bytes) + " adjacency bytes, found " +
                               std::to_string(text.size() - pos));

  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::size_t at = pos + static_cast<std::size_t>(k / 6);
      int bit = 5 - static_cast<int>(k % 6);
      if ((sextet(text, at) >> bit) & 1) b.add_edge(i, j);
    }
  if (bits % 6 != 0) {
    std::size_t at = pos + static_cast<std::size_t>(bytes - 1);
    int pad = static_cast<int>(6 - bits % 6);
    if (sextet(text, at) & ((1 << pad) - 1)) throw Graph6Error(at, "nonzero padding bits");
  }
  return std::move(b).build();
}

}  // namespace srg
