#include "srgkit/store.hpp"

#include <cstdio>
#include <istream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace srg {
namespace {

std::string clean(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("store: cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::uint64_t form_hash(const CanonicalForm& form) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : form) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

GraphStore::GraphStore(const std::filesystem::path& dir) : dir_(dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("store: cannot create " + dir_.string() + ": " + ec.message());
  const auto gpath = dir_ / "graphs.g6", ipath = dir_ / "index.tsv";
  if (!std::filesystem::exists(gpath)) std::ofstream(gpath, std::ios::binary);
  if (!std::filesystem::exists(ipath)) std::ofstream(ipath, std::ios::binary) << "#hash\toffset\tsource\tseed\tsigma\n";

  const std::string graphs = read_file(gpath);
  graphs_size_ = graphs.size();
  std::istringstream index(read_file(ipath));
  std::string line;
  int lineno = 0;
  while (std::getline(index, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto where = [&] { return "store: index.tsv line " + std::to_string(lineno) + ": "; };
    auto f = split_tabs(line);
    if (f.size() != 5) throw std::runtime_error(where() + "expected 5 fields");
    StoreEntry e;
    try {
      e.hash = std::stoull(f[0], nullptr, 16);
      e.offset = std::stoull(f[1]);
    } catch (const std::exception&) {
      throw std::runtime_error(where() + "bad hash or offset");
    }
    e.meta = {f[2], f[3], f[4]};
    if (e.offset >= graphs.size() || (e.offset > 0 && graphs[e.offset - 1] != '\n'))
      throw std::runtime_error(where() + "offset " + f[1] + " is not the start of a line");
    std::size_t end = graphs.find('\n', e.offset);
    if (end == std::string::npos) throw std::runtime_error(where() + "unterminated graph line");
    e.graph6 = graphs.substr(e.offset, end - e.offset);
    Graph g;
    try {
      g = graph6_decode(e.graph6);
    } catch (const Graph6Error& err) {
      throw std::runtime_error(where() + err.what());
    }
    CanonicalForm form = canonical_form(g);
    if (by_form_.count(form))
      throw std::runtime_error(where() + "isomorphic to entry " + std::to_string(by_form_[form]));
    by_form_.emplace(std::move(form), entries_.size());
    entries_.push_back(std::move(e));
  }

  graphs_out_.open(gpath, std::ios::binary | std::ios::app);
  index_out_.open(ipath, std::ios::binary | std::ios::app);
  if (!graphs_out_ || !index_out_) throw std::runtime_error("store: cannot open " + dir_.string() + " for appending");
}

GraphStore::InsertResult GraphStore::insert(const Graph& g, const StoreMetadata& meta) {
  CanonicalForm form = canonical_form(g);
  std::unique_lock lock(mutex_);
  if (auto it = by_form_.find(form); it != by_form_.end()) return {false, it->second};

  StoreEntry e;
  e.hash = form_hash(form);
  e.offset = graphs_size_;
  e.meta = {clean(meta.source), clean(meta.seed), clean(meta.sigma)};
  e.graph6 = graph6_encode(g);
  graphs_out_ << e.graph6 << '\n';
  graphs_out_.flush();
  index_out_ << hex(e.hash) << '\t' << e.offset << '\t' << e.meta.source << '\t' << e.meta.seed << '\t'
             << e.meta.sigma << '\n';
  index_out_.flush();
  if (!graphs_out_ || !index_out_) throw std::runtime_error("store: write failed in " + dir_.string());
  graphs_size_ += e.graph6.size() + 1;

  const std::size_t idx = entries_.size();
  by_form_.emplace(std::move(form), idx);
  entries_.push_back(std::move(e));
  return {true, idx};
}

bool GraphStore::contains(const Graph& g) const {
  CanonicalForm form = canonical_form(g);
  std::shared_lock lock(mutex_);
  return by_form_.count(form) > 0;
}

std::size_t GraphStore::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::vector<StoreEntry> GraphStore::list() const {
  std::shared_lock lock(mutex_);
  return entries_;
}

void GraphStore::export_graph6(std::ostream& out) const {
  std::shared_lock lock(mutex_);
  for (const auto& e : entries_) out << e.graph6 << '\n';
}

std::size_t GraphStore::import_graph6(std::istream& in, const StoreMetadata& meta) {
  std::size_t added = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    added += insert(graph6_decode(line), meta).inserted;
  }
  return added;
}

}  // namespace srg
