#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "srgkit/graph.hpp"
#include "srgkit/isocanon.hpp"

namespace srg {

// Where a stored graph came from. Tabs and newlines are replaced by spaces.
struct StoreMetadata {
  std::string source;  // e.g. "switch", "import"
  std::string seed;    // empty when not random
  std::string sigma;   // image notation, empty when not applicable
};

struct StoreEntry {
  std::uint64_t hash = 0;    // FNV-1a of the canonical form
  std::uint64_t offset = 0;  // byte offset of the line in graphs.g6
  StoreMetadata meta;
  std::string graph6;  // as inserted, not relabelled
};

// Directory with two append-only files:
//   graphs.g6  one graph6 line per entry
//   index.tsv  "hash<TAB>offset<TAB>source<TAB>seed<TAB>sigma", hash as 16 hex digits
// No two entries are isomorphic. Canonical forms are recomputed on open.
// insert/contains/list may be called from several threads; writers are
// serialized, the canonical form is computed outside the lock.
class GraphStore {
 public:
  // Creates the directory and files when missing. Throws std::runtime_error
  // on I/O failure or a corrupt index (bad offset, unparsable line,
  // two isomorphic entries).
  explicit GraphStore(const std::filesystem::path& dir);

  struct InsertResult {
    bool inserted = false;
    std::size_t index = 0;  // of the new entry, or of the existing isomorphic one
  };
  InsertResult insert(const Graph& g, const StoreMetadata& meta);
  bool contains(const Graph& g) const;
  std::size_t size() const;
  std::vector<StoreEntry> list() const;

  // Plain graph6 lines, in insertion order.
  void export_graph6(std::ostream& out) const;
  // Inserts every non-empty line; returns how many were new. Malformed
  // lines throw Graph6Error before anything after them is read.
  std::size_t import_graph6(std::istream& in, const StoreMetadata& meta);

  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path dir_;
  mutable std::shared_mutex mutex_;
  std::vector<StoreEntry> entries_;
  std::unordered_map<CanonicalForm, std::size_t> by_form_;
  std::uint64_t graphs_size_ = 0;
  std::ofstream graphs_out_;
  std::ofstream index_out_;
};

std::uint64_t form_hash(const CanonicalForm& form);

}  // namespace srg
