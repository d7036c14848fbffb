#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "unipmn/combinatorics.hpp"
#include "unipmn/symbols.hpp"

namespace unipmn {

struct CharacterValue {
  std::int64_t value = 0;
  /// Degenerate symbol: `value` is the sum over the two characters it labels.
  bool degenerate_character = false;
  /// D-type class label that splits into two classes.
  bool degenerate_class = false;
  friend bool operator==(const CharacterValue&, const CharacterValue&) = default;
};

/// One persisted memo entry; `family` is the stage tag ("BC", "D+", "D-").
struct CacheEntry {
  std::string symbol;
  std::string cls;
  std::string family;
  std::int64_t value = 0;
};

/// Murnaghan–Nakayama evaluator with a shared memo table. Safe to call
/// from several threads at once.
class Engine {
 public:
  CharacterValue value(const Symbol& s, const BiPartition& bp, Family family);

  /// Reads "symbol\tclass\tfamily\tvalue" lines into the memo table.
  /// A missing file is not an error. Returns the number of entries read.
  std::size_t load_cache(const std::filesystem::path& path);
  /// Appends every entry computed since construction / the last load or
  /// save that is not yet on disk, as one write. Returns the count.
  std::size_t save_cache(const std::filesystem::path& path);

  std::size_t memo_size() const;
  void clear();

 private:
  std::int64_t eval(const Symbol& canonical, std::vector<int>& lambda, std::vector<int>& mu);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::int64_t> memo_;
  std::vector<std::string> unsaved_;
};

/// Process-wide engine used by the free `value` and the scans.
Engine& default_engine();

/// Value of ρ_S on the regular semisimple class labelled by `bp`.
CharacterValue value(const Symbol& s, const BiPartition& bp, Family family);

/// Same contract, no memo: evaluates every distinct removal order of the
/// parts and throws InternalError if two orders disagree.
CharacterValue value_oracle(const Symbol& s, const BiPartition& bp, Family family);

}  // namespace unipmn
