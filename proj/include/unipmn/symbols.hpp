#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace unipmn {

/// An unordered pair of finite sets of non-negative integers. The stored
/// row order is whatever the constructor received; `normalize` picks the
/// canonical representative of the shift / row-swap equivalence class.
class Symbol {
 public:
  Symbol() = default;
  /// Rows must be strictly increasing and non-negative (ContractError otherwise).
  Symbol(std::vector<int> x, std::vector<int> y);

  const std::vector<int>& x() const { return x_; }
  const std::vector<int>& y() const { return y_; }
  const std::vector<int>& row(int i) const { return i == 0 ? x_ : y_; }

  int max_entry() const;  // -1 for the empty symbol
  std::string to_string() const;  // "x1,x2|y1"

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  friend bool operator==(const Symbol&, const Symbol&) = default;

 private:
  std::vector<int> x_;
  std::vector<int> y_;
};

/// Parses "x1,x2,...|y1,..." (rows strictly increasing).
Symbol parse_symbol(std::string_view text);

/// Canonical representative: inverse shifts until the rows do not both
/// contain 0, then longer row first, ties broken lexicographically.
Symbol normalize(const Symbol& s);

/// Applies the shift operation k times (prepends 0 and adds 1 to both rows).
Symbol shift(const Symbol& s, int k = 1);

int rank(const Symbol& s);
int defect(const Symbol& s);

enum class SymbolTag : std::uint8_t { BC, DPlus, DMinus };

struct SymbolKind {
  SymbolTag tag;
  bool degenerate;
  friend bool operator==(const SymbolKind&, const SymbolKind&) = default;
};

SymbolKind kind(const Symbol& s);
std::string_view tag_name(SymbolTag t);  // "BC", "D+", "D-"

/// Which row of the (canonical) symbol a move starts from.
struct HookSite {
  int row;     // 0 = first row, 1 = second row
  int entry;   // x
  int target;  // x - d
  friend bool operator==(const HookSite&, const HookSite&) = default;
};

struct HookMove {
  Symbol result;  // normalized
  int sign;       // +1 or -1
  HookSite site;
};

/// All d-hooks. Sites refer to entries of normalize(s).
std::vector<HookMove> hooks(const Symbol& s, int d);
/// All d-cohooks. Sites refer to entries of normalize(s).
std::vector<HookMove> cohooks(const Symbol& s, int d);

/// Same moves as `hooks` / `cohooks`, computed on the given representative
/// as-is and without normalizing results. Used by the recursion hot path.
void raw_hooks(const Symbol& s, int d, std::vector<HookMove>& out);
void raw_cohooks(const Symbol& s, int d, std::vector<HookMove>& out);

/// Complementation dual with respect to {0,...,m}; every entry must be <= m
/// (DomainError otherwise). The result is normalized.
Symbol dual(const Symbol& s, int m);
/// dual(s, max(0, max_entry(s))): the Alvis–Curtis dual label.
Symbol dual(const Symbol& s);

/// Every canonical symbol of rank n with the given defect class, each once
/// and sorted. Degenerate symbols appear once.
std::vector<Symbol> enumerate_symbols(int n, SymbolTag tag);

/// The symbol of the trivial character: (n | ) for B/C, (n | 0) for D+,
/// (0,n | ) for D-.
Symbol trivial_symbol(int n, SymbolTag tag);
/// Alvis–Curtis dual of the trivial symbol.
Symbol steinberg_symbol(int n, SymbolTag tag);

struct SymbolHash {
  std::size_t operator()(const Symbol& s) const noexcept;
};

}  // namespace unipmn
