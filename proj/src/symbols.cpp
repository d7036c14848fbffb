#include "unipmn/symbols.hpp"

#include <algorithm>
#include <numeric>

#include "text.hpp"
#include "unipmn/errors.hpp"

namespace unipmn {

namespace {

void check_row(const std::vector<int>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0) throw ContractError("symbol entries must be non-negative");
    if (i > 0 && row[i] <= row[i - 1]) throw ContractError("symbol rows must be strictly increasing");
  }
}

bool contains(const std::vector<int>& row, int v) { return std::binary_search(row.begin(), row.end(), v); }

int count_below(const std::vector<int>& row, int v) {
  return static_cast<int>(std::lower_bound(row.begin(), row.end(), v) - row.begin());
}

void insert_sorted(std::vector<int>& row, int v) { row.insert(std::lower_bound(row.begin(), row.end(), v), v); }

// Rows ordered canonically: longer first, then lexicographically smaller first.
bool rows_in_order(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a <= b;
}

}  // namespace

Symbol::Symbol(std::vector<int> x, std::vector<int> y) : x_(std::move(x)), y_(std::move(y)) {
  check_row(x_);
  check_row(y_);
}

int Symbol::max_entry() const {
  int m = -1;
  if (!x_.empty()) m = std::max(m, x_.back());
  if (!y_.empty()) m = std::max(m, y_.back());
  return m;
}

std::string Symbol::to_string() const { return detail::join_ints(x_) + "|" + detail::join_ints(y_); }

Symbol parse_symbol(std::string_view text) {
  const auto [left, right] = detail::split_rows(text);
  auto x = detail::parse_nonnegative_list(left);
  auto y = detail::parse_nonnegative_list(right);
  for (const auto* row : {&x, &y}) {
    for (std::size_t i = 1; i < row->size(); ++i) {
      if ((*row)[i] <= (*row)[i - 1]) {
        throw ParseError("symbol row not strictly increasing in \"" + std::string(text) + "\"");
      }
    }
  }
  return Symbol(std::move(x), std::move(y));
}

Symbol normalize(const Symbol& s) {
  std::vector<int> x = s.x();
  std::vector<int> y = s.y();
  // Number of leading positions where both rows hold 0,1,2,...
  std::size_t k = 0;
  while (k < x.size() && k < y.size() && x[k] == static_cast<int>(k) && y[k] == static_cast<int>(k)) ++k;
  if (k > 0) {
    x.erase(x.begin(), x.begin() + k);
    y.erase(y.begin(), y.begin() + k);
    const int shift_by = static_cast<int>(k);
    for (int& v : x) v -= shift_by;
    for (int& v : y) v -= shift_by;
  }
  if (!rows_in_order(x, y)) std::swap(x, y);
  return Symbol(std::move(x), std::move(y));
}

Symbol shift(const Symbol& s, int k) {
  std::vector<int> x(static_cast<std::size_t>(k));
  std::vector<int> y(static_cast<std::size_t>(k));
  std::iota(x.begin(), x.end(), 0);
  std::iota(y.begin(), y.end(), 0);
  for (int v : s.x()) x.push_back(v + k);
  for (int v : s.y()) y.push_back(v + k);
  return Symbol(std::move(x), std::move(y));
}

int rank(const Symbol& s) {
  const int sum = std::accumulate(s.x().begin(), s.x().end(), 0) + std::accumulate(s.y().begin(), s.y().end(), 0);
  const int t = static_cast<int>(s.x().size() + s.y().size()) - 1;
  // floor(((r+s-1)/2)^2); t*t >= 0 so integer division floors.
  return sum - (t * t) / 4;
}

int defect(const Symbol& s) {
  const auto r = static_cast<int>(s.x().size());
  const auto t = static_cast<int>(s.y().size());
  return r > t ? r - t : t - r;
}

SymbolKind kind(const Symbol& s) {
  const int def = defect(s);
  const SymbolTag tag = def % 2 == 1 ? SymbolTag::BC : (def % 4 == 0 ? SymbolTag::DPlus : SymbolTag::DMinus);
  return SymbolKind{tag, s.x() == s.y()};
}

std::string_view tag_name(SymbolTag t) {
  switch (t) {
    case SymbolTag::BC: return "BC";
    case SymbolTag::DPlus: return "D+";
    case SymbolTag::DMinus: return "D-";
  }
  return "?";
}

void raw_hooks(const Symbol& s, int d, std::vector<HookMove>& out) {
  if (d < 1) throw ContractError("hook length must be positive");
  for (int r = 0; r < 2; ++r) {
    const auto& row = s.row(r);
    for (int x : row) {
      const int target = x - d;
      if (target < 0 || contains(row, target)) continue;
      std::vector<int> moved = row;
      moved.erase(std::lower_bound(moved.begin(), moved.end(), x));
      insert_sorted(moved, target);
      // entries strictly between target and x
      const int m = count_below(row, x) - count_below(row, target + 1);
      Symbol result = r == 0 ? Symbol(std::move(moved), s.y()) : Symbol(s.x(), std::move(moved));
      out.push_back(HookMove{std::move(result), m % 2 == 0 ? 1 : -1, HookSite{r, x, target}});
    }
  }
}

void raw_cohooks(const Symbol& s, int d, std::vector<HookMove>& out) {
  if (d < 1) throw ContractError("cohook length must be positive");
  for (int r = 0; r < 2; ++r) {
    const auto& row = s.row(r);
    const auto& other = s.row(1 - r);
    for (int x : row) {
      const int target = x - d;
      if (target < 0 || contains(other, target)) continue;
      std::vector<int> from = row;
      from.erase(std::lower_bound(from.begin(), from.end(), x));
      std::vector<int> to = other;
      insert_sorted(to, target);
      const int m = count_below(row, x) + count_below(other, target);
      Symbol result = r == 0 ? Symbol(std::move(from), std::move(to)) : Symbol(std::move(to), std::move(from));
      out.push_back(HookMove{std::move(result), m % 2 == 0 ? 1 : -1, HookSite{r, x, target}});
    }
  }
}

std::vector<HookMove> hooks(const Symbol& s, int d) {
  std::vector<HookMove> out;
  raw_hooks(normalize(s), d, out);
  for (auto& mv : out) mv.result = normalize(mv.result);
  return out;
}

std::vector<HookMove> cohooks(const Symbol& s, int d) {
  std::vector<HookMove> out;
  raw_cohooks(normalize(s), d, out);
  for (auto& mv : out) mv.result = normalize(mv.result);
  return out;
}

Symbol dual(const Symbol& s, int m) {
  if (s.max_entry() > m) {
    throw DomainError("dual: entry " + std::to_string(s.max_entry()) + " exceeds m = " + std::to_string(m));
  }
  auto complement = [m](const std::vector<int>& row) {
    std::vector<int> out;
    for (int v = 0; v <= m; ++v) {
      if (!contains(row, m - v)) out.push_back(v);
    }
    return out;
  };
  return normalize(Symbol(complement(s.x()), complement(s.y())));
}

Symbol dual(const Symbol& s) { return dual(s, std::max(0, s.max_entry())); }

namespace {

// Strictly increasing sequences of `len` entries >= lo with sum <= budget
// (exact == true: sum == budget).
void increasing_sequences(int len, int lo, int budget, bool exact, std::vector<int>& prefix,
                          std::vector<std::vector<int>>& out) {
  if (len == 0) {
    if (!exact || budget == 0) out.push_back(prefix);
    return;
  }
  // Smallest completion from v is v + (v+1) + ... + (v+len-1).
  for (int v = lo;; ++v) {
    const int min_rest = len * v + len * (len - 1) / 2;
    if (min_rest > budget) break;
    prefix.push_back(v);
    increasing_sequences(len - 1, v + 1, budget - v, exact, prefix, out);
    prefix.pop_back();
  }
}

bool tag_matches(int def, SymbolTag tag) {
  switch (tag) {
    case SymbolTag::BC: return def % 2 == 1;
    case SymbolTag::DPlus: return def % 4 == 0;
    case SymbolTag::DMinus: return def % 4 == 2;
  }
  return false;
}

}  // namespace

std::vector<Symbol> enumerate_symbols(int n, SymbolTag tag) {
  std::vector<Symbol> out;
  if (n < 0) return out;
  // Canonical form has rows of lengths r >= s and not both containing 0, so the
  // entry sum is at least r(r-1)/2 + s(s+1)/2 (s > 0); this bounds s and the defect.
  for (int def = 0;; ++def) {
    const int r0 = def;
    const int t0 = r0 - 1;
    const int min_rank_s0 = r0 * (r0 - 1) / 2 - (t0 * t0) / 4;
    if (min_rank_s0 > n) break;
    if (!tag_matches(def, tag)) continue;
    for (int s = 0; s <= n; ++s) {
      const int r = s + def;
      const int t = r + s - 1;
      const int total = n + (t * t) / 4;
      std::vector<int> prefix;
      std::vector<std::vector<int>> xs;
      increasing_sequences(r, 0, total - s * (s - 1) / 2, false, prefix, xs);
      for (const auto& x : xs) {
        const int rest = total - std::accumulate(x.begin(), x.end(), 0);
        std::vector<std::vector<int>> ys;
        increasing_sequences(s, 0, rest, true, prefix, ys);
        for (const auto& y : ys) {
          const bool both_zero = !x.empty() && !y.empty() && x.front() == 0 && y.front() == 0;
          if (both_zero || !rows_in_order(x, y)) continue;
          out.emplace_back(x, y);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Symbol trivial_symbol(int n, SymbolTag tag) {
  if (n < 0) throw ContractError("rank must be non-negative");
  switch (tag) {
    case SymbolTag::BC: return normalize(Symbol({n}, {}));
    case SymbolTag::DPlus: return normalize(Symbol({n}, {0}));
    case SymbolTag::DMinus:
      if (n < 1) throw ContractError("no defect-2 symbol of rank 0");
      return normalize(Symbol({0, n}, {}));
  }
  throw InternalError("unreachable");
}

Symbol steinberg_symbol(int n, SymbolTag tag) { return dual(trivial_symbol(n, tag)); }

std::size_t SymbolHash::operator()(const Symbol& s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](int v) { h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (int v : s.x()) mix(v);
  mix(-1);
  for (int v : s.y()) mix(v);
  return h;
}

}  // namespace unipmn
