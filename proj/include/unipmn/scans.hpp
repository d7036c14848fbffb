#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unipmn/combinatorics.hpp"
#include "unipmn/mn_engine.hpp"
#include "unipmn/qpoly.hpp"
#include "unipmn/symbols.hpp"

namespace unipmn {

/// {0,...,k}; empty for k = -1.
std::vector<int> initial_segment(int k);

/// Symbol of the numbered case (1..6) of the classification of unipotent
/// characters that vanish on no ell-singular regular semisimple class.
/// `d_or_e` is d for the odd cases (1, 3, 5) and e = d/2 for the even ones.
/// DomainError when r is outside the case's range.
Symbol exception_case_symbol(int case_id, int d_or_e, int r);
/// Rank of the group in that case.
int exception_case_rank(int case_id, int d_or_e, int r);
/// Family the case lives in: C for cases 1-2, D+ for 3-4, D- for 5-6.
Family exception_case_family(int case_id);

/// Symbols expected to vanish nowhere on ell-singular regular classes: the
/// applicable case symbols, their duals, trivial and Steinberg. With q == 2
/// the small groups Sp4(2), Sp6(2), Sp8(2), Spin8-(2) are added. Sorted,
/// canonical, no duplicates. Empty when no case applies.
std::vector<Symbol> predicted_exceptions(Family family, int n, int d, std::optional<long> q = std::nullopt);

struct SymbolScan {
  Symbol symbol;  // canonical
  bool degenerate = false;
  std::vector<std::int64_t> values;  // aligned with ScanReport::classes
  std::optional<std::size_t> zero_at;  // first class index with value 0
};

struct ScanReport {
  Family family;
  int n = 0;
  long q = 0;
  long ell = 0;
  int d = 0;
  std::vector<BiPartition> classes;            // ell-singular with a regular guarantee
  std::vector<BiPartition> skipped_classes;    // ell-singular, guarantee Unknown
  std::vector<SymbolScan> symbols;             // every symbol, sorted by text
  std::vector<Symbol> predicted;
  std::vector<Symbol> predicted_missing;       // predicted but with a zero value

  std::vector<const SymbolScan*> nonvanishing() const;
};

/// threads == 0 means hardware concurrency. Results do not depend on it.
ScanReport scan_nonvanishing(Family family, int n, long q, long ell, unsigned threads = 0,
                             Engine& engine = default_engine());

struct CartanCheck {
  Symbol symbol;
  std::int64_t v1 = 0;
  std::int64_t v2 = 0;
  bool passed() const { return v1 * v2 == -1; }
};

struct CartanReport {
  int case_id = 0;
  int d_or_e = 0;
  int r = 0;
  Family family;
  int n = 0;
  BiPartition torus1;
  BiPartition torus2;
  CartanCheck character;
  CartanCheck dual;
  Symbol listed_dual;       // closed form for the dual symbol
  bool dual_matches = false;
  bool passed() const { return character.passed() && dual.passed() && dual_matches; }
};

/// Torus pair on which the case symbol and its dual take values of opposite
/// sign. DomainError when (case, d_or_e, r) is outside the case range or the
/// group rank is below 2 (B/C) or 4 (D).
CartanReport cartan_sign_pairs(int case_id, int d_or_e, int r, Engine& engine = default_engine());

/// Legal r for a case (n >= 4 enforced for the D cases).
std::vector<int> cartan_legal_r(int case_id, int d_or_e);

/// The subgroup paired with `g` in the table of large subgroups; DomainError
/// if g has no row.
GroupSpec corrigendum_partner(const GroupSpec& g);

struct CorrigendumReport {
  GroupSpec g;
  GroupSpec h;
  long q = 0;
  long p = 0;
  IntPoly index_poly;
  mpz_class index;
  mpz_class g_p_part;  // |G|_p = q^N
  bool p_divides = false;
  bool below_p_part = false;
  bool passed() const { return p_divides && below_p_part; }
};

CorrigendumReport corrigendum_check(const GroupSpec& g, const GroupSpec& h, long q, long p);

struct CorrigendumSymbolic {
  GroupSpec g;
  GroupSpec h;
  IntPoly index_poly;
  bool zero_constant_term = false;  // p | index for every q
  int first_q = 2;
  int last_q = 64;
  bool below_everywhere = false;  // index(q) < q^N for q in [first_q, last_q]
  bool passed() const { return zero_constant_term && below_everywhere; }
};

CorrigendumSymbolic corrigendum_symbolic(const GroupSpec& g, int first_q = 2, int last_q = 64);

/// One representative group per table row, classical rows at the given rank
/// (adjusted up to each row's minimum).
std::vector<GroupSpec> corrigendum_table(int rank);

}  // namespace unipmn
