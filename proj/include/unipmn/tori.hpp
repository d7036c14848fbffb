#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unipmn/combinatorics.hpp"

namespace unipmn {

/// Torus types (bipartitions of n) valid for the family, ordered as
/// enumerate_bipartitions. Degenerate D+ labels appear once; see
/// is_degenerate_class.
std::vector<BiPartition> enumerate_torus_types(Family family, int n);

struct RegularGuarantee {
  enum class Tag : std::uint8_t { Guaranteed, Unknown };
  Tag tag = Tag::Unknown;
  int clause = 0;  // 1, 2 or 3 when guaranteed, else 0
  bool guaranteed() const { return tag == Tag::Guaranteed; }
};

/// Sufficient criteria for T^F to contain regular elements; the first
/// applicable clause (in order 1, 2, 3) is reported.
RegularGuarantee regular_guarantee(Family family, long q, const BiPartition& bp);

/// Whether tori of this type contain elements of order ell, ell an odd prime
/// not dividing q.
bool is_ell_singular(const BiPartition& bp, long q, long ell);

struct MaxredResult {
  bool passed = false;
  /// First k for which every member splits off a size-k piece (condition 1).
  std::optional<int> split_k;
  int gcd = 0;        // condition 2 holds iff gcd == 1
  bool parity_ok = true;  // condition 3 (family B only)
};

/// The three conditions on a collection of torus types under which no
/// non-central semisimple element centralises all of them.
MaxredResult maxred_details(const std::vector<BiPartition>& types, Family family, int n);
bool maxred_check(const std::vector<BiPartition>& types, Family family, int n);

/// Variant of condition (1) for D families that also tracks the rational
/// form of the pieces: a split (λ1,μ1) ⊔ (λ2,μ2) only counts when the
/// parity of the number of parts of μ1 is the same for every member (those
/// parities fix the forms D_k^± + D_{n-k}^±; parity even with μ1 empty also
/// covers parabolic subgroups). Conditions (2) and (3) are as before.
bool maxred_check_rational(const std::vector<BiPartition>& types, Family family, int n);

/// One instantiated row of the table of tori used for non-unipotent
/// characters of B_n, C_n, D_n and 2D_n.
struct TorusTableRow {
  std::string label;   // e.g. "D d=2e a odd r=0"
  Family family;       // B for the B/C rows, Dplus / Dminus for D / 2D
  int n = 0;
  int d = 0;
  int a = 0;
  int r = 0;
  bool starred = false;  // rows that need the rational-form argument
  std::vector<BiPartition> tori;
};

/// Row of the table that applies to (family, n, d), with a >= 2 as in the
/// table's setting (nullopt when out of range). B and C share rows.
std::optional<TorusTableRow> torus_table_row(Family family, int n, int d);

}  // namespace unipmn
