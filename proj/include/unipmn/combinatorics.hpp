#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace unipmn {

/// A partition stored as weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts and drops zeros. Negative parts are rejected.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Number of parts equal to k.
  int multiplicity(int k) const;
  /// True iff no part repeats.
  bool distinct_parts() const;

  /// Removes one occurrence of `part`; the part must be present.
  Partition without(int part) const;

  std::string to_string() const;  // "3,1" or ""

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct BiPartition {
  Partition lambda;
  Partition mu;

  std::string to_string() const;  // "3,1|2"

  friend auto operator<=>(const BiPartition&, const BiPartition&) = default;
  friend bool operator==(const BiPartition&, const BiPartition&) = default;
};

enum class Family : std::uint8_t { B, C, Dplus, Dminus };

/// "B", "C", "D+", "D-".
std::string_view family_name(Family f);
/// Accepts the names above; throws ParseError otherwise.
Family parse_family(std::string_view text);

inline bool is_d_side(Family f) { return f == Family::Dplus || f == Family::Dminus; }

/// Parses "a,b,...|c,d,..."; either side may be empty.
BiPartition parse_bipartition(std::string_view text);

int bipartition_size(const BiPartition& bp);

/// Whether `bp` labels an F-class of the family's Weyl group
/// (μ must have an even number of parts for D+, odd for D-).
bool validate_class(const BiPartition& bp, Family family);

/// D-type classes with μ empty and all parts of λ even split into two
/// classes of W(D_n); they are kept as a single label here.
bool is_degenerate_class(const BiPartition& bp);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// All bipartitions (λ,μ) with |λ|+|μ| = n.
std::vector<BiPartition> enumerate_bipartitions(int n);

}  // namespace unipmn
