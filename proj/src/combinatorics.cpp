#include "unipmn/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "text.hpp"
#include "unipmn/errors.hpp"

namespace unipmn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw ContractError("partition part must be non-negative, got " + std::to_string(p));
  }
  std::erase(parts_, 0);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

bool Partition::distinct_parts() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

Partition Partition::without(int part) const {
  auto it = std::find(parts_.begin(), parts_.end(), part);
  if (it == parts_.end()) {
    throw ContractError("part " + std::to_string(part) + " not in partition (" + to_string() + ")");
  }
  Partition out = *this;
  out.parts_.erase(out.parts_.begin() + (it - parts_.begin()));
  return out;
}

std::string Partition::to_string() const { return detail::join_ints(parts_); }

std::string BiPartition::to_string() const { return lambda.to_string() + "|" + mu.to_string(); }

std::string_view family_name(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::Dplus: return "D+";
    case Family::Dminus: return "D-";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "B") return Family::B;
  if (text == "C") return Family::C;
  if (text == "D+") return Family::Dplus;
  if (text == "D-") return Family::Dminus;
  throw ParseError("unknown family \"" + std::string(text) + "\" (expected B, C, D+ or D-)");
}

BiPartition parse_bipartition(std::string_view text) {
  const auto [left, right] = detail::split_rows(text);
  return BiPartition{Partition(detail::parse_nonnegative_list(left)),
                     Partition(detail::parse_nonnegative_list(right))};
}

int bipartition_size(const BiPartition& bp) { return bp.lambda.size() + bp.mu.size(); }

bool validate_class(const BiPartition& bp, Family family) {
  switch (family) {
    case Family::B:
    case Family::C: return true;
    case Family::Dplus: return bp.mu.length() % 2 == 0;
    case Family::Dminus: return bp.mu.length() % 2 == 1;
  }
  return false;
}

bool is_degenerate_class(const BiPartition& bp) {
  return bp.mu.empty() &&
         std::all_of(bp.lambda.parts().begin(), bp.lambda.parts().end(), [](int p) { return p % 2 == 0; });
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<BiPartition> enumerate_bipartitions(int n) {
  std::vector<BiPartition> out;
  for (int k = n; k >= 0; --k) {
    const auto lambdas = enumerate_partitions(k);
    const auto mus = enumerate_partitions(n - k);
    for (const auto& l : lambdas) {
      for (const auto& m : mus) out.push_back(BiPartition{l, m});
    }
  }
  return out;
}

}  // namespace unipmn
