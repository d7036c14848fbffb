#include "unipmn/tori.hpp"

#include <algorithm>
#include <numeric>

#include "unipmn/errors.hpp"
#include "unipmn/qpoly.hpp"

namespace unipmn {

std::vector<BiPartition> enumerate_torus_types(Family family, int n) {
  if (n < 1) throw DomainError("torus enumeration needs n >= 1");
  std::vector<BiPartition> out;
  for (auto& bp : enumerate_bipartitions(n)) {
    if (validate_class(bp, family)) out.push_back(std::move(bp));
  }
  return out;
}

RegularGuarantee regular_guarantee(Family family, long q, const BiPartition& bp) {
  if (q < 2) throw DomainError("q must be at least 2");
  const bool distinct = bp.lambda.distinct_parts() && bp.mu.distinct_parts();
  const auto& lam = bp.lambda.parts();
  const auto has = [&lam](int v) { return std::find(lam.begin(), lam.end(), v) != lam.end(); };
  if (q > 3 && distinct) return {RegularGuarantee::Tag::Guaranteed, 1};
  if ((q == 2 || q == 3) && distinct && !has(2) && (is_d_side(family) || !has(1))) {
    return {RegularGuarantee::Tag::Guaranteed, 2};
  }
  if (is_d_side(family) && bp.lambda.distinct_parts() && (lam.empty() || lam.back() > 2) &&
      bp.mu.multiplicity(1) == 2) {
    const Partition rest = bp.mu.without(1).without(1);
    const bool rest_ok = rest.distinct_parts() && (rest.empty() || rest.parts().back() > 1);
    if (rest_ok) return {RegularGuarantee::Tag::Guaranteed, 3};
  }
  return {};
}

bool is_ell_singular(const BiPartition& bp, long q, long ell) {
  if (ell == 2) throw DomainError("is_ell_singular needs an odd prime");
  const int d = d_ell(q, ell);
  const auto& lam = bp.lambda.parts();
  const auto& mu = bp.mu.parts();
  if (d % 2 == 1) return std::any_of(lam.begin(), lam.end(), [d](int p) { return p % d == 0; });
  const int e = d / 2;
  return std::any_of(mu.begin(), mu.end(), [e](int p) { return p % e == 0 && (p / e) % 2 == 1; }) ||
         std::any_of(lam.begin(), lam.end(), [d](int p) { return p % d == 0; });
}

namespace {

// reach[k] bit p: some sub-multiset of the parts has size k and its μ-part
// count has parity p.
std::vector<unsigned> split_states(const BiPartition& bp, int n) {
  std::vector<unsigned> reach(static_cast<std::size_t>(n) + 1, 0);
  reach[0] = 1u;
  auto add = [&](int part, bool is_mu) {
    std::vector<unsigned> next = reach;
    for (int k = 0; k + part <= n; ++k) {
      for (unsigned p = 0; p < 2; ++p) {
        if (reach[static_cast<std::size_t>(k)] & (1u << p)) {
          next[static_cast<std::size_t>(k + part)] |= 1u << (is_mu ? 1 - p : p);
        }
      }
    }
    reach = std::move(next);
  };
  for (int l : bp.lambda.parts()) add(l, false);
  for (int m : bp.mu.parts()) add(m, true);
  return reach;
}

void check_members(const std::vector<BiPartition>& types, Family family, int n) {
  if (types.empty()) throw ContractError("maxred_check needs at least one torus type");
  for (const auto& bp : types) {
    if (bipartition_size(bp) != n) throw ContractError("torus type (" + bp.to_string() + ") is not of size n");
    if (!validate_class(bp, family)) {
      throw ContractError("torus type (" + bp.to_string() + ") invalid for family " + std::string(family_name(family)));
    }
  }
}

int parts_gcd(const std::vector<BiPartition>& types) {
  int g = 0;
  for (const auto& bp : types) {
    for (int p : bp.lambda.parts()) g = std::gcd(g, p);
    for (int p : bp.mu.parts()) g = std::gcd(g, p);
  }
  return g;
}

bool parity_condition(const std::vector<BiPartition>& types, Family family) {
  if (family != Family::B) return true;
  bool odd = false;
  bool even = false;
  for (const auto& bp : types) (bp.mu.length() % 2 ? odd : even) = true;
  return odd && even;
}

}  // namespace

MaxredResult maxred_details(const std::vector<BiPartition>& types, Family family, int n) {
  check_members(types, family, n);
  MaxredResult res;
  std::vector<unsigned> common(static_cast<std::size_t>(n) + 1, 3u);
  for (const auto& bp : types) {
    const auto st = split_states(bp, n);
    for (int k = 0; k <= n; ++k) common[static_cast<std::size_t>(k)] &= st[static_cast<std::size_t>(k)] ? 3u : 0u;
  }
  for (int k = 1; k <= n - 1; ++k) {
    if (common[static_cast<std::size_t>(k)]) {
      res.split_k = k;
      break;
    }
  }
  res.gcd = parts_gcd(types);
  res.parity_ok = parity_condition(types, family);
  res.passed = !res.split_k && res.gcd == 1 && res.parity_ok;
  return res;
}

bool maxred_check(const std::vector<BiPartition>& types, Family family, int n) {
  return maxred_details(types, family, n).passed;
}

bool maxred_check_rational(const std::vector<BiPartition>& types, Family family, int n) {
  if (!is_d_side(family)) return maxred_check(types, family, n);
  check_members(types, family, n);
  std::vector<unsigned> common(static_cast<std::size_t>(n) + 1, 3u);
  for (const auto& bp : types) {
    const auto st = split_states(bp, n);
    for (int k = 0; k <= n; ++k) common[static_cast<std::size_t>(k)] &= st[static_cast<std::size_t>(k)];
  }
  for (int k = 1; k <= n - 1; ++k) {
    if (common[static_cast<std::size_t>(k)]) return false;
  }
  return parts_gcd(types) == 1 && parity_condition(types, family);
}

// ---------------------------------------------------------------- table

namespace {

BiPartition bp(std::vector<int> l, std::vector<int> m) { return BiPartition{Partition(std::move(l)), Partition(std::move(m))}; }

}  // namespace

std::optional<TorusTableRow> torus_table_row(Family family, int n, int d) {
  if (d < 1 || n < 1) return std::nullopt;
  TorusTableRow row;
  row.family = family == Family::C ? Family::B : family;
  row.n = n;
  row.d = d;
  const bool odd_d = d % 2 == 1;
  const int e = d / 2;
  const int unit = odd_d ? d : e;
  row.a = n / unit;
  row.r = n % unit;
  const int a = row.a;
  const int r = row.r;
  if (a < 2) return std::nullopt;
  auto& t = row.tori;
  const std::string ds = odd_d ? "d odd" : "d=2e";
  const std::string as = odd_d ? "" : (a % 2 == 0 ? " a even" : " a odd");
  const std::string rs = r == 0 ? " r=0" : " r>0";

  switch (family) {
    case Family::B:
    case Family::C:
      row.label = "BC " + ds + as + rs;
      if (odd_d && r == 0) {
        t = {bp({n}, {}), bp({n - d}, {d})};
        if (d > 1) t.push_back(bp({n - d}, {1, d - 1}));
      } else if (odd_d) {
        t = {bp({n - r}, {r}), bp({n - r - d}, {d + r}), bp({n - r - d}, {d + r - 1, 1})};
      } else if (a % 2 == 0 && r == 0) {
        t = {bp({n}, {}), bp({n - e}, {e})};
        if (e > 1) t.push_back(bp({}, {n - e - 1, e, 1}));
      } else if (a % 2 == 0) {
        t = {bp({n - r}, {r}), bp({}, {n - e, e})};
        if (r != 1) t.push_back(bp({}, {n - e - 1, e, 1}));
      } else if (r == 0) {
        t = {bp({}, {n}), bp({}, {n - e, e})};
        if (e > 1) t.push_back(bp({n - e - 1}, {e, 1}));
      } else {
        t = {bp({}, {n - r, r}), bp({n - r - e}, {r + e}), bp({n - r - e}, {r + e - 1, 1})};
      }
      break;
    case Family::Dplus:
      if (n < 4) return std::nullopt;
      row.label = "D " + ds + as + rs;
      if (odd_d && r == 0) {
        t = {bp({n}, {})};
        t.push_back(d == 1 ? bp({n - 1, 1}, {}) : bp({n - d}, {d - 1, 1}));
      } else if (odd_d) {
        t = {bp({n - d - r, d + r}, {})};
        t.push_back(r != 2 ? bp({n - r, r}, {}) : bp({n - 2}, {1, 1}));
      } else if (a % 2 == 0 && r == 0) {
        t = {bp({n}, {})};
        const bool special = (n == 4 && e == 1) || (n == 6 && e == 3);
        t.push_back(special ? bp({n - e - 2}, {e, 2}) : bp({n - e - 1}, {e, 1}));
      } else if (a % 2 == 0) {
        t = {bp({}, {n - e, e})};
        t.push_back(r == 1 ? bp({n - 1, 1}, {}) : bp({n - r}, {r - 1, 1}));
      } else if (r == 0) {
        row.starred = true;
        t = {bp({}, {n - e, e}), bp({}, {n - 2 * e, 2 * e})};
        if (e > 1) t.push_back(bp({1}, {n - 2 * e, 2 * e - 1}));
        if (n == 3 * e) t.push_back(bp({2 * e}, {e - 1, 1}));
      } else {
        t = {bp({}, {n - r, r}), bp({}, {n - e, e})};
        if (r > 1) t.push_back(bp({1}, {n - r, r - 1}));
      }
      break;
    case Family::Dminus:
      if (n < 4) return std::nullopt;
      // twisted groups need Φ_d twice beyond the first factor
      if (n <= 2 * unit) return std::nullopt;
      row.label = "2D " + ds + as + rs;
      if (odd_d && r == 0) {
        row.starred = true;
        t = {bp({n - d}, {d}), bp({d}, {n - d})};
        if (d > 1) t.push_back(bp({n - d - 1, d}, {1}));
      } else if (odd_d) {
        t = {bp({n - r}, {r}), bp({n - d - r}, {d + r}), bp({n - d - r, 1}, {d + r - 1})};
      } else if (a % 2 == 0 && r == 0) {
        t = {bp({n - e}, {e}), bp({n - 2 * e}, {2 * e})};
        if (e > 1) t.push_back(bp({n - 2 * e, 2 * e - 1}, {1}));
      } else if (a % 2 == 0) {
        t = {bp({n - r}, {r}), bp({n - e}, {e})};
        if (r > 1) t.push_back(bp({n - r, 1}, {r - 1}));
      } else if (r == 0) {
        t = {bp({}, {n}), bp({n - e}, {e})};
        if (e > 1) t.push_back(bp({n - e, 1}, {e - 1}));
      } else {
        t = {bp({n - e - r}, {e + r})};
        t.push_back(r > 1 ? bp({}, {n - r, r - 1, 1}) : bp({1}, {n - 1}));
      }
      break;
  }
  for (const auto& x : t) {
    if (bipartition_size(x) != n) throw InternalError("table torus (" + x.to_string() + ") has wrong size");
  }
  return row;
}

}  // namespace unipmn
