#include "unipmn/scans.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "unipmn/errors.hpp"
#include "unipmn/tori.hpp"

namespace unipmn {

std::vector<int> initial_segment(int k) {
  std::vector<int> out;
  for (int i = 0; i <= k; ++i) out.push_back(i);
  return out;
}

namespace {

std::vector<int> without(std::vector<int> row, int v) {
  std::erase(row, v);
  return row;
}

std::vector<int> with(std::vector<int> row, int v) {
  if (std::find(row.begin(), row.end(), v) == row.end()) row.push_back(v);
  std::sort(row.begin(), row.end());
  return row;
}

bool odd_case(int case_id) { return case_id % 2 == 1; }

void check_case(int case_id, int de, int r) {
  if (case_id < 1 || case_id > 6) throw DomainError("case must be 1..6");
  if (de < 1) throw DomainError("d (or e) must be positive");
  bool ok = false;
  switch (case_id) {
    case 1:
    case 3: ok = r >= 0 && r < de; break;
    case 2: ok = r >= 0 && r < de; break;
    case 4: ok = r >= 0 && r <= de; break;
    case 5: ok = r > 0 && r <= de; break;
    case 6: ok = r > 0 && r < de; break;
    default: break;
  }
  if (!ok) {
    throw DomainError("r = " + std::to_string(r) + " outside the range of case " + std::to_string(case_id) +
                      " for " + (odd_case(case_id) ? "d = " : "e = ") + std::to_string(de));
  }
}

SymbolTag tag_of(Family f) {
  switch (f) {
    case Family::B:
    case Family::C: return SymbolTag::BC;
    case Family::Dplus: return SymbolTag::DPlus;
    case Family::Dminus: return SymbolTag::DMinus;
  }
  return SymbolTag::BC;
}

// Closed form of the dual symbol listed for each case.
Symbol listed_dual(int case_id, int de, int r) {
  const int m = de + r;
  switch (case_id) {
    case 1: return normalize(Symbol(initial_segment(m), with(without(without(initial_segment(m), 0), de), 2 * de)));
    case 2: return normalize(Symbol(with(without(initial_segment(m), 0), 2 * de), without(initial_segment(m), de)));
    case 3:
      return normalize(Symbol(initial_segment(m - 1), with(without(without(initial_segment(m), 0), de), 2 * de)));
    case 4:
      return normalize(Symbol(with(without(initial_segment(m - 1), 0), 2 * de), without(initial_segment(m), de)));
    case 5:
      return normalize(Symbol(initial_segment(m), with(without(without(initial_segment(m - 1), 0), de), 2 * de)));
    case 6:
      return normalize(Symbol(with(without(initial_segment(m), 0), 2 * de), without(initial_segment(m - 1), de)));
    default: break;
  }
  throw DomainError("case must be 1..6");
}

BiPartition bip(std::vector<int> l, std::vector<int> m) { return BiPartition{Partition(std::move(l)), Partition(std::move(m))}; }

std::pair<BiPartition, BiPartition> case_tori(int case_id, int de, int r) {
  switch (case_id) {
    case 1:
    case 5: return {bip({de}, {de + r}), bip({2 * de}, {r})};
    case 2: return {bip({2 * de}, {r}), bip({de + r}, {de})};
    case 6: return {bip({de + r}, {de}), bip({2 * de}, {r})};
    case 3: {
      BiPartition a = r == 0 ? bip({de, de - 2}, {1, 1}) : bip({de, de + r}, {});
      BiPartition b = r == 2 ? bip({2 * de}, {1, 1}) : bip({2 * de, r}, {});
      return {a, b};
    }
    case 4: {
      if (r == 0) {
        BiPartition b = de == 3 ? bip({1}, {3, 2}) : bip({de - 1}, {de, 1});
        return {bip({2 * de}, {}), b};
      }
      BiPartition b = r == 2 ? bip({2 * de}, {1, 1}) : bip({2 * de, r}, {});
      return {bip({}, {de + r, de}), b};
    }
    default: break;
  }
  throw DomainError("case must be 1..6");
}

}  // namespace

Family exception_case_family(int case_id) {
  if (case_id < 1 || case_id > 6) throw DomainError("case must be 1..6");
  if (case_id <= 2) return Family::C;
  return case_id <= 4 ? Family::Dplus : Family::Dminus;
}

int exception_case_rank(int case_id, int d_or_e, int r) {
  check_case(case_id, d_or_e, r);
  return 2 * d_or_e + r;
}

Symbol exception_case_symbol(int case_id, int de, int r) {
  check_case(case_id, de, r);
  std::vector<int> x;
  std::vector<int> y;
  switch (case_id) {
    case 1:
      x = with(with(without(initial_segment(de - r - 1), 0), de), 2 * de);
      y = initial_segment(de - r - 1);
      break;
    case 2:
      x = with(initial_segment(de - r - 1), de);
      y = with(without(initial_segment(de - r - 1), 0), 2 * de);
      break;
    case 3:
      x = with(with(without(initial_segment(de - r - 1), 0), de), 2 * de);
      y = initial_segment(de - r);
      break;
    case 4:
      x = with(initial_segment(de - r - 1), de);
      y = with(without(initial_segment(de - r), 0), 2 * de);
      break;
    case 5:
      x = with(with(without(initial_segment(de - r), 0), de), 2 * de);
      y = initial_segment(de - r - 1);
      break;
    case 6:
      x = with(initial_segment(de - r), de);
      y = with(without(initial_segment(de - r - 1), 0), 2 * de);
      break;
    default: break;
  }
  const Symbol s = normalize(Symbol(std::move(x), std::move(y)));
  const int n = 2 * de + r;
  if (rank(s) != n || kind(s).tag != tag_of(exception_case_family(case_id))) {
    throw InternalError("case " + std::to_string(case_id) + " produced " + s.to_string() + " of rank " +
                        std::to_string(rank(s)));
  }
  return s;
}

std::vector<Symbol> predicted_exceptions(Family family, int n, int d, std::optional<long> q) {
  if (n < 1 || d < 1) throw DomainError("predicted_exceptions needs n >= 1 and d >= 1");
  std::vector<Symbol> base;
  const bool odd_d = d % 2 == 1;
  const int de = odd_d ? d : d / 2;
  const int r = n - 2 * de;
  const int case_id = [&] {
    switch (family) {
      case Family::B:
      case Family::C: return odd_d ? 1 : 2;
      case Family::Dplus: return odd_d ? 3 : 4;
      case Family::Dminus: return odd_d ? 5 : 6;
    }
    return 0;
  }();
  try {
    base.push_back(exception_case_symbol(case_id, de, r));
  } catch (const DomainError&) {
    // outside the case's range
  }
  if (q && *q == 2) {
    const bool bc = family == Family::B || family == Family::C;
    if (bc && n == 2 && d == 2) {
      base.push_back(parse_symbol("0,1,2|"));
      base.push_back(parse_symbol("0,2|1"));
    } else if (bc && n == 3 && d == 2) {
      base.push_back(parse_symbol("0,1,3|"));
    } else if (bc && n == 4 && d == 4) {
      base.push_back(parse_symbol("0,1|4"));
      base.push_back(parse_symbol("1,4|0"));
    } else if (family == Family::Dminus && n == 4 && (d == 2 || d == 4)) {
      base.push_back(parse_symbol("1,3|"));
    }
  }
  if (base.empty()) return {};
  std::vector<Symbol> out;
  for (const auto& s : base) {
    out.push_back(normalize(s));
    out.push_back(dual(s));
  }
  out.push_back(trivial_symbol(n, tag_of(family)));
  out.push_back(steinberg_symbol(n, tag_of(family)));
  std::sort(out.begin(), out.end(), [](const Symbol& a, const Symbol& b) { return a.to_string() < b.to_string(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<const SymbolScan*> ScanReport::nonvanishing() const {
  std::vector<const SymbolScan*> out;
  for (const auto& s : symbols) {
    if (!s.zero_at) out.push_back(&s);
  }
  return out;
}

ScanReport scan_nonvanishing(Family family, int n, long q, long ell, unsigned threads, Engine& engine) {
  if (ell == 2) throw DomainError("scan needs an odd prime ell");
  ScanReport rep;
  rep.family = family;
  rep.n = n;
  rep.q = q;
  rep.ell = ell;
  rep.d = d_ell(q, ell);
  for (auto& bp : enumerate_torus_types(family, n)) {
    if (!is_ell_singular(bp, q, ell)) continue;
    if (regular_guarantee(family, q, bp).guaranteed()) {
      rep.classes.push_back(std::move(bp));
    } else {
      rep.skipped_classes.push_back(std::move(bp));
    }
  }
  auto syms = enumerate_symbols(n, tag_of(family));
  std::sort(syms.begin(), syms.end(), [](const Symbol& a, const Symbol& b) { return a.to_string() < b.to_string(); });
  rep.symbols.resize(syms.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < syms.size(); i = next++) {
        SymbolScan& out = rep.symbols[i];
        out.symbol = syms[i];
        out.degenerate = kind(syms[i]).degenerate;
        out.values.reserve(rep.classes.size());
        for (std::size_t c = 0; c < rep.classes.size(); ++c) {
          const std::int64_t v = engine.value(syms[i], rep.classes[c], family).value;
          out.values.push_back(v);
          if (v == 0 && !out.zero_at) out.zero_at = c;
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  unsigned nthreads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = static_cast<unsigned>(std::min<std::size_t>(nthreads, std::max<std::size_t>(1, syms.size())));
  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  rep.predicted = predicted_exceptions(family, n, rep.d, q);
  for (const auto& p : rep.predicted) {
    auto it = std::find_if(rep.symbols.begin(), rep.symbols.end(), [&p](const SymbolScan& s) { return s.symbol == p; });
    if (it == rep.symbols.end() || it->zero_at) rep.predicted_missing.push_back(p);
  }
  return rep;
}

std::vector<int> cartan_legal_r(int case_id, int de) {
  std::vector<int> out;
  for (int r = 0; r <= de; ++r) {
    try {
      const int n = exception_case_rank(case_id, de, r);
      if (case_id >= 3 && n < 4) continue;
      if (n < 2) continue;
      out.push_back(r);
    } catch (const DomainError&) {
    }
  }
  return out;
}

CartanReport cartan_sign_pairs(int case_id, int de, int r, Engine& engine) {
  CartanReport rep;
  rep.case_id = case_id;
  rep.d_or_e = de;
  rep.r = r;
  rep.n = exception_case_rank(case_id, de, r);
  rep.family = exception_case_family(case_id);
  if (rep.n < (case_id >= 3 ? 4 : 2)) {
    throw DomainError("group rank " + std::to_string(rep.n) + " too small for case " + std::to_string(case_id));
  }
  const auto [t1, t2] = case_tori(case_id, de, r);
  rep.torus1 = t1;
  rep.torus2 = t2;
  const Symbol s = exception_case_symbol(case_id, de, r);
  const Symbol sd = dual(s);
  rep.listed_dual = listed_dual(case_id, de, r);
  rep.dual_matches = rep.listed_dual == sd;
  for (auto [check, sym] : {std::pair{&rep.character, s}, std::pair{&rep.dual, sd}}) {
    check->symbol = sym;
    check->v1 = engine.value(sym, t1, rep.family).value;
    check->v2 = engine.value(sym, t2, rep.family).value;
  }
  return rep;
}

// ---------------------------------------------------------------- corrigendum

GroupSpec corrigendum_partner(const GroupSpec& g) {
  const int n = g.rank;
  auto need = [&](bool ok) {
    if (!ok) throw DomainError(group_name(g) + " is not a row of the table of large subgroups");
  };
  switch (g.family) {
    case GroupFamily::SLplus:
    case GroupFamily::SLminus:
      need(n >= 4);
      if (n == 4) return {GroupFamily::Sp, 2};
      return {g.family == GroupFamily::SLplus ? GroupFamily::GLplus : GroupFamily::GLminus, n - 1};
    case GroupFamily::SpinOdd: need(n >= 2); return {GroupFamily::SpinMinus, n};
    case GroupFamily::Sp: need(n >= 3); return {GroupFamily::SpSp2, n};
    case GroupFamily::SpinPlus:
    case GroupFamily::SpinMinus: need(n >= 4); return {GroupFamily::SpinOdd, n - 1};
    case GroupFamily::G2: return {GroupFamily::SU3, 2};
    case GroupFamily::F4: return {GroupFamily::SpinOdd, 4};
    case GroupFamily::E6plus:
    case GroupFamily::E6minus: return {GroupFamily::F4, 4};
    case GroupFamily::E7: return {GroupFamily::E6plus, 6};
    case GroupFamily::E8: return {GroupFamily::E7, 7};
    default: need(false);
  }
  throw DomainError("unreachable");
}

namespace {

bool same_group(const GroupSpec& a, const GroupSpec& b) {
  if (a.family != b.family) return false;
  switch (a.family) {
    case GroupFamily::G2:
    case GroupFamily::F4:
    case GroupFamily::E6plus:
    case GroupFamily::E6minus:
    case GroupFamily::E7:
    case GroupFamily::E8:
    case GroupFamily::SU3: return true;
    default: return a.rank == b.rank;
  }
}

IntPoly index_polynomial(const GroupSpec& g, const GroupSpec& h) { return divide_exact(group_order(g), group_order(h)); }

bool is_prime_long(long v) {
  if (v < 2) return false;
  for (long k = 2; k * k <= v; ++k) {
    if (v % k == 0) return false;
  }
  return true;
}

}  // namespace

CorrigendumReport corrigendum_check(const GroupSpec& g, const GroupSpec& h, long q, long p) {
  const GroupSpec partner = corrigendum_partner(g);
  if (!same_group(partner, h)) {
    throw DomainError(group_name(h) + " is not the subgroup paired with " + group_name(g) + " (expected " +
                      group_name(partner) + ")");
  }
  if (!is_prime_long(p)) throw DomainError(std::to_string(p) + " is not a prime");
  long rest = q;
  while (rest > 1 && rest % p == 0) rest /= p;
  if (q < 2 || rest != 1) throw DomainError("q = " + std::to_string(q) + " is not a power of p = " + std::to_string(p));
  CorrigendumReport rep;
  rep.g = g;
  rep.h = partner;
  rep.q = q;
  rep.p = p;
  rep.index_poly = index_polynomial(g, partner);
  rep.index = rep.index_poly.evaluate(q);
  const int big_n = group_order(g).low_degree();
  mpz_ui_pow_ui(rep.g_p_part.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(big_n));
  rep.p_divides = mpz_divisible_ui_p(rep.index.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
  rep.below_p_part = rep.index < rep.g_p_part;
  return rep;
}

CorrigendumSymbolic corrigendum_symbolic(const GroupSpec& g, int first_q, int last_q) {
  CorrigendumSymbolic rep;
  rep.g = g;
  rep.h = corrigendum_partner(g);
  rep.index_poly = index_polynomial(g, rep.h);
  rep.first_q = first_q;
  rep.last_q = last_q;
  rep.zero_constant_term = rep.index_poly.coefficient(0) == 0;
  const int big_n = group_order(g).low_degree();
  rep.below_everywhere = true;
  for (int q = first_q; q <= last_q; ++q) {
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(big_n));
    if (!(rep.index_poly.evaluate(q) < bound)) rep.below_everywhere = false;
  }
  return rep;
}

std::vector<GroupSpec> corrigendum_table(int rank) {
  std::vector<GroupSpec> out = {
      {GroupFamily::SLplus, 4},
      {GroupFamily::SLminus, 4},
      {GroupFamily::SLplus, std::max(5, rank)},
      {GroupFamily::SLminus, std::max(5, rank)},
      {GroupFamily::SpinOdd, std::max(2, rank)},
      {GroupFamily::Sp, std::max(3, rank)},
      {GroupFamily::SpinPlus, std::max(4, rank)},
      {GroupFamily::SpinMinus, std::max(4, rank)},
      {GroupFamily::G2, 2},
      {GroupFamily::F4, 4},
      {GroupFamily::E6plus, 6},
      {GroupFamily::E6minus, 6},
      {GroupFamily::E7, 7},
      {GroupFamily::E8, 8},
  };
  return out;
}

}  // namespace unipmn
