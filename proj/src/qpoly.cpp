#include "unipmn/qpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "unipmn/errors.hpp"

namespace unipmn {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

IntPoly::IntPoly(std::vector<mpz_class> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
  if (degree < 0) throw ContractError("negative monomial degree");
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::binomial(int k, int sign) { return x_power(k) + IntPoly(sign); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

int IntPoly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return 0;
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::substitute_power(int k) const {
  if (k < 1) throw ContractError("substitute_power needs k >= 1");
  if (is_zero()) return {};
  std::vector<mpz_class> v(static_cast<std::size_t>(degree()) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::negate_variable() const {
  IntPoly out = *this;
  for (std::size_t i = 1; i < out.c_.size(); i += 2) out.c_[i] = -out.c_[i];
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<mpz_class> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0) v[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(v);
  trim();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

IntPoly IntPoly::divide_exact(const mpz_class& k) const {
  if (k == 0) throw ContractError("division by zero");
  IntPoly out = *this;
  for (auto& c : out.c_) {
    if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t())) {
      throw InternalError("coefficient " + c.get_str() + " not divisible by " + k.get_str());
    }
    c /= k;
  }
  return out;
}

std::vector<std::string> IntPoly::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.get_str());
  return out;
}

std::string IntPoly::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += c_[i].get_str();
  }
  return out + "]";
}

PolyDivision divmod(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ContractError("polynomial division by zero");
  const mpz_class lead = b.leading();
  if (lead != 1 && lead != -1) throw ContractError("divisor must have leading coefficient +-1");
  std::vector<mpz_class> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {IntPoly{}, a};
  std::vector<mpz_class> quo(static_cast<std::size_t>(da - db) + 1);
  const auto& bc = b.coefficients();
  for (int i = da; i >= db; --i) {
    const mpz_class c = rem[static_cast<std::size_t>(i)] * lead;  // lead is its own inverse
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * bc[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division, remainder " + r.to_string());
  return q;
}

IntPoly pow(const IntPoly& p, int e) {
  if (e < 0) throw ContractError("negative exponent");
  IntPoly result(1);
  IntPoly base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------- cyclotomics

IntPoly cyclotomic(int d) {
  if (d < 1) throw DomainError("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::binomial(d, -1);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = divide_exact(p, cyclotomic(e));
  }
  std::lock_guard lock(mutex);
  cache.emplace(d, p);
  return p;
}

IntPoly quantum_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("quantum_binomial needs 0 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  IntPoly num(1);
  IntPoly den(1);
  for (int i = 1; i <= k; ++i) {
    num *= IntPoly::binomial(n - i + 1, -1);
    den *= IntPoly::binomial(i, -1);
  }
  return divide_exact(num, den);
}

IntPoly babbage_residue(int d, int h) {
  if (d < 3 || d % 2 == 0) throw DomainError("babbage_residue needs odd d >= 3");
  if (h < 2) throw DomainError("babbage_residue needs h >= 2");
  const IntPoly lhs = quantum_binomial(h * d - 1, d - 1) - IntPoly::x_power((h - 1) * d * (d - 1) / 2);
  return divmod(lhs, pow(cyclotomic(d), 2)).remainder;
}

IntPoly torus_order(const BiPartition& bp) {
  IntPoly out(1);
  for (int l : bp.lambda.parts()) out *= IntPoly::binomial(l, -1);
  for (int m : bp.mu.parts()) out *= IntPoly::binomial(m, +1);
  return out;
}

// ---------------------------------------------------------------- group orders

namespace {

struct GroupFamilyName {
  GroupFamily family;
  std::string_view name;
};

constexpr GroupFamilyName kGroupFamilyNames[] = {
    {GroupFamily::SLplus, "SL+"},     {GroupFamily::SLminus, "SL-"},   {GroupFamily::GLplus, "GL+"},
    {GroupFamily::GLminus, "GL-"},    {GroupFamily::Sp, "Sp"},         {GroupFamily::SpSp2, "SpSp2"},
    {GroupFamily::SpinOdd, "Spin"},   {GroupFamily::SpinPlus, "Spin+"}, {GroupFamily::SpinMinus, "Spin-"},
    {GroupFamily::G2, "G2"},          {GroupFamily::F4, "F4"},         {GroupFamily::E6plus, "E6+"},
    {GroupFamily::E6minus, "E6-"},    {GroupFamily::E7, "E7"},         {GroupFamily::E8, "E8"},
    {GroupFamily::SU3, "2A2"},
};

bool is_exceptional(GroupFamily f) {
  switch (f) {
    case GroupFamily::G2:
    case GroupFamily::F4:
    case GroupFamily::E6plus:
    case GroupFamily::E6minus:
    case GroupFamily::E7:
    case GroupFamily::E8:
    case GroupFamily::SU3: return true;
    default: return false;
  }
}

// q^N Π (q^{d_i} - ε_i); factors given as signed degrees (+d: q^d - 1, -d: q^d + 1).
IntPoly order_from_degrees(int n_pos_roots, const std::vector<int>& signed_degrees) {
  IntPoly out = IntPoly::x_power(n_pos_roots);
  for (int d : signed_degrees) out *= d > 0 ? IntPoly::binomial(d, -1) : IntPoly::binomial(-d, +1);
  return out;
}

IntPoly linear_or_unitary(int n, bool unitary, bool general) {
  std::vector<int> degs;
  for (int i = general ? 1 : 2; i <= n; ++i) degs.push_back(unitary && i % 2 == 1 ? -i : i);
  return order_from_degrees(n * (n - 1) / 2, degs);
}

IntPoly symplectic(int n) {
  std::vector<int> degs;
  for (int i = 1; i <= n; ++i) degs.push_back(2 * i);
  return order_from_degrees(n * n, degs);
}

IntPoly even_orthogonal(int n, bool twisted) {
  std::vector<int> degs;
  for (int i = 1; i < n; ++i) degs.push_back(2 * i);
  degs.push_back(twisted ? -n : n);
  return order_from_degrees(n * (n - 1), degs);
}

}  // namespace

GroupFamily parse_group_family(std::string_view text) {
  for (const auto& [family, name] : kGroupFamilyNames) {
    if (name == text) return family;
  }
  throw ParseError("unknown group family \"" + std::string(text) + "\"");
}

std::string group_name(const GroupSpec& g) {
  std::string name;
  for (const auto& [family, n] : kGroupFamilyNames) {
    if (family == g.family) name = n;
  }
  if (is_exceptional(g.family)) return name;
  return name + "(" + std::to_string(g.rank) + ")";
}

IntPoly group_order(const GroupSpec& g) {
  const int n = g.rank;
  auto need = [&](int min_rank) {
    if (n < min_rank) throw DomainError("unsupported rank " + std::to_string(n) + " for " + group_name(g));
  };
  switch (g.family) {
    case GroupFamily::SLplus: need(2); return linear_or_unitary(n, false, false);
    case GroupFamily::SLminus: need(2); return linear_or_unitary(n, true, false);
    case GroupFamily::GLplus: need(1); return linear_or_unitary(n, false, true);
    case GroupFamily::GLminus: need(1); return linear_or_unitary(n, true, true);
    case GroupFamily::Sp:
    case GroupFamily::SpinOdd: need(1); return symplectic(n);
    case GroupFamily::SpSp2: need(2); return symplectic(n - 1) * symplectic(1);
    case GroupFamily::SpinPlus: need(2); return even_orthogonal(n, false);
    case GroupFamily::SpinMinus: need(2); return even_orthogonal(n, true);
    case GroupFamily::G2: return order_from_degrees(6, {2, 6});
    case GroupFamily::F4: return order_from_degrees(24, {2, 6, 8, 12});
    case GroupFamily::E6plus: return order_from_degrees(36, {2, 5, 6, 8, 9, 12});
    case GroupFamily::E6minus: return order_from_degrees(36, {2, -5, 6, 8, -9, 12});
    case GroupFamily::E7: return order_from_degrees(63, {2, 6, 8, 10, 12, 14, 18});
    case GroupFamily::E8: return order_from_degrees(120, {2, 8, 12, 14, 18, 20, 24, 30});
    case GroupFamily::SU3: return linear_or_unitary(3, true, false);
  }
  throw DomainError("unsupported group family");
}

// ---------------------------------------------------------------- degrees

mpz_class UnipotentDegree::at(const mpz_class& q) const {
  mpz_class v = scaled.evaluate(q);
  mpz_class div;
  mpz_ui_pow_ui(div.get_mpz_t(), 2, static_cast<unsigned long>(halvings));
  if (!mpz_divisible_p(v.get_mpz_t(), div.get_mpz_t())) {
    throw InternalError("unipotent degree not integral at q = " + q.get_str());
  }
  return v / div;
}

UnipotentDegree unipotent_degree(const Symbol& symbol) {
  const Symbol s = normalize(symbol);
  const int n = rank(s);
  if (n == 0) return UnipotentDegree{IntPoly(1), 0};
  const auto& xs = s.x();
  const auto& ys = s.y();
  const int entries = static_cast<int>(xs.size() + ys.size());
  const SymbolKind k = kind(s);

  IntPoly num(1);
  IntPoly den(1);
  int halvings = 0;
  if (k.tag == SymbolTag::BC) {
    for (int i = 1; i <= n; ++i) num *= IntPoly::binomial(2 * i, -1);
    halvings = (entries - 1) / 2;
  } else {
    num *= IntPoly::binomial(n, k.tag == SymbolTag::DPlus ? -1 : +1);
    for (int i = 1; i < n; ++i) num *= IntPoly::binomial(2 * i, -1);
    halvings = k.degenerate ? entries / 2 : (entries - 2) / 2;
  }
  auto vandermonde = [&num](const std::vector<int>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      for (std::size_t j = i + 1; j < row.size(); ++j) {
        num *= IntPoly::x_power(row[j]) - IntPoly::x_power(row[i]);
      }
    }
  };
  vandermonde(xs);
  vandermonde(ys);
  for (int x : xs) {
    for (int y : ys) num *= IntPoly::x_power(x) + IntPoly::x_power(y);
  }
  for (const auto* row : {&xs, &ys}) {
    for (int v : *row) {
      for (int i = 1; i <= v; ++i) den *= IntPoly::binomial(2 * i, -1);
    }
  }
  int q_shift = 0;
  for (int m = entries - 2; m >= 2; m -= 2) q_shift += m * (m - 1) / 2;

  IntPoly quotient = divide_exact(num, den);
  if (quotient.low_degree() < q_shift) throw InternalError("degree polynomial not divisible by q^" + std::to_string(q_shift));
  std::vector<mpz_class> shifted(quotient.coefficients().begin() + q_shift, quotient.coefficients().end());
  IntPoly scaled(std::move(shifted));
  // Keep the representation reduced: strip common factors of 2.
  while (halvings > 0 && std::all_of(scaled.coefficients().begin(), scaled.coefficients().end(),
                                     [](const mpz_class& c) { return mpz_even_p(c.get_mpz_t()) != 0; })) {
    scaled = scaled.divide_exact(2);
    --halvings;
  }
  return UnipotentDegree{std::move(scaled), halvings};
}

// ---------------------------------------------------------------- ell-adic

namespace {

bool is_prime(long v) {
  if (v < 2) return false;
  for (long p = 2; p * p <= v; ++p) {
    if (v % p == 0) return false;
  }
  return true;
}

}  // namespace

int d_ell(long q, long ell) {
  if (q < 2) throw DomainError("q must be at least 2");
  if (!is_prime(ell)) throw DomainError(std::to_string(ell) + " is not a prime");
  if (q % ell == 0) throw DomainError(std::to_string(ell) + " divides q = " + std::to_string(q));
  const long base = q % ell;
  long acc = base;
  int d = 1;
  while (acc != 1) {
    acc = (acc * base) % ell;
    ++d;
  }
  return d;
}

std::optional<int> valuation(const mpz_class& value, long ell) {
  if (value == 0) return std::nullopt;
  mpz_class v = abs(value);
  int k = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(ell))) {
    v /= ell;
    ++k;
  }
  return k;
}

mpz_class ell_part(const mpz_class& value, long ell) {
  const auto k = valuation(value, ell);
  if (!k) throw DomainError("ell_part of zero");
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(ell), static_cast<unsigned long>(*k));
  return out;
}

DegreeCongruenceReport degree_congruence_check(const Symbol& s, long q, long ell) {
  if (ell == 2) throw DomainError("degree_congruence_check needs an odd prime");
  DegreeCongruenceReport r;
  r.d = d_ell(q, ell);
  r.degree = unipotent_degree(s).at(q);
  r.val_minus = valuation(r.degree - 1, ell);
  r.val_plus = valuation(r.degree + 1, ell);
  r.phi_d_ell_part = ell_part(cyclotomic(r.d).evaluate(q), ell);
  const mpz_class modulus = r.phi_d_ell_part * r.phi_d_ell_part;
  const auto divides = [&modulus](const mpz_class& v) { return mpz_divisible_p(v.get_mpz_t(), modulus.get_mpz_t()) != 0; };
  r.congruent_pm1 = divides(r.degree - 1) || divides(r.degree + 1);
  return r;
}

}  // namespace unipmn
