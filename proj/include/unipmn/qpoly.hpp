#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unipmn/combinatorics.hpp"
#include "unipmn/symbols.hpp"

namespace unipmn {

/// Dense polynomial in one variable with arbitrary-precision integer
/// coefficients; coefficient i belongs to x^i. No trailing zeros are kept.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c);  // NOLINT(google-explicit-constructor): constants promote
  explicit IntPoly(std::vector<mpz_class> coefficients);

  static IntPoly monomial(const mpz_class& c, int degree);
  static IntPoly x_power(int degree) { return monomial(1, degree); }
  /// x^k - 1 (sign = -1) or x^k + 1 (sign = +1).
  static IntPoly binomial(int k, int sign);

  const std::vector<mpz_class>& coefficients() const { return c_; }
  mpz_class coefficient(int i) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const mpz_class& leading() const { return c_.back(); }
  /// Largest k with x^k dividing the polynomial (0 for the zero polynomial).
  int low_degree() const;

  mpz_class evaluate(const mpz_class& x) const;
  /// p(x^k).
  IntPoly substitute_power(int k) const;
  /// p(-x).
  IntPoly negate_variable() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  /// Divides every coefficient by k; InternalError if any division is inexact.
  IntPoly divide_exact(const mpz_class& k) const;

  /// Coefficients lowest degree first, e.g. "[1,0,-1]".
  std::string to_string() const;
  std::vector<std::string> coefficient_strings() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Euclidean division by a divisor whose leading coefficient is ±1.
PolyDivision divmod(const IntPoly& a, const IntPoly& b);
/// a / b, asserting a zero remainder (InternalError otherwise).
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

IntPoly pow(const IntPoly& p, int e);

/// The d-th cyclotomic polynomial Φ_d (memoized).
IntPoly cyclotomic(int d);

/// Gaussian binomial [n choose k]_x.
IntPoly quantum_binomial(int n, int k);

/// ([hd-1 choose d-1]_x - x^{(h-1)d(d-1)/2}) mod Φ_d(x)^2, for odd d >= 3, h >= 2.
IntPoly babbage_residue(int d, int h);

/// |T^F| = Π(q^λ_i - 1) Π(q^μ_j + 1).
IntPoly torus_order(const BiPartition& bp);

enum class GroupFamily : std::uint8_t {
  SLplus,     // SL_n(q)
  SLminus,    // SU_n(q)
  GLplus,     // GL_n(q)
  GLminus,    // GU_n(q)
  Sp,         // Sp_2n(q)
  SpSp2,      // Sp_{2n-2}(q) x Sp_2(q), rank n
  SpinOdd,    // Spin_{2n+1}(q)
  SpinPlus,   // Spin+_2n(q)
  SpinMinus,  // Spin-_2n(q)
  G2,
  F4,
  E6plus,
  E6minus,
  E7,
  E8,
  SU3,  // 2A2(q)
};

struct GroupSpec {
  GroupFamily family;
  int rank = 0;  // ignored for exceptional families
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

std::string group_name(const GroupSpec& g);
/// Parses names as printed by group_name's family part: "SL+", "SL-", "GL+",
/// "GL-", "Sp", "SpSp2", "Spin", "Spin+", "Spin-", "G2", "F4", "E6+", "E6-",
/// "E7", "E8", "2A2".
GroupFamily parse_group_family(std::string_view text);

/// Order polynomial q^N Π(q^{d_i} - ε_i) (same for every isogeny type).
IntPoly group_order(const GroupSpec& g);

/// Generic degree of the unipotent character labelled by a symbol. The
/// polynomial has coefficients in Z[1/2]; it is stored as `scaled / 2^halvings`.
struct UnipotentDegree {
  IntPoly scaled;
  int halvings = 0;
  /// Exact integer value at q (InternalError if not integral).
  mpz_class at(const mpz_class& q) const;
};

/// For a degenerate symbol returns the common degree of the two characters.
UnipotentDegree unipotent_degree(const Symbol& s);

/// Multiplicative order of q modulo ell; DomainError if ell | q or ell < 2.
int d_ell(long q, long ell);

/// ell-adic valuation; nullopt for zero (infinite valuation).
std::optional<int> valuation(const mpz_class& value, long ell);
/// Largest power of ell dividing value (value != 0).
mpz_class ell_part(const mpz_class& value, long ell);

struct DegreeCongruenceReport {
  int d = 0;
  mpz_class degree;
  std::optional<int> val_minus;  // val_ell(χ(1) - 1)
  std::optional<int> val_plus;   // val_ell(χ(1) + 1)
  mpz_class phi_d_ell_part;      // Φ_d(q)_ell
  bool congruent_pm1 = false;    // χ(1) ≡ ±1 mod Φ_d(q)_ell^2
};

DegreeCongruenceReport degree_congruence_check(const Symbol& s, long q, long ell);

}  // namespace unipmn
