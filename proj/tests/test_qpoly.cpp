#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "unipmn/errors.hpp"
#include "unipmn/qpoly.hpp"

using namespace unipmn;

TEST_CASE("polynomial arithmetic") {
  const IntPoly a = IntPoly::binomial(3, -1);  // x^3 - 1
  const IntPoly b = IntPoly::binomial(1, -1);  // x - 1
  const auto qr = divmod(a, b);
  CHECK(qr.remainder.is_zero());
  CHECK(qr.quotient.to_string() == "[1,1,1]");
  CHECK(divmod(IntPoly::x_power(2), b).remainder == IntPoly(1));
  CHECK(a.evaluate(2) == 7);
  CHECK(b.negate_variable().to_string() == "[-1,-1]");
  CHECK(b.substitute_power(2) == IntPoly::binomial(2, -1));
  CHECK(IntPoly::x_power(3).low_degree() == 3);
  CHECK_THROWS_AS(divide_exact(IntPoly::x_power(2), b), InternalError);
}

TEST_CASE("cyclotomic polynomials multiply to x^n - 1") {
  for (int n = 1; n <= 40; ++n) {
    IntPoly prod(1);
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) prod *= cyclotomic(d);
    }
    CHECK(prod == IntPoly::binomial(n, -1));
  }
  CHECK(cyclotomic(6).to_string() == "[1,-1,1]");
}

TEST_CASE("Gaussian binomials agree with the q-Pascal rule") {
  for (int n = 0; n <= 14; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(quantum_binomial(n, k) == oracle::q_binomial_pascal(n, k));
  }
}

TEST_CASE("Babbage residues vanish") {
  for (int d : {3, 5, 7, 9}) {
    for (int h : {2, 3, 4}) CHECK(babbage_residue(d, h).is_zero());
  }
  CHECK_THROWS_AS(babbage_residue(4, 2), DomainError);
  CHECK_THROWS_AS(babbage_residue(3, 1), DomainError);
}

TEST_CASE("torus orders") {
  CHECK(torus_order(parse_bipartition("2|1")).evaluate(2) == 9);
  CHECK(torus_order(parse_bipartition("|")).evaluate(5) == 1);
}

TEST_CASE("group orders") {
  CHECK(group_order({GroupFamily::Sp, 2}).evaluate(2) == 720);
  CHECK(group_order({GroupFamily::Sp, 3}).evaluate(2) == 1451520);
  CHECK(group_order({GroupFamily::SLplus, 2}).evaluate(3) == 24);
  CHECK(group_order({GroupFamily::SLminus, 3}).evaluate(2) == 216);
  CHECK(group_order({GroupFamily::G2, 0}).evaluate(2) == 12096);
  CHECK(group_order({GroupFamily::SpinMinus, 4}).evaluate(2) == mpz_class("197406720"));
  CHECK(group_name({GroupFamily::Sp, 3}) == "Sp(3)");
  CHECK(parse_group_family("E6-") == GroupFamily::E6minus);
  CHECK_THROWS_AS(parse_group_family("H4"), ParseError);
}

TEST_CASE("unipotent degrees") {
  CHECK(unipotent_degree(parse_symbol("0,1|4")).at(2) == 51);
  CHECK(unipotent_degree(parse_symbol("1,4|0")).at(2) == 119);
  CHECK(unipotent_degree(dual(parse_symbol("0,1|4"))).at(2) == 13056);
  for (int n = 1; n <= 6; ++n) {
    CHECK(unipotent_degree(trivial_symbol(n, SymbolTag::BC)).at(3) == 1);
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), 3, static_cast<unsigned long>(n * n));
    CHECK(unipotent_degree(steinberg_symbol(n, SymbolTag::BC)).at(3) == qn);
  }
  CHECK(unipotent_degree(parse_symbol("|")).at(2) == 1);
}

TEST_CASE("degree anchors at q = 2") {
  std::vector<mpz_class> degs;
  for (const auto& s : enumerate_symbols(4, SymbolTag::BC)) degs.push_back(unipotent_degree(s).at(2));
  CHECK(std::find(degs.begin(), degs.end(), mpz_class(51)) != degs.end());
  CHECK(std::find(degs.begin(), degs.end(), mpz_class(13056)) != degs.end());
  CHECK(std::find(degs.begin(), degs.end(), mpz_class(119)) != degs.end());
  CHECK(std::find(degs.begin(), degs.end(), mpz_class(30464)) != degs.end());
}

TEST_CASE("degrees divide the group order") {
  for (int n = 1; n <= 5; ++n) {
    const mpz_class order = group_order({GroupFamily::Sp, n}).evaluate(3);
    for (const auto& s : enumerate_symbols(n, SymbolTag::BC)) {
      const mpz_class deg = unipotent_degree(s).at(3);
      CHECK(deg > 0);
      CHECK(order % deg == 0);
    }
  }
  for (int n = 2; n <= 5; ++n) {
    for (SymbolTag t : {SymbolTag::DPlus, SymbolTag::DMinus}) {
      const GroupSpec g{t == SymbolTag::DPlus ? GroupFamily::SpinPlus : GroupFamily::SpinMinus, n};
      const mpz_class order = group_order(g).evaluate(5);
      for (const auto& s : enumerate_symbols(n, t)) CHECK(order % unipotent_degree(s).at(5) == 0);
    }
  }
}

TEST_CASE("d_ell and valuations") {
  CHECK(d_ell(2, 7) == 3);
  CHECK(d_ell(2, 5) == 4);
  CHECK_THROWS_AS(d_ell(2, 2), DomainError);
  CHECK_THROWS_AS(d_ell(3, 9), DomainError);
  CHECK(valuation(mpz_class(98), 7) == 2);
  CHECK_FALSE(valuation(mpz_class(0), 7).has_value());
  CHECK(ell_part(mpz_class(98), 7) == 49);
}

TEST_CASE("degree congruence example") {
  const auto rep = degree_congruence_check(parse_symbol("3,6|0"), 2, 7);
  CHECK(rep.degree == mpz_class("6203368340"));
  CHECK(rep.d == 3);
  CHECK(rep.phi_d_ell_part == 7);
  CHECK_THROWS_AS(degree_congruence_check(parse_symbol("3,6|0"), 3, 2), DomainError);
}
