#include <algorithm>
#include <set>

#include "doctest.h"
#include "unipmn/errors.hpp"
#include "unipmn/mn_engine.hpp"
#include "unipmn/scans.hpp"

using namespace unipmn;

namespace {

std::set<std::string> texts(const std::vector<Symbol>& v) {
  std::set<std::string> out;
  for (const auto& s : v) out.insert(s.to_string());
  return out;
}

std::set<std::string> nonvanishing_texts(const ScanReport& rep) {
  std::set<std::string> out;
  for (const auto* s : rep.nonvanishing()) out.insert(s->symbol.to_string());
  return out;
}

}  // namespace

TEST_CASE("case symbols") {
  const Symbol s = exception_case_symbol(1, 3, 0);
  CHECK(s == normalize(parse_symbol("1,2,3,6|0,1,2")));
  CHECK(rank(s) == 6);
  CHECK(defect(s) == 1);
  CHECK(exception_case_rank(1, 3, 0) == 6);
  CHECK(exception_case_family(4) == Family::Dplus);
  CHECK_THROWS_AS(exception_case_symbol(1, 3, 3), DomainError);
  CHECK(initial_segment(-1).empty());
  CHECK(initial_segment(2) == std::vector<int>{0, 1, 2});
  for (int c = 1; c <= 6; ++c) {
    for (int de : {1, 2, 3}) {
      if (c % 2 == 1 && de % 2 == 0) continue;
      for (int r : cartan_legal_r(c, de)) {
        const Symbol sym = exception_case_symbol(c, de, r);
        CHECK(rank(sym) == exception_case_rank(c, de, r));
      }
    }
  }
}

TEST_CASE("predicted exceptions for small groups") {
  const auto sp8 = texts(predicted_exceptions(Family::C, 4, 4, 2L));
  CHECK(sp8.count("0,1|4"));
  CHECK(sp8.count("1,4|0"));
  CHECK(sp8.count("4|"));
  const auto spin8 = texts(predicted_exceptions(Family::Dminus, 4, 2, 2L));
  CHECK(spin8.count("1,3|"));
  CHECK(texts(predicted_exceptions(Family::Dminus, 4, 4, 2L)).count("1,3|"));
  CHECK(texts(predicted_exceptions(Family::C, 6, 3)).count(normalize(parse_symbol("1,2,3,6|0,1,2")).to_string()));
  CHECK(predicted_exceptions(Family::C, 5, 7).empty());
}

TEST_CASE("Sp8(2) at ell = 5") {
  Engine eng;
  const auto rep = scan_nonvanishing(Family::C, 4, 2, 5, 2, eng);
  CHECK(rep.d == 4);
  CHECK(rep.predicted_missing.empty());
  const auto nv = nonvanishing_texts(rep);
  for (const char* t : {"4|", "0,1,2,3,4|1,2,3,4", "0,1|4", "1,4|0"}) CHECK(nv.count(t));
  CHECK(nv == texts(rep.predicted));
  for (const auto* s : rep.nonvanishing()) {
    for (auto v : s->values) CHECK(std::abs(v) == 1);
  }
  // every other symbol has a recorded zero that re-evaluates to zero
  for (const auto& s : rep.symbols) {
    if (!s.zero_at) continue;
    CHECK(value_oracle(s.symbol, rep.classes[*s.zero_at], Family::C).value == 0);
  }
}

TEST_CASE("Sp6(2) at ell = 3") {
  const auto rep = scan_nonvanishing(Family::C, 3, 2, 3, 1);
  const auto nv = nonvanishing_texts(rep);
  CHECK(nv.count("0,1,3|"));
  CHECK(nv.count("3|"));
  CHECK(nv == texts(rep.predicted));
}

TEST_CASE("Sp4(2) at ell = 3 has no usable classes") {
  const auto rep = scan_nonvanishing(Family::C, 2, 2, 3, 1);
  CHECK(rep.classes.empty());
  CHECK(rep.nonvanishing().size() == rep.symbols.size());
  CHECK(rep.symbols.size() == 6);
}

TEST_CASE("Spin8-(2) keeps the value 2") {
  const auto rep = scan_nonvanishing(Family::Dminus, 4, 2, 5, 1);
  CHECK(rep.predicted_missing.empty());
  bool saw_two = false;
  for (const auto* s : rep.nonvanishing()) {
    for (std::size_t i = 0; i < s->values.size(); ++i) {
      if (std::abs(s->values[i]) == 2) {
        saw_two = true;
        CHECK(rep.classes[i] == parse_bipartition("|2,1,1"));
      } else {
        CHECK(std::abs(s->values[i]) == 1);
      }
    }
  }
  CHECK(saw_two);
}

TEST_CASE("scan results do not depend on the thread count") {
  Engine a;
  Engine b;
  const auto r1 = scan_nonvanishing(Family::Dplus, 5, 3, 7, 1, a);
  const auto r4 = scan_nonvanishing(Family::Dplus, 5, 3, 7, 4, b);
  REQUIRE(r1.symbols.size() == r4.symbols.size());
  for (std::size_t i = 0; i < r1.symbols.size(); ++i) {
    CHECK(r1.symbols[i].symbol == r4.symbols[i].symbol);
    CHECK(r1.symbols[i].values == r4.symbols[i].values);
  }
}

TEST_CASE("opposite-sign tori") {
  const auto rep = cartan_sign_pairs(1, 3, 0);
  CHECK(rep.character.passed());
  CHECK(rep.dual_matches);
  const auto two = cartan_sign_pairs(2, 2, 1);
  CHECK(two.torus1 == parse_bipartition("4|1"));
  CHECK(two.torus2 == parse_bipartition("3|2"));
  CHECK(two.passed());
  const auto five = cartan_sign_pairs(5, 3, 1);
  CHECK(five.character.passed());
  CHECK_THROWS_AS(cartan_sign_pairs(1, 3, 7), DomainError);
}

TEST_CASE("corrigendum") {
  const GroupSpec sp6{GroupFamily::Sp, 3};
  const auto rep = corrigendum_check(sp6, corrigendum_partner(sp6), 2, 2);
  CHECK(rep.index == 336);
  CHECK(rep.g_p_part == 512);
  CHECK(rep.passed());
  const auto g2 = corrigendum_symbolic({GroupFamily::G2, 0});
  CHECK(g2.h.family == GroupFamily::SU3);
  CHECK(g2.index_poly == IntPoly::x_power(3) * IntPoly::binomial(3, -1));
  CHECK(g2.passed());
  CHECK(corrigendum_symbolic({GroupFamily::E8, 0}).passed());
  for (const auto& g : corrigendum_table(4)) CHECK(corrigendum_symbolic(g).passed());
  CHECK_THROWS_AS(corrigendum_check(sp6, sp6, 2, 2), DomainError);
  CHECK_THROWS_AS(corrigendum_check(sp6, corrigendum_partner(sp6), 4, 3), DomainError);
}
