#include "unipmn/json_io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace unipmn::json_io {

Json big(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Json poly(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(big(c));
  return arr;
}

Json hook_move(const HookMove& mv) {
  return Json{{"result", mv.result.to_string()},
              {"sign", mv.sign},
              {"row", mv.site.row},
              {"entry", mv.site.entry},
              {"target", mv.site.target}};
}

Json torus(const BiPartition& bp, Family family, long q, std::optional<long> ell) {
  const RegularGuarantee g = regular_guarantee(family, q, bp);
  Json j{{"class", bp.to_string()},
         {"order_poly", poly(torus_order(bp))},
         {"regular", g.guaranteed() ? "Guaranteed" : "Unknown"},
         {"rule", g.clause},
         {"degenerate_class", family == Family::Dplus && is_degenerate_class(bp)}};
  j["ell_singular"] = ell ? Json(is_ell_singular(bp, q, *ell)) : Json(nullptr);
  return j;
}

namespace {

Json symbol_list(const std::vector<Symbol>& v) {
  Json arr = Json::array();
  for (const auto& s : v) arr.push_back(s.to_string());
  return arr;
}

Json class_list(const std::vector<BiPartition>& v) {
  Json arr = Json::array();
  for (const auto& c : v) arr.push_back(c.to_string());
  return arr;
}

}  // namespace

Json scan_report(const ScanReport& rep) {
  Json nonvanishing = Json::array();
  Json witnesses = Json::array();
  for (const auto& s : rep.symbols) {
    if (s.zero_at) {
      witnesses.push_back(Json{{"symbol", s.symbol.to_string()}, {"class", rep.classes[*s.zero_at].to_string()}});
      continue;
    }
    Json values = Json::object();
    for (std::size_t c = 0; c < rep.classes.size(); ++c) values[rep.classes[c].to_string()] = s.values[c];
    nonvanishing.push_back(Json{{"symbol", s.symbol.to_string()}, {"degenerate", s.degenerate}, {"values", values}});
  }
  return Json{{"group", Json{{"family", family_name(rep.family)}, {"n", rep.n}, {"q", rep.q}}},
              {"ell", rep.ell},
              {"d", rep.d},
              {"scanned_classes", rep.classes.size()},
              {"classes", class_list(rep.classes)},
              {"skipped_classes", class_list(rep.skipped_classes)},
              {"symbol_count", rep.symbols.size()},
              {"witnesses_used", witnesses},
              {"nonvanishing", nonvanishing},
              {"predicted", symbol_list(rep.predicted)},
              {"predicted_missing", symbol_list(rep.predicted_missing)}};
}

std::string scan_csv(const ScanReport& rep) {
  std::ostringstream out;
  out << "symbol,degree,min,max,zero_witness\n";
  for (const auto& s : rep.symbols) {
    out << '"' << s.symbol.to_string() << "\"," << unipotent_degree(s.symbol).at(rep.q).get_str() << ',';
    if (s.values.empty()) {
      out << "-,-";
    } else {
      const auto [mn, mx] = std::minmax_element(s.values.begin(), s.values.end());
      out << *mn << ',' << *mx;
    }
    out << ',';
    if (s.zero_at) {
      out << '"' << rep.classes[*s.zero_at].to_string() << '"';
    } else {
      out << '-';
    }
    out << '\n';
  }
  return out.str();
}

Json cartan_report(const CartanReport& rep) {
  auto check = [&](const CartanCheck& c) {
    return Json{{"symbol", c.symbol.to_string()}, {"v1", c.v1}, {"v2", c.v2}, {"passed", c.passed()}};
  };
  return Json{{"case", rep.case_id},
              {"d_or_e", rep.d_or_e},
              {"r", rep.r},
              {"family", family_name(rep.family)},
              {"n", rep.n},
              {"torus1", rep.torus1.to_string()},
              {"torus2", rep.torus2.to_string()},
              {"character", check(rep.character)},
              {"dual", check(rep.dual)},
              {"listed_dual", rep.listed_dual.to_string()},
              {"dual_matches", rep.dual_matches},
              {"passed", rep.passed()}};
}

Json corrigendum_report(const CorrigendumReport& rep) {
  return Json{{"G", group_name(rep.g)},
              {"H", group_name(rep.h)},
              {"q", rep.q},
              {"p", rep.p},
              {"index_poly", poly(rep.index_poly)},
              {"index", big(rep.index)},
              {"G_p_part", big(rep.g_p_part)},
              {"p_divides_index", rep.p_divides},
              {"index_below_G_p", rep.below_p_part},
              {"passed", rep.passed()}};
}

Json corrigendum_symbolic(const CorrigendumSymbolic& rep) {
  return Json{{"G", group_name(rep.g)},
              {"H", group_name(rep.h)},
              {"index_poly", poly(rep.index_poly)},
              {"zero_constant_term", rep.zero_constant_term},
              {"q_range", Json::array({rep.first_q, rep.last_q})},
              {"index_below_G_p", rep.below_everywhere},
              {"passed", rep.passed()}};
}

Json congruence_report(const DegreeCongruenceReport& rep) {
  auto val = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
  return Json{{"d", rep.d},
              {"degree", big(rep.degree)},
              {"val_ell_degree_minus_1", val(rep.val_minus)},
              {"val_ell_degree_plus_1", val(rep.val_plus)},
              {"phi_d_ell_part", big(rep.phi_d_ell_part)},
              {"congruent_pm1_mod_square", rep.congruent_pm1}};
}

}  // namespace unipmn::json_io
