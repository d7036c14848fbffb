#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "unipmn/errors.hpp"
#include "unipmn/json_io.hpp"
#include "unipmn/mn_engine.hpp"
#include "unipmn/qpoly.hpp"
#include "unipmn/scans.hpp"
#include "unipmn/symbols.hpp"
#include "unipmn/tori.hpp"

namespace py = pybind11;
using namespace unipmn;

namespace {

// JSON documents cross the boundary as text; the Python side parses them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

py::int_ to_py(const mpz_class& v) { return py::int_(py::str(v.get_str())); }

std::vector<std::string> texts(const std::vector<Symbol>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Unipotent character values of classical groups via symbols";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("normalize", [](const std::string& s) { return normalize(parse_symbol(s)).to_string(); });
  m.def("rank", [](const std::string& s) { return rank(parse_symbol(s)); });
  m.def("defect", [](const std::string& s) { return defect(parse_symbol(s)); });
  m.def(
      "dual",
      [](const std::string& s, std::optional<int> m) {
        const Symbol sym = parse_symbol(s);
        return (m ? dual(sym, *m) : dual(sym)).to_string();
      },
      py::arg("symbol"), py::arg("m") = py::none());
  m.def("symbols", [](int n, const std::string& tag) {
    const Family f = parse_family(tag);
    const SymbolTag t = f == Family::Dplus ? SymbolTag::DPlus : f == Family::Dminus ? SymbolTag::DMinus : SymbolTag::BC;
    return texts(enumerate_symbols(n, t));
  });
  m.def("hooks", [](const std::string& s, int d) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& mv : hooks(parse_symbol(s), d)) out.emplace_back(mv.result.to_string(), mv.sign);
    return out;
  });
  m.def("cohooks", [](const std::string& s, int d) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& mv : cohooks(parse_symbol(s), d)) out.emplace_back(mv.result.to_string(), mv.sign);
    return out;
  });

  m.def(
      "value",
      [](const std::string& s, const std::string& cls, const std::string& family) {
        py::gil_scoped_release release;
        return value(parse_symbol(s), parse_bipartition(cls), parse_family(family)).value;
      },
      py::arg("symbol"), py::arg("cls"), py::arg("family"));
  m.def(
      "value_oracle",
      [](const std::string& s, const std::string& cls, const std::string& family) {
        return value_oracle(parse_symbol(s), parse_bipartition(cls), parse_family(family)).value;
      },
      py::arg("symbol"), py::arg("cls"), py::arg("family"));

  m.def("degree", [](const std::string& s, long q) { return to_py(unipotent_degree(parse_symbol(s)).at(q)); });
  m.def("babbage_residue", [](int d, int h) { return babbage_residue(d, h).coefficient_strings(); });
  m.def("d_ell", &d_ell);
  m.def("is_ell_singular",
        [](const std::string& cls, long q, long ell) { return is_ell_singular(parse_bipartition(cls), q, ell); });
  m.def("regular_guarantee", [](const std::string& family, long q, const std::string& cls) {
    const auto g = regular_guarantee(parse_family(family), q, parse_bipartition(cls));
    return std::make_pair(g.guaranteed(), g.clause);
  });
  m.def(
      "predicted_exceptions",
      [](const std::string& family, int n, int d, std::optional<long> q) {
        return texts(predicted_exceptions(parse_family(family), n, d, q));
      },
      py::arg("family"), py::arg("n"), py::arg("d"), py::arg("q") = py::none());
  m.def(
      "scan_json",
      [](const std::string& family, int n, long q, long ell, unsigned threads) {
        ScanReport rep;
        {
          py::gil_scoped_release release;
          rep = scan_nonvanishing(parse_family(family), n, q, ell, threads);
        }
        return dump(json_io::scan_report(rep));
      },
      py::arg("family"), py::arg("n"), py::arg("q"), py::arg("ell"), py::arg("threads") = 0);
  m.def("cartan_json", [](int case_id, int d_or_e, int r) { return dump(json_io::cartan_report(cartan_sign_pairs(case_id, d_or_e, r))); });
  m.def("corrigendum_json", [](const std::string& family, int rank, long q, long p) {
    const GroupSpec g{parse_group_family(family), rank};
    return dump(json_io::corrigendum_report(corrigendum_check(g, corrigendum_partner(g), q, p)));
  });

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = cli::execute(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
