#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "unipmn/errors.hpp"
#include "unipmn/json_io.hpp"
#include "unipmn/mn_engine.hpp"
#include "unipmn/qpoly.hpp"
#include "unipmn/scans.hpp"
#include "unipmn/symbols.hpp"
#include "unipmn/tori.hpp"

namespace unipmn::cli {

namespace {

using json_io::Json;

const std::vector<std::string> kVerbs = {"value", "symbols", "hooks",        "degree",     "congruence",
                                         "babbage", "tori",  "scan", "cartan-pairs", "corrigendum"};

struct Flags {
  std::string verb;
  std::optional<std::string> family, symbol, cls, cache, input, format;
  std::optional<int> n, d, h, r, case_id;
  std::optional<long> q, ell, p;
  std::optional<unsigned> threads;
};

struct Outcome {
  Json result;
  bool violation = false;
  std::optional<std::string> csv;
};

template <typename T>
const T& need(const std::optional<T>& v, const char* flag, const std::string& verb) {
  if (!v) throw ParseError(verb + " needs " + flag);
  return *v;
}

SymbolTag tag_for(Family f) {
  switch (f) {
    case Family::B:
    case Family::C: return SymbolTag::BC;
    case Family::Dplus: return SymbolTag::DPlus;
    case Family::Dminus: return SymbolTag::DMinus;
  }
  return SymbolTag::BC;
}

Json symbol_info(const Symbol& raw) {
  const Symbol s = normalize(raw);
  const SymbolKind k = kind(s);
  return Json{{"symbol", s.to_string()},
              {"rank", rank(s)},
              {"defect", defect(s)},
              {"kind", tag_name(k.tag)},
              {"degenerate", k.degenerate},
              {"dual", dual(s).to_string()}};
}

long smallest_prime_factor(long q) {
  for (long k = 2; k * k <= q; ++k) {
    if (q % k == 0) return k;
  }
  return q;
}

Outcome run_verb(const Flags& f, Engine& engine) {
  const std::string& v = f.verb;
  Outcome out;
  if (v == "value") {
    const Family fam = parse_family(need(f.family, "--family", v));
    const Symbol s = parse_symbol(need(f.symbol, "--symbol", v));
    const BiPartition bp = parse_bipartition(need(f.cls, "--class", v));
    const CharacterValue cv = engine.value(s, bp, fam);
    out.result = Json{{"value", cv.value},
                      {"degenerate_character", cv.degenerate_character},
                      {"degenerate_class", cv.degenerate_class},
                      {"symbol", normalize(s).to_string()},
                      {"class", bp.to_string()},
                      {"family", family_name(fam)}};
  } else if (v == "symbols") {
    if (f.symbol) {
      out.result = symbol_info(parse_symbol(*f.symbol));
    } else {
      const Family fam = parse_family(need(f.family, "--family", v));
      const int n = need(f.n, "--n", v);
      if (n < 0) throw ContractError("--n must be non-negative");
      Json arr = Json::array();
      for (const auto& s : enumerate_symbols(n, tag_for(fam))) arr.push_back(symbol_info(s));
      out.result = Json{{"family", family_name(fam)}, {"n", n}, {"count", arr.size()}, {"symbols", arr}};
    }
  } else if (v == "hooks") {
    const Symbol s = parse_symbol(need(f.symbol, "--symbol", v));
    const int d = need(f.d, "--d", v);
    if (d < 1) throw ContractError("--d must be positive");
    Json hk = Json::array();
    Json ck = Json::array();
    for (const auto& mv : hooks(s, d)) hk.push_back(json_io::hook_move(mv));
    for (const auto& mv : cohooks(s, d)) ck.push_back(json_io::hook_move(mv));
    out.result = Json{{"symbol", normalize(s).to_string()}, {"d", d}, {"hooks", hk}, {"cohooks", ck}};
  } else if (v == "degree") {
    const Symbol s = parse_symbol(need(f.symbol, "--symbol", v));
    const UnipotentDegree deg = unipotent_degree(s);
    out.result = Json{{"symbol", normalize(s).to_string()},
                      {"polynomial", json_io::poly(deg.scaled)},
                      {"denominator_power_of_2", deg.halvings}};
    if (f.q) {
      if (*f.q < 2) throw DomainError("--q must be at least 2");
      out.result["degree"] = json_io::big(deg.at(*f.q));
      out.result["q"] = *f.q;
    }
  } else if (v == "congruence") {
    const Symbol s = parse_symbol(need(f.symbol, "--symbol", v));
    out.result = json_io::congruence_report(
        degree_congruence_check(s, need(f.q, "--q", v), need(f.ell, "--ell", v)));
    out.result["symbol"] = normalize(s).to_string();
  } else if (v == "babbage") {
    const IntPoly res = babbage_residue(need(f.d, "--d", v), need(f.h, "--h", v));
    out.result = Json{{"d", *f.d}, {"h", *f.h}, {"residue", json_io::poly(res)}, {"zero", res.is_zero()}};
    out.violation = !res.is_zero();
  } else if (v == "tori") {
    const Family fam = parse_family(need(f.family, "--family", v));
    const long q = need(f.q, "--q", v);
    Json arr = Json::array();
    for (const auto& bp : enumerate_torus_types(fam, need(f.n, "--n", v))) {
      arr.push_back(json_io::torus(bp, fam, q, f.ell));
    }
    out.result = Json{{"family", family_name(fam)}, {"n", *f.n}, {"q", q}, {"tori", arr}};
  } else if (v == "scan") {
    const Family fam = parse_family(need(f.family, "--family", v));
    const unsigned threads = f.threads.value_or(0);
    const ScanReport rep = scan_nonvanishing(fam, need(f.n, "--n", v), need(f.q, "--q", v),
                                             need(f.ell, "--ell", v), threads, engine);
    out.result = json_io::scan_report(rep);
    out.violation = !rep.predicted_missing.empty();
    if (f.format && *f.format == "csv") out.csv = json_io::scan_csv(rep);
  } else if (v == "cartan-pairs") {
    const int case_id = need(f.case_id, "--case", v);
    const int d = need(f.d, "--d", v);
    if (case_id < 1 || case_id > 6) throw DomainError("--case must be 1..6");
    int de = d;
    if (case_id % 2 == 0) {
      if (d % 2 != 0) throw DomainError("cases 2, 4, 6 need an even --d");
      de = d / 2;
    } else if (d % 2 == 0) {
      throw DomainError("cases 1, 3, 5 need an odd --d");
    }
    const std::vector<int> rs = f.r ? std::vector<int>{*f.r} : cartan_legal_r(case_id, de);
    Json arr = Json::array();
    bool all = true;
    for (int r : rs) {
      const CartanReport rep = cartan_sign_pairs(case_id, de, r, engine);
      all = all && rep.passed();
      arr.push_back(json_io::cartan_report(rep));
    }
    out.result = Json{{"case", case_id}, {"d", d}, {"checks", arr}, {"passed", all}};
    out.violation = !all;
  } else if (v == "corrigendum") {
    const GroupFamily gf = parse_group_family(need(f.family, "--family", v));
    const GroupSpec g{gf, f.n.value_or(0)};
    if (f.q) {
      const long p = f.p.value_or(smallest_prime_factor(*f.q));
      const CorrigendumReport rep = corrigendum_check(g, corrigendum_partner(g), *f.q, p);
      out.result = json_io::corrigendum_report(rep);
      out.violation = !rep.passed();
    } else {
      const CorrigendumSymbolic rep = corrigendum_symbolic(g);
      out.result = json_io::corrigendum_symbolic(rep);
      out.violation = !rep.passed();
    }
  } else {
    throw ParseError("unknown verb \"" + v + "\"");
  }
  if (f.format && *f.format == "csv" && !out.csv) throw ParseError("--format csv is only supported by scan");
  return out;
}

void build_app(CLI::App& app, Flags& f) {
  app.set_help_flag("--help", "print this help");
  app.add_option("verb", f.verb, "one of: value symbols hooks degree congruence babbage tori scan cartan-pairs corrigendum");
  app.add_option("--family", f.family, "B, C, D+, D- (corrigendum: SL+ SL- Sp Spin Spin+ Spin- G2 F4 E6+ E6- E7 E8)");
  app.add_option("--n", f.n, "rank");
  app.add_option("--q", f.q, "field size");
  app.add_option("--ell", f.ell, "odd prime not dividing q");
  app.add_option("--p", f.p, "characteristic (corrigendum)");
  app.add_option("--symbol", f.symbol, "symbol text, e.g. \"0,1|4\"");
  app.add_option("--class", f.cls, "bipartition text, e.g. \"3,1|2\"");
  app.add_option("--d", f.d, "hook length / d = d_ell(q)");
  app.add_option("--h", f.h, "babbage h");
  app.add_option("--r", f.r, "cartan-pairs r");
  app.add_option("--case", f.case_id, "cartan-pairs case 1..6");
  app.add_option("--cache", f.cache, "memo cache file");
  app.add_option("--threads", f.threads, "scan worker threads (default: all cores)");
  app.add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--input", f.input, "batch file, one command per line");
}

Json error_json(const char* kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

// Parses one argument vector. Returns nullopt after printing help.
std::optional<Flags> parse_flags(const std::vector<std::string>& args, std::ostream& out) {
  Flags f;
  CLI::App app{"unipmn: unipotent character values of classical groups"};
  build_app(app, f);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ParseError(std::string(e.what()) + "\n" + app.help());
  }
  if (f.verb.empty() && !f.input) throw ParseError("missing verb\n" + app.help());
  if (!f.verb.empty() && f.input) throw ParseError("give either a verb or --input, not both");
  if (!f.verb.empty() && std::find(kVerbs.begin(), kVerbs.end(), f.verb) == kVerbs.end()) {
    throw ParseError("unknown verb \"" + f.verb + "\"\n" + app.help());
  }
  return f;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto top = parse_flags(args, out);
  if (!top) return kOk;
  Engine engine;
  if (top->cache) engine.load_cache(*top->cache);

  int code = kOk;
  if (top->input) {
    std::ifstream in(*top->input);
    if (!in) throw ParseError("cannot read " + *top->input);
    Json results = Json::array();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto words = split_words(line);
      if (words.empty() || words.front().starts_with('#')) continue;
      try {
        auto f = parse_flags(words, out);
        if (!f || f->verb.empty()) throw ParseError("batch lines need a verb");
        if (f->input || f->cache) throw ParseError("--input and --cache are not allowed inside a batch file");
        if (f->format && *f->format == "csv") throw ParseError("--format csv is not available in batch mode");
        Outcome o = run_verb(*f, engine);
        if (o.violation) code = kViolation;
        results.push_back(std::move(o.result));
      } catch (const std::exception& e) {
        throw ParseError(*top->input + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
    out << results.dump() << '\n';
  } else {
    Outcome o = run_verb(*top, engine);
    if (o.csv) {
      out << *o.csv;
    } else {
      out << o.result.dump() << '\n';
    }
    if (o.violation) code = kViolation;
  }
  if (top->cache) engine.save_cache(*top->cache);
  return code;
}

}  // namespace

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::string cur;
  bool in_word = false;
  char quote = 0;
  for (char c : line) {
    if (quote) {
      if (c == quote) {
        quote = 0;
      } else {
        cur += c;
      }
    } else if (c == '"' || c == '\'') {
      quote = c;
      in_word = true;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      if (in_word) words.push_back(cur);
      cur.clear();
      in_word = false;
    } else {
      cur += c;
      in_word = true;
    }
  }
  if (quote) throw ParseError("unterminated quote in \"" + line + "\"");
  if (in_word) words.push_back(cur);
  return words;
}

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const ParseError& e) {
    err << error_json("parse", e.what()).dump() << '\n';
  } catch (const ContractError& e) {
    err << error_json("contract", e.what()).dump() << '\n';
  } catch (const DomainError& e) {
    err << error_json("domain", e.what()).dump() << '\n';
  } catch (const InternalError& e) {
    err << error_json("internal", e.what()).dump() << '\n';
  } catch (const std::exception& e) {
    err << error_json("error", e.what()).dump() << '\n';
  }
  return kBadInput;
}

}  // namespace unipmn::cli
