#pragma once

#include <gmpxx.h>

#include <string>

#include "json.hpp"
#include "unipmn/combinatorics.hpp"
#include "unipmn/qpoly.hpp"
#include "unipmn/scans.hpp"
#include "unipmn/symbols.hpp"
#include "unipmn/tori.hpp"

namespace unipmn::json_io {

using Json = nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json big(const mpz_class& v);
/// Coefficient list, lowest degree first.
Json poly(const IntPoly& p);
Json hook_move(const HookMove& mv);
Json torus(const BiPartition& bp, Family family, long q, std::optional<long> ell);
Json scan_report(const ScanReport& rep);
/// One row per symbol: symbol, degree at q, min, max, first zero class or "-".
std::string scan_csv(const ScanReport& rep);
Json cartan_report(const CartanReport& rep);
Json corrigendum_report(const CorrigendumReport& rep);
Json corrigendum_symbolic(const CorrigendumSymbolic& rep);
Json congruence_report(const DegreeCongruenceReport& rep);

}  // namespace unipmn::json_io
