#pragma once

#include <string>

#include "json.hpp"

#include "epistrict/cmatrix.hpp"
#include "epistrict/equivalence.hpp"
#include "epistrict/stabilizer.hpp"
#include "epistrict/weyl.hpp"

namespace epistrict {

/// {"dim": [rows, cols], "entries": [[re, im], ...] row-major, "tol": t}.
nlohmann::json to_json(const CMatrix& m);
/// Inverse of to_json; throws ParseError on malformed input.
CMatrix cmatrix_from_json(const nlohmann::json& j);
/// {"outcomes": [[c], ...], "projectors": [matrix, ...]}.
nlohmann::json to_json(const PVM& pvm);
nlohmann::json to_json(const EquivalenceReport& r);

/// Single-mode Wigner table: one row per position q, one column per momentum p.
std::string wigner_csv(const PhaseFn& w, int precision = 12);

}  // namespace epistrict
