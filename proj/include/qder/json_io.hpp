#pragma once

// JSON encodings used by the command-line tool. Rationals are "num/den"
// strings and residues are plain integers, so nothing is ever rounded.

#include <json.hpp>

#include <string>

#include "qder/derivations.hpp"
#include "qder/lietransform.hpp"
#include "qder/quandle.hpp"

namespace qder {

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Quandle& q);
/// Matrix as a list of rows.
nlohmann::json to_json(const Matrix& m);

/// {"n": int, "table": [[int]]}. Throws std::invalid_argument on schema
/// errors and QuandleError when the table is not a quandle.
Quandle quandle_from_json(const nlohmann::json& j);
/// Validates the schema only, returning the raw table.
CayleyTable table_from_json(const nlohmann::json& j);

nlohmann::json derivations_to_json(const DerivationBasis& d, const std::string& source);
nlohmann::json lietransform_to_json(const OperatorSpace& lie, const InnerDerivations& inner);

}  // namespace qder
