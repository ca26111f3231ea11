#pragma once

// JSON interchange. Scalars are always strings in the exactfield text form;
// matrices are row-major arrays of arrays. nlohmann::json keeps object keys
// sorted, so emitted documents are canonical and re-emit byte-identically.

#include <json.hpp>

#include "leonard/canon.hpp"
#include "leonard/recognize.hpp"
#include "leonard/transition.hpp"

namespace leonard::json_io {

using nlohmann::json;

json to_json(const FieldSpec& field);
/// Errc::ParseError on a malformed object, Errc::NotPrime for a composite p.
FieldSpec field_from_json(const json& j);

json to_json(const Scalar& s);
json to_json(const std::vector<Scalar>& values);
Scalar scalar_from_json(const FieldSpec& field, const json& j);
std::vector<Scalar> scalars_from_json(const FieldSpec& field, const json& j);

/// Array of rows.
json entries_to_json(const Matrix& m);
Matrix matrix_from_entries(const FieldSpec& field, const json& rows);
/// {"field": ..., "entries": [[...]]}
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"d", "theta", "theta_star", "varphi", "phi"} without the field.
json array_body(const ParameterArray& p);
/// array_body plus a sibling "field" key.
json to_json(const ParameterArray& p);
/// Reads the body keys under the given field.
ParameterArray array_from_body(const FieldSpec& field, const json& j);
/// Reads a document carrying its own "field" key.
ParameterArray array_from_json(const json& j);

json to_json(const ValidationReport& report);
json to_json(const CanonicalPair& pair);
json to_json(const RecognitionReport& report, const FieldSpec& field);
json to_json(const TransitionData& data);

/// Parses text, mapping syntax errors to Errc::ParseError.
json parse(const std::string& text);
/// Pretty form with a trailing newline; the canonical emission.
std::string emit(const json& j);

}  // namespace leonard::json_io
