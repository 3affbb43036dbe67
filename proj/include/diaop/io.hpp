#pragma once

#include "diaop/basis.hpp"
#include "diaop/classify.hpp"
#include "diaop/hyperbolicity.hpp"
#include "diaop/operator.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace diaop::io {

using nlohmann::json;

// Formats. Rational: "p/q" (q omitted when 1). Polynomial: array of
// Rational strings in ascending degree. Operator file:
//   { "max_order": N, "q": [Polynomial, ...], "meta": { "basis": s, "eigen": s } }

json to_json(const Rational &r);
json to_json(const Polynomial &p);
Rational rational_from_json(const json &j);
Polynomial polynomial_from_json(const json &j);

struct OperatorFile {
  OperatorRep op;
  std::string basis;
  std::string eigen;
};

json to_json(const OperatorFile &file);
OperatorFile operator_from_json(const json &j);

/// Throws SchemaError for a missing file, invalid JSON or a schema mismatch.
OperatorFile read_operator_file(const std::filesystem::path &path);
void write_operator_file(const std::filesystem::path &path, const OperatorFile &file);

/// JSON array of Polynomials, entry n = B_n. Validated as a simple basis
/// (PreconditionError) after schema checks (SchemaError).
Basis read_custom_basis(const std::filesystem::path &path);

/// monomial | hermite | legendre | laguerre | chebyshev | custom:<path>
Basis parse_basis(std::string_view name);

json to_json(const VerifyReport &report);
json to_json(const ClassificationReport &report);
json to_json(const Counterexample &cx);
json to_json(const MsReport &report);

/// Pretty-printed JSON with a trailing newline; stable for identical input.
std::string dump(const json &j);

} // namespace diaop::io
