#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "qflie/derivations.hpp"
#include "qflie/lie_algebra.hpp"
#include "qflie/tpa.hpp"

namespace qflie {

using Json = nlohmann::json;

// Raised on malformed input documents; the message carries a JSON-path-like
// locator (e.g. "brackets[2].i: must satisfy i < j").
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json algebra_to_json(const LieAlgebra& alg);
// Validates the schema, builds the algebra, and flags (not rejects) tables
// that fail the Jacobi identity.
LieAlgebra algebra_from_json(const Json& j);

Json product_to_json(const CommutativeProduct& p);
CommutativeProduct product_from_json(const Json& j);

Json derivation_space_to_json(const DerivationSpace& s);

std::string export_json(const Json& j);  // stable 2-space indentation

// Dispatches on the document shape: "brackets" -> algebra, "products" -> product.
std::variant<LieAlgebra, CommutativeProduct> import_json(const std::string& text);

}  // namespace qflie
