#ifndef FILTCOH_MODELFILE_HPP
#define FILTCOH_MODELFILE_HPP

#include <json.hpp>

#include "filtcoh/model.hpp"

namespace filtcoh {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// UTF-8 JSON model documents, schema 1. Kinds: "ce", "ring", "product".
// Coefficients are integers or "p/q" strings; monomials are generator
// labels joined by '^' in generator order.
ModelPtr parse_model_file(const std::string& path);

// base_dir resolves relative factor paths of product documents.
ModelPtr parse_model_json(const nlohmann::json& doc, const std::string& base_dir);

// Resolves "@name" catalog references, otherwise treats the text as a path.
ModelPtr resolve_model(const std::string& ref, const std::string& base_dir = ".");

// Serialization of exterior and ring models back to the document schema.
// Tensor models round-trip through product documents instead.
nlohmann::json model_to_json(const GradedModel& m);

// Document for a catalog entry (product entries serialize by reference).
nlohmann::json catalog_doc(const std::string& name);

// Stable content fingerprint used in report provenance blocks.
std::string model_fingerprint(const GradedModel& m);

}  // namespace filtcoh

#endif
