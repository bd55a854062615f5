#pragma once

#include "prelie/algebra.hpp"
#include "prelie/forms.hpp"

#include <map>
#include <string>

namespace prelie {

/// One parsed input file: an algebra plus named auxiliary objects.
struct Document {
    Algebra algebra;
    std::map<std::string, Matrix> operators;
    std::map<std::string, BilinearForm> forms;
    std::map<std::string, SymTwoTensor> tensors;
    std::map<std::string, Representation> representations;
};

/// Parses the JSON document format. Throws input_error with a
/// position-bearing message on malformed text and a path-bearing message
/// on schema violations. Rationals are accepted as integers or "p/q"
/// strings and normalized.
Document parse_document(const std::string& text);

/// Canonical serialization: sorted keys, two-space indent, rationals as
/// canonical strings. parse/serialize round trips are byte-stable.
std::string serialize_document(const Document& doc);

Document load_document(const std::string& path);
void save_document(const Document& doc, const std::string& path);

} // namespace prelie
