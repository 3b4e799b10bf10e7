#pragma once

// Interchange documents: modules, labels, decompositions, quiver
// representations and short exact sequences.

#include <string>
#include <string_view>

#include "json.hpp"
#include "kv4/classify.hpp"
#include "kv4/quiver.hpp"
#include "kv4/syzygy.hpp"

namespace kv4 {

using Json = nlohmann::ordered_json;

Json to_json(const Field& f);
Json to_json(const Matrix& m);
Json to_json(const KModule& m);
Json to_json(const Label& l);
Json to_json(const Decomposition& d, bool with_witness);
Json to_json(const QuiverRep& r);
Json to_json(const ShortExactSequence& s);

/// {"degree": m, "modulus": [bits...]}; the modulus may be omitted for the built-in table.
Field field_from_json(const Json& j);
Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols);
/// Reads A/B, or group-element matrices "sigma"/"tau" (converted by a = sigma - 1).
/// Violations are reported with the specific error codes.
KModule module_from_json(const Json& j);
Label label_from_json(const Field& f, const Json& j);

/// Parses text (ParseError on malformed JSON) and reads a module.
KModule parse_module(std::string_view text);
/// Compact single-line form followed by a newline.
std::string dump(const Json& j);

}  // namespace kv4
