#pragma once

#include <nlohmann/json.hpp>

#include "symidem/algebra.hpp"
#include "symidem/idempotents.hpp"
#include "symidem/scalars.hpp"
#include "symidem/symtensor.hpp"

namespace symidem {

using Json = nlohmann::ordered_json;

Json to_json(const GaussRational& x);
Json to_json(const AlgebraElement& x);
/// {"kind","field","degree","terms":[{"key":[...],"coeff":"p/q"}]}, keys in lexicographic order.
Json to_json(const SymTensor& x);
Json to_json(const IdempotentLabel& label);
/// {"metadata":{...},"elements":[{"label","tensor"}],"expected_unit":tensor}
Json to_json(const IdempotentSet& set);

// Parsers throw ArgumentError on malformed input.
GaussRational scalar_from_json(const Json& j);
AlgebraElement element_from_json(const Json& j, AlgebraKind kind, FieldTag field);
SymTensor tensor_from_json(const Json& j);
IdempotentLabel label_from_json(const Json& j);
IdempotentSet set_from_json(const Json& j);

}  // namespace symidem
