#include "symidem/json_io.hpp"

#include <algorithm>
#include <string>

#include "symidem/errors.hpp"

namespace symidem {

namespace {

const Json& field_of(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ArgumentError(std::string("missing JSON field '") + name + "'");
  }
  return j.at(name);
}

template <typename T>
T read(const Json& j, const char* name) {
  try {
    return field_of(j, name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("bad JSON field '") + name + "': " + e.what());
  }
}

template <typename T>
void put_optional(Json& j, const char* name, const std::optional<T>& value) {
  if (value) j[name] = *value;
}

template <typename T>
std::optional<T> get_optional(const Json& j, const char* name) {
  if (!j.contains(name) || j.at(name).is_null()) return std::nullopt;
  return read<T>(j, name);
}

}  // namespace

Json to_json(const GaussRational& x) { return x.to_string(); }

Json to_json(const AlgebraElement& x) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back(to_json(c));
  return out;
}

Json to_json(const SymTensor& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms()) {
    Json entries = Json::array();
    for (std::size_t p = 0; p < key.degree(); ++p) entries.push_back(static_cast<int>(key[p]));
    terms.push_back({{"key", std::move(entries)}, {"coeff", to_json(c)}});
  }
  return {{"kind", to_string(x.kind())},
          {"field", to_string(x.field())},
          {"degree", x.degree()},
          {"terms", std::move(terms)}};
}

Json to_json(const IdempotentLabel& label) {
  Json out = {{"family", to_string(label.family)}, {"n", label.n}};
  put_optional(out, "ell", label.ell);
  put_optional(out, "m", label.m);
  put_optional(out, "k", label.k);
  put_optional(out, "delta", label.delta);
  return out;
}

Json to_json(const IdempotentSet& set) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < set.tensors.size(); ++i) {
    elements.push_back({{"label", to_json(set.labels[i])}, {"tensor", to_json(set.tensors[i])}});
  }
  const SymTensor& unit = set.expected_unit;
  return {{"metadata",
           {{"n", unit.degree()},
            {"algebra", to_string(unit.kind())},
            {"field", to_string(unit.field())},
            {"expected_count", set.expected_count}}},
          {"elements", std::move(elements)},
          {"expected_unit", to_json(unit)}};
}

GaussRational scalar_from_json(const Json& j) {
  if (!j.is_string()) throw ArgumentError("scalar must be a string");
  return GaussRational::parse(j.get<std::string>());
}

AlgebraElement element_from_json(const Json& j, AlgebraKind kind, FieldTag field) {
  if (!j.is_array()) throw ArgumentError("algebra element must be an array");
  std::vector<GaussRational> coords;
  for (const auto& c : j) coords.push_back(scalar_from_json(c));
  return AlgebraElement(kind, field, std::move(coords));
}

SymTensor tensor_from_json(const Json& j) {
  const AlgebraKind kind = parse_kind(read<std::string>(j, "kind"));
  const FieldTag field = parse_field(read<std::string>(j, "field"));
  const auto degree = read<std::size_t>(j, "degree");
  const Json& terms = field_of(j, "terms");
  if (!terms.is_array()) throw ArgumentError("'terms' must be an array");
  SymTensor::Terms out;
  for (const auto& term : terms) {
    const auto key = read<std::vector<int>>(term, "key");
    std::vector<std::uint8_t> entries;
    for (int e : key) {
      if (e < 0 || static_cast<std::size_t>(e) >= dimension(kind)) {
        throw ArgumentError("key entry out of range");
      }
      entries.push_back(static_cast<std::uint8_t>(e));
    }
    if (entries.size() != degree) throw ArgumentError("key length does not match degree");
    if (!std::is_sorted(entries.begin(), entries.end())) throw ArgumentError("key entries must be sorted");
    auto [it, inserted] = out.emplace(MultiIndex(entries), scalar_from_json(field_of(term, "coeff")));
    if (!inserted) throw ArgumentError("duplicate key in tensor");
  }
  return SymTensor(kind, field, degree, std::move(out));
}

IdempotentLabel label_from_json(const Json& j) {
  return {parse_family(read<std::string>(j, "family")),
          read<std::size_t>(j, "n"),
          get_optional<std::size_t>(j, "ell"),
          get_optional<std::size_t>(j, "m"),
          get_optional<std::size_t>(j, "k"),
          get_optional<int>(j, "delta")};
}

IdempotentSet set_from_json(const Json& j) {
  const Json& meta = field_of(j, "metadata");
  IdempotentSet out{{}, {}, tensor_from_json(field_of(j, "expected_unit")),
                    read<std::size_t>(meta, "expected_count")};
  const Json& elements = field_of(j, "elements");
  if (!elements.is_array()) throw ArgumentError("'elements' must be an array");
  for (const auto& e : elements) {
    out.labels.push_back(label_from_json(field_of(e, "label")));
    out.tensors.push_back(tensor_from_json(field_of(e, "tensor")));
  }
  return out;
}

}  // namespace symidem
