#include "gjts/json_io.hpp"

#include "json_detail.hpp"

namespace gjts {

namespace detail {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line/column locator.
    size_t line = 1, col = 1;
    for (size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw JsonFormatError("line " + std::to_string(line) + ", column " + std::to_string(col),
                          "malformed JSON");
  }
}

void require_schema(const Json& j, const std::string& where) {
  if (!j.contains("schema")) return;
  if (!j["schema"].is_string() || j["schema"].get<std::string>() != "1")
    throw JsonFormatError(where + ".schema", "unsupported schema version");
}

int get_int(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw JsonFormatError(where, "missing field \"" + key + "\"");
  if (!j[key].is_number_integer()) throw JsonFormatError(where + "." + key, "expected an integer");
  return j[key].get<int>();
}

}  // namespace detail

using detail::Json;

std::string system_to_json_text(const TripleSystem& s, const Vector* tripotent,
                                const ModelDescriptor* descriptor) {
  Json j;
  j["schema"] = "1";
  j["dim"] = s.dim();
  j["label"] = s.label();
  Json constants = Json::array();
  for (const auto& [key, val] : s.constants()) {
    Json entry;
    entry["i"] = key[0];
    entry["j"] = key[1];
    entry["k"] = key[2];
    entry["value"] = detail::vector_to_json(to_dense(val, s.dim()));
    constants.push_back(std::move(entry));
  }
  j["constants"] = std::move(constants);
  if (tripotent != nullptr) j["tripotent"] = detail::vector_to_json(*tripotent);
  if (descriptor != nullptr) {
    Json desc;
    desc["model"] = descriptor->name;
    Json params = Json::array();
    for (const auto& [name, value] : descriptor->params) {
      Json p;
      p["name"] = name;
      p["value"] = value;
      params.push_back(std::move(p));
    }
    desc["params"] = std::move(params);
    desc["weakly_commutative"] = descriptor->weakly_commutative;
    Json expected = Json::array();
    for (const auto& [label, dim] : descriptor->expected_components) {
      Json c;
      c["lambda"] = label.lambda_str();
      c["mu"] = label.mu_str();
      c["sign"] = label.sign == ComponentLabel::Sign::none
                      ? Json(nullptr)
                      : Json(label.sign == ComponentLabel::Sign::plus ? "+" : "-");
      c["dim"] = dim;
      expected.push_back(std::move(c));
    }
    desc["expected_components"] = std::move(expected);
    j["descriptor"] = std::move(desc);
  }
  return j.dump(2) + "\n";
}

LoadedSystem system_from_json_text(const std::string& text) {
  Json j = detail::parse_json(text);
  if (!j.is_object()) throw JsonFormatError("$", "expected a JSON object");
  detail::require_schema(j, "$");
  int dim = detail::get_int(j, "dim", "$");
  if (dim < 1) throw JsonFormatError("$.dim", "dimension must be positive");
  std::string label = j.contains("label") && j["label"].is_string()
                          ? j["label"].get<std::string>()
                          : std::string("system");
  TripleSystem s(dim, label);
  if (!j.contains("constants") || !j["constants"].is_array())
    throw JsonFormatError("$", "missing \"constants\" array");
  size_t idx = 0;
  for (const Json& entry : j["constants"]) {
    std::string where = "$.constants[" + std::to_string(idx++) + "]";
    if (!entry.is_object()) throw JsonFormatError(where, "expected an object");
    int i = detail::get_int(entry, "i", where);
    int jj = detail::get_int(entry, "j", where);
    int k = detail::get_int(entry, "k", where);
    if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
      throw JsonFormatError(where, "index out of range");
    if (!entry.contains("value")) throw JsonFormatError(where, "missing \"value\"");
    s.set_basis_product(i, jj, k, detail::vector_from_json(entry["value"], where + ".value", dim));
  }
  LoadedSystem loaded{std::move(s), std::nullopt};
  if (j.contains("tripotent"))
    loaded.tripotent = detail::vector_from_json(j["tripotent"], "$.tripotent", dim);
  return loaded;
}

Vector tripotent_from_json_text(const std::string& text, int expect_dim) {
  Json j = detail::parse_json(text);
  if (j.is_array()) return detail::vector_from_json(j, "$", expect_dim);
  if (j.is_object() && j.contains("tripotent")) {
    detail::require_schema(j, "$");
    return detail::vector_from_json(j["tripotent"], "$.tripotent", expect_dim);
  }
  throw JsonFormatError("$", "expected a scalar array or an object with \"tripotent\"");
}

std::string circle_to_json_text(const CircleAlgebra& c) {
  Json j;
  j["schema"] = "1";
  Json dims;
  dims["u11p"] = c.space().dim(GradedPart::u11p);
  dims["u11m"] = c.space().dim(GradedPart::u11m);
  dims["u13p"] = c.space().dim(GradedPart::u13p);
  dims["u13m"] = c.space().dim(GradedPart::u13m);
  j["dims"] = std::move(dims);
  Json table = Json::array();
  for (const auto& [key, val] : c.table()) {
    Json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    entry["value"] = detail::vector_to_json(val);
    table.push_back(std::move(entry));
  }
  j["circle"] = std::move(table);
  return j.dump(2) + "\n";
}

LoadedCircle circle_from_json_text(const std::string& text) {
  Json j = detail::parse_json(text);
  if (!j.is_object()) throw JsonFormatError("$", "expected a JSON object");
  detail::require_schema(j, "$");
  if (!j.contains("dims") || !j["dims"].is_object())
    throw JsonFormatError("$", "missing \"dims\" object");
  LoadedCircle loaded;
  const Json& dims = j["dims"];
  loaded.space.dims = {detail::get_int(dims, "u11p", "$.dims"),
                       detail::get_int(dims, "u11m", "$.dims"),
                       detail::get_int(dims, "u13p", "$.dims"),
                       detail::get_int(dims, "u13m", "$.dims")};
  for (int d : loaded.space.dims)
    if (d < 0) throw JsonFormatError("$.dims", "dimensions must be nonnegative");
  if (loaded.space.total() < 1) throw JsonFormatError("$.dims", "total dimension must be positive");
  int n = loaded.space.total();
  if (!j.contains("circle") || !j["circle"].is_array())
    throw JsonFormatError("$", "missing \"circle\" array");
  size_t idx = 0;
  for (const Json& entry : j["circle"]) {
    std::string where = "$.circle[" + std::to_string(idx++) + "]";
    if (!entry.is_object()) throw JsonFormatError(where, "expected an object");
    int i = detail::get_int(entry, "i", where);
    int jj = detail::get_int(entry, "j", where);
    if (i < 0 || i >= n || jj < 0 || jj >= n)
      throw GradingMismatch("circle table index (" + std::to_string(i) + "," +
                            std::to_string(jj) + ") outside the graded space");
    if (!entry.contains("value")) throw JsonFormatError(where, "missing \"value\"");
    loaded.table[{i, jj}] = detail::vector_from_json(entry["value"], where + ".value", n);
  }
  return loaded;
}

}  // namespace gjts
