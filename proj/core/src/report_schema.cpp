#include "pavsel/report_schema.hpp"

#include <regex>

namespace pavsel {

namespace {

using nlohmann::json;

bool matches_type(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  if (type == "number") return value.is_number();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  return false;
}

struct Validator {
  const json& root;
  std::optional<std::string> error;

  bool fail(const std::string& path, const std::string& problem) {
    if (!error) error = path + ": " + problem;
    return false;
  }

  const json* resolve_ref(const std::string& ref, const std::string& path) {
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) {
      fail(path, "unsupported $ref '" + ref + "'");
      return nullptr;
    }
    const std::string name = ref.substr(prefix.size());
    auto defs = root.find("$defs");
    if (defs == root.end() || !defs->contains(name)) {
      fail(path, "unresolved $ref '" + ref + "'");
      return nullptr;
    }
    return &(*defs)[name];
  }

  bool check(const json& value, const json& schema, const std::string& path) {
    if (!schema.is_object()) return fail(path, "schema node must be an object");

    if (auto ref = schema.find("$ref"); ref != schema.end()) {
      const json* target = resolve_ref(ref->get<std::string>(), path);
      return target != nullptr && check(value, *target, path);
    }

    if (auto type = schema.find("type"); type != schema.end()) {
      bool ok = false;
      if (type->is_string()) {
        ok = matches_type(value, type->get<std::string>());
      } else {
        for (const json& t : *type)
          if (matches_type(value, t.get<std::string>())) ok = true;
      }
      if (!ok) return fail(path, "expected type " + type->dump() + ", got " + value.dump());
    }

    if (auto en = schema.find("enum"); en != schema.end()) {
      bool ok = false;
      for (const json& option : *en)
        if (option == value) ok = true;
      if (!ok) return fail(path, "value " + value.dump() + " not in enum " + en->dump());
    }

    if (auto c = schema.find("const"); c != schema.end()) {
      if (*c != value)
        return fail(path, "expected const " + c->dump() + ", got " + value.dump());
    }

    if (auto pattern = schema.find("pattern"); pattern != schema.end()) {
      if (value.is_string()) {
        std::regex re(pattern->get<std::string>(), std::regex::ECMAScript);
        if (!std::regex_search(value.get<std::string>(), re))
          return fail(path, "string " + value.dump() + " does not match pattern " +
                                pattern->dump());
      }
    }

    if (value.is_number()) {
      if (auto lo = schema.find("minimum"); lo != schema.end())
        if (value.get<double>() < lo->get<double>())
          return fail(path, "value below minimum " + lo->dump());
      if (auto hi = schema.find("maximum"); hi != schema.end())
        if (value.get<double>() > hi->get<double>())
          return fail(path, "value above maximum " + hi->dump());
    }

    if (value.is_object()) {
      if (auto required = schema.find("required"); required != schema.end())
        for (const json& name : *required)
          if (!value.contains(name.get<std::string>()))
            return fail(path, "missing required property '" + name.get<std::string>() + "'");

      auto properties = schema.find("properties");
      for (auto it = value.begin(); it != value.end(); ++it) {
        const std::string child_path = path + "." + it.key();
        if (properties != schema.end() && properties->contains(it.key())) {
          if (!check(it.value(), (*properties)[it.key()], child_path)) return false;
          continue;
        }
        if (auto extra = schema.find("additionalProperties"); extra != schema.end()) {
          if (extra->is_boolean()) {
            if (!extra->get<bool>())
              return fail(child_path, "property not allowed by schema");
          } else if (!check(it.value(), *extra, child_path)) {
            return false;
          }
        }
      }
    }

    if (value.is_array()) {
      if (auto lo = schema.find("minItems"); lo != schema.end())
        if (value.size() < lo->get<size_t>())
          return fail(path, "array shorter than minItems " + lo->dump());
      if (auto hi = schema.find("maxItems"); hi != schema.end())
        if (value.size() > hi->get<size_t>())
          return fail(path, "array longer than maxItems " + hi->dump());
      if (auto items = schema.find("items"); items != schema.end()) {
        for (size_t i = 0; i < value.size(); ++i) {
          if (!check(value[i], *items, path + "[" + std::to_string(i) + "]")) return false;
        }
      }
    }

    return true;
  }
};

}  // namespace

std::optional<std::string> validate_against_schema(const nlohmann::json& instance,
                                                   const nlohmann::json& schema) {
  Validator v{schema, std::nullopt};
  v.check(instance, schema, "$");
  return v.error;
}

}  // namespace pavsel
