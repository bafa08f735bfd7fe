#include "oracles.hpp"

#include <cstdio>
#include <functional>
#include <regex>
#include <sys/wait.h>

namespace typec::testing {

  std::vector<std::vector<std::uint16_t>> all_matchings(unsigned n) {
    std::size_t const                       size = 4 * n;
    std::vector<std::vector<std::uint16_t>> result;
    std::vector<std::uint16_t>              partner(size, UINT16_MAX);
    std::function<void()>                   extend = [&] {
      std::size_t first = 0;
      while (first < size && partner[first] != UINT16_MAX) {
        ++first;
      }
      if (first == size) {
        result.push_back(partner);
        return;
      }
      for (std::size_t other = first + 1; other < size; ++other) {
        if (partner[other] == UINT16_MAX) {
          partner[first] = static_cast<std::uint16_t>(other);
          partner[other] = static_cast<std::uint16_t>(first);
          extend();
          partner[first] = partner[other] = UINT16_MAX;
        }
      }
    };
    extend();
    return result;
  }

  bool mirror_fixed(unsigned n, std::vector<std::uint16_t> const& partner) {
    unsigned const row = 2 * n;
    auto mirror = [row](unsigned x) {
      return x < row ? row - 1 - x : row + (2 * row - 1 - x);
    };
    for (unsigned x = 0; x < 2 * row; ++x) {
      if (mirror(partner[x]) != partner[mirror(x)]) {
        return false;
      }
    }
    return true;
  }

  namespace {
    using Doc = nlohmann::ordered_json;
    using Schema = nlohmann::json;

    bool type_matches(Doc const& doc, std::string const& type) {
      if (type == "object") return doc.is_object();
      if (type == "array") return doc.is_array();
      if (type == "string") return doc.is_string();
      if (type == "boolean") return doc.is_boolean();
      if (type == "integer") return doc.is_number_integer();
      if (type == "number") return doc.is_number();
      if (type == "null") return doc.is_null();
      return false;
    }

    bool same_value(Doc const& doc, Schema const& value) {
      return Schema::parse(doc.dump()) == value;
    }

    void check(Doc const& doc, Schema const& schema, Schema const& root,
               std::string const& path, std::vector<std::string>& errors) {
      if (schema.contains("$ref")) {
        std::string ref = schema["$ref"];
        if (ref.rfind("#/", 0) != 0) {
          errors.push_back(path + ": unsupported reference " + ref);
          return;
        }
        check(doc, root.at(Schema::json_pointer(ref.substr(1))), root, path,
              errors);
      }
      if (schema.contains("type")
          && !type_matches(doc, schema["type"].get<std::string>())) {
        errors.push_back(path + ": expected " + schema["type"].get<std::string>());
        return;
      }
      if (schema.contains("const") && !same_value(doc, schema["const"])) {
        errors.push_back(path + ": value differs from const");
      }
      if (schema.contains("enum")) {
        bool found = false;
        for (auto const& v : schema["enum"]) {
          found = found || same_value(doc, v);
        }
        if (!found) {
          errors.push_back(path + ": value not in enum");
        }
      }
      if (schema.contains("minimum") && doc.is_number()
          && doc.get<double>() < schema["minimum"].get<double>()) {
        errors.push_back(path + ": below minimum");
      }
      if (schema.contains("pattern") && doc.is_string()
          && !std::regex_search(doc.get<std::string>(),
                                std::regex(schema["pattern"].get<std::string>()))) {
        errors.push_back(path + ": pattern mismatch");
      }
      if (doc.is_object()) {
        if (schema.contains("required")) {
          for (auto const& key : schema["required"]) {
            if (!doc.contains(key.get<std::string>())) {
              errors.push_back(path + ": missing " + key.get<std::string>());
            }
          }
        }
        Schema const props = schema.value("properties", Schema::object());
        for (auto const& [key, value] : doc.items()) {
          if (props.contains(key)) {
            check(value, props[key], root, path + "/" + key, errors);
          } else if (schema.contains("additionalProperties")
                     && schema["additionalProperties"] == false) {
            errors.push_back(path + ": unexpected property " + key);
          }
        }
      }
      if (doc.is_array()) {
        if (schema.contains("minItems") && doc.size() < schema["minItems"].get<std::size_t>()) {
          errors.push_back(path + ": too few items");
        }
        if (schema.contains("maxItems") && doc.size() > schema["maxItems"].get<std::size_t>()) {
          errors.push_back(path + ": too many items");
        }
        if (schema.contains("items")) {
          for (std::size_t i = 0; i < doc.size(); ++i) {
            check(doc[i], schema["items"], root, path + "/" + std::to_string(i),
                  errors);
          }
        }
      }
      for (auto const* keyword : {"oneOf", "anyOf"}) {
        if (!schema.contains(keyword)) {
          continue;
        }
        std::size_t matches = 0;
        for (auto const& option : schema[keyword]) {
          std::vector<std::string> sub;
          check(doc, option, root, path, sub);
          matches += sub.empty();
        }
        bool ok = std::string(keyword) == "oneOf" ? matches == 1 : matches >= 1;
        if (!ok) {
          errors.push_back(path + ": " + keyword + " matched "
                           + std::to_string(matches) + " alternatives");
        }
      }
    }
  }  // namespace

  std::vector<std::string> validate_schema(Doc const& doc, Schema const& schema) {
    std::vector<std::string> errors;
    check(doc, schema, schema, "", errors);
    return errors;
  }

  CommandResult run_command(std::string const& command) {
    CommandResult result{"", -1};
    FILE*         pipe = popen(command.c_str(), "r");
    if (!pipe) {
      return result;
    }
    char        buffer[4096];
    std::size_t count;
    while ((count = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
      result.output.append(buffer, count);
    }
    int status    = pclose(pipe);
    result.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
  }

}  // namespace typec::testing
