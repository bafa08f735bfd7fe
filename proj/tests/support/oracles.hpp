#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace typec::testing {

  // Every perfect matching of {0, ..., 4n-1}, as partner vectors in the
  // internal node numbering of BrauerDiagram.
  std::vector<std::vector<std::uint16_t>> all_matchings(unsigned n);

  // Whether a partner vector is fixed by i -> 2n + 1 - i in both rows,
  // computed directly on node indices.
  bool mirror_fixed(unsigned n, std::vector<std::uint16_t> const& partner);

  // Validates a document against the subset of JSON Schema used in
  // schemas/: type, const, enum, properties, required,
  // additionalProperties, items, minItems, maxItems, minimum, pattern,
  // oneOf, anyOf and local $ref. Returns the list of violations.
  std::vector<std::string> validate_schema(nlohmann::ordered_json const& doc,
                                           nlohmann::json const&         schema);

  // Runs a shell command and returns standard output and exit status.
  struct CommandResult {
    std::string output;
    int         status;
  };
  CommandResult run_command(std::string const& command);

}  // namespace typec::testing
