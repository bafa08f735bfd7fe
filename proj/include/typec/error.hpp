#pragma once

#include <stdexcept>
#include <string>

namespace typec {

  enum class ErrorKind {
    rank_mismatch,
    index_out_of_range,
    resource_limit,
    division_by_zero,
    bad_denominator,
    asymmetric_input,
    shape_mismatch,
    malformed_triple,
    label_mismatch,
    degenerate,
    invalid_argument
  };

  char const* to_string(ErrorKind kind) noexcept;

  // Every failure raised by the library carries one of the kinds above so
  // callers (the CLI in particular) can map it to an exit status.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  // Upper bounds for exhaustive enumerations. Read once from the
  // environment (TYPEC_MAX_RANK, TYPEC_MAX_GROUP_RANK); defaults 5 and 6.
  unsigned max_enumeration_rank();
  unsigned max_group_rank();

}  // namespace typec
