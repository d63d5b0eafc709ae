#pragma once

#include <stdexcept>
#include <string>

namespace deckforge {

enum class Errc {
  io_error,
  parse_error,
  source_empty,
  source_unavailable,
  mixed_kinds,
  all_children_failed,
  duplicate_function,
  unknown_function,
  undefined_rule,
  empty_rule,
  expansion_exhausted,
  depth_exceeded,
  no_admissible_generator,
  schema_error,
  assembly_exhausted,
  unresolvable_media,
  oversized_media,
  invalid_argument,
};

const char* errc_name(Errc code);

/// Exception carrying a machine-readable code plus a human message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace deckforge
