#include "deckforge/error.hpp"

namespace deckforge {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::io_error: return "io_error";
    case Errc::parse_error: return "parse_error";
    case Errc::source_empty: return "source_empty";
    case Errc::source_unavailable: return "source_unavailable";
    case Errc::mixed_kinds: return "mixed_kinds";
    case Errc::all_children_failed: return "all_children_failed";
    case Errc::duplicate_function: return "duplicate_function";
    case Errc::unknown_function: return "unknown_function";
    case Errc::undefined_rule: return "undefined_rule";
    case Errc::empty_rule: return "empty_rule";
    case Errc::expansion_exhausted: return "expansion_exhausted";
    case Errc::depth_exceeded: return "depth_exceeded";
    case Errc::no_admissible_generator: return "no_admissible_generator";
    case Errc::schema_error: return "schema_error";
    case Errc::assembly_exhausted: return "assembly_exhausted";
    case Errc::unresolvable_media: return "unresolvable_media";
    case Errc::oversized_media: return "oversized_media";
    case Errc::invalid_argument: return "invalid_argument";
  }
  return "error";
}

}  // namespace deckforge
