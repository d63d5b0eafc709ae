#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace deckforge {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);
bool contains_ci(std::string_view haystack, std::string_view needle);
std::vector<std::string> split(std::string_view s, char sep);

/// Title case with the usual small-word exceptions ("a", "of", "to", ...)
/// left lowercase except in first position: "pet a cat" -> "Pet a Cat".
std::string title_case(std::string_view s);

/// Prepend an indefinite article chosen by the vowel-letter heuristic.
std::string a_an(std::string_view s);

/// Naive English pluralization (s / es / ies).
std::string pluralize(std::string_view s);

/// Naive gerund: "bake" -> "baking", "tie" -> "tying", "walk" -> "walking".
std::string gerund(std::string_view s);

/// Strips a leading "How to " or "<N> ways to " (case-insensitive) and
/// lowercases the remainder: "How to Pet a Cat" -> "pet a cat".
/// A title with no such prefix is lowercased as-is.
std::string wikihow_action_from_title(std::string_view title);

std::string xml_escape(std::string_view s);
std::string json_escape(std::string_view s);

/// Fixed-notation float with 6 decimal digits, the canonical-manifest form.
std::string format_double6(double v);

std::string base64_encode(const unsigned char* data, size_t len);

}  // namespace deckforge
