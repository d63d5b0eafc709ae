#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "deckforge/chart_spec.hpp"
#include "deckforge/content_types.hpp"

namespace deckforge {

/// Audience-supplied presentation topic: a trimmed, lowercased token.
struct Topic {
  std::string word;

  /// Normalizes and validates a raw suggestion. Throws invalid_argument
  /// when the result would be empty or contain a newline.
  static Topic from_suggestion(const std::string& raw);
};

enum class PlaceholderKind { title_text, subtitle_text, body_text, caption_text, image, chart };

const char* placeholder_kind_name(PlaceholderKind k);
PlaceholderKind parse_placeholder_kind(const std::string& name);
bool is_text_kind(PlaceholderKind k);

/// Fractional geometry of a placeholder within the slide area, each in [0,1].
struct PlaceholderGeometry {
  double x = 0;
  double y = 0;
  double w = 1;
  double h = 1;
};

struct Placeholder {
  std::string id;
  PlaceholderKind kind = PlaceholderKind::body_text;
  PlaceholderGeometry geometry;
};

struct SlideTemplate {
  std::string template_id;
  std::vector<Placeholder> placeholders;

  const Placeholder* find(const std::string& id) const;
};

using Tag = std::string;

enum class CapKind { absolute, fraction_of_deck };

struct TagCap {
  Tag tag;
  CapKind cap_kind = CapKind::absolute;
  double value = 0;

  /// Allowed slide count for a deck of n slides. Fraction caps evaluate as
  /// floor(value * n).
  size_t allowed(size_t deck_len) const;
};

enum class WalkPolicy { uniform, weight_proportional };

struct WalkConfig {
  size_t min_gap = 3;
  size_t max_gap = 6;
  size_t max_backtrack_depth = 5;
  WalkPolicy walk_policy = WalkPolicy::weight_proportional;
};

struct TextFill {
  std::string text;
};

using FilledContent = std::variant<TextFill, ImageAsset, ChartSpec>;

bool fill_matches_kind(const FilledContent& fill, PlaceholderKind kind);

struct SlideMeta {
  std::string seed;
  std::string generator;
  size_t round = 0;
  std::set<Tag> tags;
};

struct Slide {
  std::string template_id;
  std::map<std::string, FilledContent> fills;  // placeholder id -> content
  SlideMeta meta;

  std::vector<std::string> image_asset_ids() const;
};

struct Deck {
  Topic topic;
  std::vector<Slide> slides;
  std::string schema_name;
  uint64_t master_rng_seed = 0;
};

enum class ViolationKind { duplicate_image, tag_over_cap, topic_gap, off_topic_endpoint };

const char* violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  size_t slide_index = 0;
  std::string detail;
};

}  // namespace deckforge
