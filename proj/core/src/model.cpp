#include "deckforge/model.hpp"

#include <cmath>

#include "deckforge/error.hpp"
#include "deckforge/text_util.hpp"

namespace deckforge {

Topic Topic::from_suggestion(const std::string& raw) {
  std::string word = to_lower(trim(raw));
  if (word.empty()) throw Error(Errc::invalid_argument, "empty topic");
  if (word.find('\n') != std::string::npos || word.find('\r') != std::string::npos) {
    throw Error(Errc::invalid_argument, "topic contains a newline");
  }
  return Topic{word};
}

const char* placeholder_kind_name(PlaceholderKind k) {
  switch (k) {
    case PlaceholderKind::title_text: return "title_text";
    case PlaceholderKind::subtitle_text: return "subtitle_text";
    case PlaceholderKind::body_text: return "body_text";
    case PlaceholderKind::caption_text: return "caption_text";
    case PlaceholderKind::image: return "image";
    case PlaceholderKind::chart: return "chart";
  }
  return "?";
}

PlaceholderKind parse_placeholder_kind(const std::string& name) {
  if (name == "title_text") return PlaceholderKind::title_text;
  if (name == "subtitle_text") return PlaceholderKind::subtitle_text;
  if (name == "body_text") return PlaceholderKind::body_text;
  if (name == "caption_text") return PlaceholderKind::caption_text;
  if (name == "image") return PlaceholderKind::image;
  if (name == "chart") return PlaceholderKind::chart;
  throw Error(Errc::schema_error, "unknown placeholder kind: " + name);
}

bool is_text_kind(PlaceholderKind k) {
  return k == PlaceholderKind::title_text || k == PlaceholderKind::subtitle_text ||
         k == PlaceholderKind::body_text || k == PlaceholderKind::caption_text;
}

const Placeholder* SlideTemplate::find(const std::string& id) const {
  for (const auto& p : placeholders) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

size_t TagCap::allowed(size_t deck_len) const {
  if (cap_kind == CapKind::absolute) return static_cast<size_t>(value);
  return static_cast<size_t>(std::floor(value * static_cast<double>(deck_len)));
}

bool fill_matches_kind(const FilledContent& fill, PlaceholderKind kind) {
  if (is_text_kind(kind)) return std::holds_alternative<TextFill>(fill);
  if (kind == PlaceholderKind::image) return std::holds_alternative<ImageAsset>(fill);
  return std::holds_alternative<ChartSpec>(fill);
}

std::vector<std::string> Slide::image_asset_ids() const {
  std::vector<std::string> ids;
  for (const auto& [ph, fill] : fills) {
    if (const auto* img = std::get_if<ImageAsset>(&fill)) ids.push_back(img->asset_id);
  }
  return ids;
}

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::duplicate_image: return "duplicate_image";
    case ViolationKind::tag_over_cap: return "tag_over_cap";
    case ViolationKind::topic_gap: return "topic_gap";
    case ViolationKind::off_topic_endpoint: return "off_topic_endpoint";
  }
  return "?";
}

const char* chart_kind_name(ChartKind k) {
  switch (k) {
    case ChartKind::histogram: return "histogram";
    case ChartKind::pie: return "pie";
    case ChartKind::scatter: return "scatter";
  }
  return "?";
}

const char* source_kind_name(SourceKind k) {
  switch (k) {
    case SourceKind::text: return "text";
    case SourceKind::image: return "image";
    case SourceKind::tupled: return "tupled";
  }
  return "?";
}

const char* flavour_name(Flavour f) {
  switch (f) {
    case Flavour::neutral: return "neutral";
    case Flavour::odd: return "odd";
    case Flavour::cute: return "cute";
    case Flavour::vintage: return "vintage";
    case Flavour::inspirational: return "inspirational";
    case Flavour::chart: return "chart";
    case Flavour::gif: return "gif";
  }
  return "?";
}

Flavour parse_flavour(const std::string& name) {
  if (name == "neutral") return Flavour::neutral;
  if (name == "odd") return Flavour::odd;
  if (name == "cute") return Flavour::cute;
  if (name == "vintage") return Flavour::vintage;
  if (name == "inspirational") return Flavour::inspirational;
  if (name == "chart") return Flavour::chart;
  if (name == "gif") return Flavour::gif;
  throw Error(Errc::schema_error, "unknown flavour: " + name);
}

const char* media_kind_name(MediaKind m) {
  return m == MediaKind::still ? "still" : "animated";
}

}  // namespace deckforge
