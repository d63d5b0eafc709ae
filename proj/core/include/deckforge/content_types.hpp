#pragma once

#include <string>

namespace deckforge {

enum class SourceKind { text, image, tupled };
enum class Flavour { neutral, odd, cute, vintage, inspirational, chart, gif };
enum class MediaKind { still, animated };

const char* source_kind_name(SourceKind k);
const char* flavour_name(Flavour f);
const char* media_kind_name(MediaKind m);
Flavour parse_flavour(const std::string& name);

/// One piece of image content. asset_id is the stable identity
/// (source name + canonical locator relative to the corpus root), so it is
/// the same across runs and machines; locator is where the bytes can
/// actually be read in the active mode.
struct ImageAsset {
  std::string asset_id;
  std::string locator;
  MediaKind media_kind = MediaKind::still;
  std::string attribution;
};

struct TextContent {
  std::string text;
  std::string source_name;
  bool related_to_seed = false;
};

}  // namespace deckforge
