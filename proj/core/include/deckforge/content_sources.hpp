#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "deckforge/content_types.hpp"
#include "deckforge/model.hpp"
#include "deckforge/rng.hpp"

namespace deckforge {

/// Common identity shared by text, image, and tupled providers.
class ContentSourceBase {
 public:
  ContentSourceBase(std::string name, SourceKind kind, Flavour flavour, bool supports_seed)
      : name_(std::move(name)), kind_(kind), flavour_(flavour), supports_seed_(supports_seed) {}
  virtual ~ContentSourceBase() = default;

  const std::string& name() const { return name_; }
  SourceKind kind() const { return kind_; }
  Flavour flavour() const { return flavour_; }
  bool supports_seed() const { return supports_seed_; }

  /// Online sources are non-deterministic and get the caching wrapper;
  /// offline corpora pass through uncached.
  virtual bool is_online() const { return false; }

  /// Tags this source's content adds to a slide (e.g. a quote source
  /// counts toward the quote cap even under a non-quote generator).
  virtual std::vector<Tag> content_tags() const { return {}; }

 private:
  std::string name_;
  SourceKind kind_;
  Flavour flavour_;
  bool supports_seed_;
};

class TextSource : public ContentSourceBase {
 public:
  TextSource(std::string name, Flavour flavour, bool supports_seed)
      : ContentSourceBase(std::move(name), SourceKind::text, flavour, supports_seed) {}

  /// Seed-related content when the provider finds matches, otherwise a
  /// uniformly random item with related_to_seed=false. Never empty;
  /// failure is source_empty or source_unavailable.
  virtual TextContent fetch(const std::string& seed, Rng& rng) = 0;
};

class ImageSource : public ContentSourceBase {
 public:
  ImageSource(std::string name, Flavour flavour, bool supports_seed)
      : ContentSourceBase(std::move(name), SourceKind::image, flavour, supports_seed) {}

  virtual ImageAsset fetch(const std::string& seed, Rng& rng) = 0;

  /// A draw that ignores the seed entirely; used by the assembler's
  /// fallback slide to hunt for not-yet-used assets.
  virtual ImageAsset fetch_random(Rng& rng) { return fetch("", rng); }
};

struct TupleItem {
  std::string caption;
  std::variant<TextContent, ImageAsset> content;
};

/// Jointly generated content items that must cohere (paired captions,
/// generated text driving a matching image).
class TupledSource : public ContentSourceBase {
 public:
  TupledSource(std::string name, Flavour flavour, bool supports_seed)
      : ContentSourceBase(std::move(name), SourceKind::tupled, flavour, supports_seed) {}

  virtual std::vector<TupleItem> fetch(const std::string& seed, Rng& rng) = 0;
};

using SourcePtr = std::shared_ptr<ContentSourceBase>;
using WeightedSource = std::pair<SourcePtr, double>;

/// Weighted union of same-kind sources. Fetch roulette-selects a child by
/// weight and delegates; a failing child is dropped and the rest retried
/// by weight; when every child has failed, all_children_failed.
/// Throws mixed_kinds when children disagree on kind and invalid_argument
/// on empty children or non-positive weights.
SourcePtr combine(std::string name, const std::vector<WeightedSource>& children);

std::shared_ptr<TextSource> as_text(const SourcePtr& source);
std::shared_ptr<ImageSource> as_image(const SourcePtr& source);
std::shared_ptr<TupledSource> as_tupled(const SourcePtr& source);

/// Caching wrapper for online sources: repeat fetches with the same
/// (source, seed) return the stored result. Offline sources are returned
/// unchanged. Cache writes are write-temp-then-rename, so concurrent
/// misses on one key are idempotent last-writer-wins.
SourcePtr cached(const SourcePtr& source, const std::filesystem::path& cache_dir);

/// Adapter harnesses: wrap a plain function as an online source. These
/// carry the provider contract for live services and double as test
/// instrumentation.
std::shared_ptr<TextSource> make_function_text_source(std::string name, Flavour flavour,
                                                      std::function<TextContent(const std::string&)> fn);
std::shared_ptr<ImageSource> make_function_image_source(std::string name, Flavour flavour,
                                                        std::function<ImageAsset(const std::string&)> fn);

}  // namespace deckforge
