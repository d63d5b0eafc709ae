#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace deckforge {

struct Relation {
  std::string from_term;
  std::string relation_kind;  // e.g. related_to, at_location, used_for
  std::string to_term;
  double weight = 0;
};

/// Interface over anything that can answer related-term queries: the
/// offline TSV graph or the live ConceptNet adapter.
class RelatedTermsProvider {
 public:
  virtual ~RelatedTermsProvider() = default;

  /// Raw (unsorted, unfiltered) relations for a term; empty when unknown.
  /// `relation_filter`, when set, restricts to one relation kind.
  virtual std::vector<Relation> lookup(const std::string& term,
                                       const std::optional<std::string>& relation_filter) const = 0;
};

/// Immutable in-memory word web loaded from a TSV edge list.
class SemanticGraph : public RelatedTermsProvider {
 public:
  SemanticGraph() = default;

  void add_relation(Relation rel);

  std::vector<Relation> lookup(const std::string& term,
                               const std::optional<std::string>& relation_filter) const override;

  size_t term_count() const { return adjacency_.size(); }
  size_t edge_count() const { return edge_count_; }

 private:
  std::map<std::string, std::vector<Relation>> adjacency_;
  size_t edge_count_ = 0;
};

/// Loads the TSV graph format: `from<TAB>relation<TAB>to<TAB>weight`, one
/// edge per line; blank lines and lines starting with '#' are skipped.
/// Malformed rows raise parse_error with a 1-based line number.
SemanticGraph load_graph(const std::filesystem::path& path);

/// Up to `limit` relations of `term`, sorted by descending weight with ties
/// broken by lexicographic to_term; self-loops are dropped.
std::vector<Relation> related_terms(const RelatedTermsProvider& provider, const std::string& term,
                                    size_t limit);

/// As related_terms, restricted to at_location edges.
std::vector<Relation> related_locations(const RelatedTermsProvider& provider,
                                        const std::string& term, size_t limit);

}  // namespace deckforge
