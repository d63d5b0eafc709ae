#pragma once

#include <string>
#include <vector>

#include "deckforge/model.hpp"
#include "deckforge/rng.hpp"
#include "deckforge/semantic_graph.hpp"

namespace deckforge {

/// Per-slide topic words plus the walk audit trail. parent_of[i] is the
/// seed that seeds[i] was derived from, or "" where the sequencer forced
/// the topic (first slide, scheduled returns, last slide, and backtrack
/// exhaustion fallbacks).
struct SeedSequence {
  std::vector<std::string> seeds;
  std::vector<size_t> topic_positions;
  std::vector<std::string> parent_of;
};

/// Walks the word web starting from the topic. The first and last seeds
/// are the topic; the topic is re-inserted at gaps drawn uniformly from
/// [min_gap, max_gap]. Between returns, each seed is a neighbor of the
/// previous one; a seed with no usable neighbor triggers backtracking to
/// the seed two positions earlier (then four, ...) up to
/// max_backtrack_depth ancestors, after which the topic fills the slot.
/// Total: degenerate graphs degrade to all-topic sequences.
SeedSequence generate_seeds(const Topic& topic, size_t n, const RelatedTermsProvider& provider,
                            const WalkConfig& config, Rng& rng);

}  // namespace deckforge
