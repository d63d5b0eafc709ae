#include "deckforge/seed_sequencer.hpp"

#include <limits>

#include "deckforge/error.hpp"

namespace deckforge {

namespace {

/// Neighbors of `term` usable as the next walk step: deterministic order,
/// no self-loops, and never the topic itself (topic returns are scheduled,
/// not wandered into).
std::vector<Relation> walk_candidates(const RelatedTermsProvider& provider,
                                      const std::string& term, const std::string& topic) {
  auto rels = related_terms(provider, term, std::numeric_limits<size_t>::max());
  std::erase_if(rels, [&](const Relation& r) { return r.to_term == topic; });
  return rels;
}

size_t pick_candidate(const std::vector<Relation>& candidates, WalkPolicy policy, Rng& rng) {
  if (policy == WalkPolicy::weight_proportional) {
    double total = 0;
    for (const auto& r : candidates) total += r.weight;
    if (total > 0) {
      const double u = rng.uniform_real() * total;
      double cum = 0;
      for (size_t i = 0; i < candidates.size(); ++i) {
        cum += candidates[i].weight;
        if (u < cum) return i;
      }
      return candidates.size() - 1;
    }
    // All-zero weights fall through to a uniform pick.
  }
  return rng.uniform_index(candidates.size());
}

}  // namespace

SeedSequence generate_seeds(const Topic& topic, size_t n, const RelatedTermsProvider& provider,
                            const WalkConfig& config, Rng& rng) {
  if (n < 1) throw Error(Errc::invalid_argument, "deck length must be >= 1");
  if (config.min_gap < 1 || config.min_gap > config.max_gap) {
    throw Error(Errc::invalid_argument, "gap bounds must satisfy 1 <= min_gap <= max_gap");
  }

  SeedSequence seq;
  seq.seeds.resize(n);
  seq.parent_of.assign(n, "");
  seq.seeds[0] = topic.word;
  seq.topic_positions.push_back(0);
  if (n == 1) return seq;

  auto draw_gap = [&] {
    return static_cast<size_t>(
        rng.uniform_int(static_cast<int64_t>(config.min_gap), static_cast<int64_t>(config.max_gap)));
  };
  size_t next_topic_at = draw_gap();

  for (size_t i = 1; i < n; ++i) {
    const bool forced_last = (i == n - 1);
    if (forced_last || i == next_topic_at) {
      seq.seeds[i] = topic.word;
      seq.topic_positions.push_back(i);
      if (!forced_last) next_topic_at = i + draw_gap();
      continue;
    }

    // Walk step: neighbors of the previous seed, then backtrack two
    // positions at a time on dead ends.
    bool placed = false;
    for (size_t depth = 0; depth <= config.max_backtrack_depth && !placed; ++depth) {
      const size_t back = depth == 0 ? 1 : 2 * depth;  // previous seed, then -2, -4, ...
      if (back > i) break;
      const std::string& origin = seq.seeds[i - back];
      const auto candidates = walk_candidates(provider, origin, topic.word);
      if (candidates.empty()) continue;
      const size_t pick = pick_candidate(candidates, config.walk_policy, rng);
      seq.seeds[i] = candidates[pick].to_term;
      seq.parent_of[i] = origin;
      placed = true;
    }
    if (!placed) {
      // Exhausted every ancestor: degrade to the topic for this slot.
      seq.seeds[i] = topic.word;
      seq.topic_positions.push_back(i);
      next_topic_at = i + draw_gap();
    }
  }
  return seq;
}

}  // namespace deckforge
