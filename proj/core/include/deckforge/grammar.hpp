#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "deckforge/rng.hpp"

namespace deckforge {

enum class GrammarFnKind { transform, predicate };

/// Arity-1 function over strings. Transforms rewrite the value and signal
/// failure with nullopt; predicates only pass (engaged result) or fail.
using GrammarFn = std::function<std::optional<std::string>(const std::string&)>;

struct GrammarFunction {
  GrammarFnKind kind = GrammarFnKind::transform;
  GrammarFn fn;
};

class FunctionRegistry {
 public:
  /// Throws duplicate_function when the name is taken.
  void register_function(const std::string& name, GrammarFnKind kind, GrammarFn fn);

  const GrammarFunction* find(const std::string& name) const;

 private:
  std::map<std::string, GrammarFunction> functions_;
};

/// Tracery-compatible rule map. Templates may contain `#rule#`
/// nonterminals and `{var.fn1.fn2}` external slots; rule references are
/// validated at parse time, external slots at expansion time.
struct Grammar {
  std::map<std::string, std::vector<std::string>> rules;

  bool has_rule(const std::string& name) const { return rules.count(name) > 0; }

  /// Merges another grammar's rules in; duplicate rule names are an error.
  void merge(const Grammar& other);
};

struct ExpansionContext {
  std::map<std::string, std::string> variables;
  const FunctionRegistry* functions = nullptr;
};

struct ExpansionBudget {
  size_t max_attempts = 100;
  size_t max_depth = 50;
};

/// Parses a JSON object of string-or-string-list values into a Grammar.
Grammar parse_grammar(const std::string& text);
Grammar load_grammar(const std::string& path);

/// Fully expands `rule`: nonterminals are replaced by uniformly sampled
/// alternatives, then every `{var.f1.f2}` slot is resolved by looking up
/// the variable and applying functions left to right. A missing variable,
/// a failed predicate, or a transform failure resamples the entire
/// expansion; after max_attempts failures, expansion_exhausted.
std::string expand(const Grammar& grammar, const std::string& rule, const ExpansionContext& ctx,
                   const ExpansionBudget& budget, Rng& rng);

/// Registry preloaded with the built-in transforms and predicates:
/// title, lower, upper, a_an, plural, ing, and is_noun over `nouns`.
/// Corpus-bound functions (wikihow_action, related_term) are registered
/// by the service wiring on top of this.
FunctionRegistry make_builtin_registry(std::set<std::string> nouns);

}  // namespace deckforge
