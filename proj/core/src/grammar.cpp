#include "deckforge/grammar.hpp"

#include <json.hpp>

#include "deckforge/error.hpp"
#include "deckforge/fs_util.hpp"
#include "deckforge/text_util.hpp"

namespace deckforge {

namespace {

/// Calls visit(name) for every `#name#` reference in a template string.
template <typename Fn>
void for_each_rule_ref(const std::string& tmpl, Fn&& visit) {
  size_t pos = 0;
  while (true) {
    const size_t open = tmpl.find('#', pos);
    if (open == std::string::npos) return;
    const size_t close = tmpl.find('#', open + 1);
    if (close == std::string::npos) {
      throw Error(Errc::parse_error, "unbalanced '#' in template: " + tmpl);
    }
    visit(tmpl.substr(open + 1, close - open - 1));
    pos = close + 1;
  }
}

struct SlotFailure {};  // retry marker, never escapes expand()

class Expander {
 public:
  Expander(const Grammar& grammar, const ExpansionContext& ctx, const ExpansionBudget& budget,
           Rng& rng)
      : grammar_(grammar), ctx_(ctx), budget_(budget), rng_(rng) {}

  std::string expand_rule(const std::string& rule, size_t depth) {
    if (depth > budget_.max_depth) {
      throw Error(Errc::depth_exceeded, "rule '" + rule + "' exceeded expansion depth");
    }
    auto it = grammar_.rules.find(rule);
    if (it == grammar_.rules.end()) {
      throw Error(Errc::undefined_rule, rule);
    }
    const auto& alts = it->second;
    const std::string& tmpl =
        alts.size() == 1 ? alts.front() : alts[rng_.uniform_index(alts.size())];
    return expand_template(tmpl, depth);
  }

  std::string resolve_slots(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    size_t pos = 0;
    while (pos < text.size()) {
      const size_t open = text.find('{', pos);
      if (open == std::string::npos) {
        out.append(text, pos, std::string::npos);
        break;
      }
      const size_t close = text.find('}', open + 1);
      if (close == std::string::npos) {
        throw Error(Errc::parse_error, "unbalanced '{' in expansion: " + text);
      }
      out.append(text, pos, open - pos);
      out += resolve_one_slot(text.substr(open + 1, close - open - 1));
      pos = close + 1;
    }
    return out;
  }

 private:
  std::string expand_template(const std::string& tmpl, size_t depth) {
    std::string out;
    out.reserve(tmpl.size());
    size_t pos = 0;
    while (pos < tmpl.size()) {
      const size_t open = tmpl.find('#', pos);
      if (open == std::string::npos) {
        out.append(tmpl, pos, std::string::npos);
        break;
      }
      const size_t close = tmpl.find('#', open + 1);
      if (close == std::string::npos) {
        throw Error(Errc::parse_error, "unbalanced '#' in template: " + tmpl);
      }
      out.append(tmpl, pos, open - pos);
      out += expand_rule(tmpl.substr(open + 1, close - open - 1), depth + 1);
      pos = close + 1;
    }
    return out;
  }

  std::string resolve_one_slot(const std::string& slot) {
    const auto parts = split(slot, '.');
    const std::string& var = parts.front();
    auto vit = ctx_.variables.find(var);
    if (vit == ctx_.variables.end()) throw SlotFailure{};  // missing variable: resample
    std::string value = vit->second;

    for (size_t i = 1; i < parts.size(); ++i) {
      const GrammarFunction* fn = ctx_.functions ? ctx_.functions->find(parts[i]) : nullptr;
      if (!fn) throw Error(Errc::unknown_function, parts[i]);
      const auto result = fn->fn(value);
      if (fn->kind == GrammarFnKind::predicate) {
        if (!result) throw SlotFailure{};  // failed check: resample
        // Predicates never alter the value.
      } else {
        if (!result) throw SlotFailure{};  // transform reported failure
        value = *result;
      }
    }
    return value;
  }

  const Grammar& grammar_;
  const ExpansionContext& ctx_;
  const ExpansionBudget& budget_;
  Rng& rng_;
};

}  // namespace

void FunctionRegistry::register_function(const std::string& name, GrammarFnKind kind,
                                         GrammarFn fn) {
  if (functions_.count(name)) throw Error(Errc::duplicate_function, name);
  functions_[name] = GrammarFunction{kind, std::move(fn)};
}

const GrammarFunction* FunctionRegistry::find(const std::string& name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

void Grammar::merge(const Grammar& other) {
  for (const auto& [name, alts] : other.rules) {
    if (rules.count(name)) throw Error(Errc::parse_error, "duplicate rule on merge: " + name);
    rules[name] = alts;
  }
}

Grammar parse_grammar(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::parse_error, "grammar must be a JSON object");

  Grammar grammar;
  for (const auto& [name, value] : doc.items()) {
    std::vector<std::string> alts;
    if (value.is_string()) {
      alts.push_back(value.get<std::string>());
    } else if (value.is_array()) {
      for (const auto& alt : value) {
        if (!alt.is_string()) {
          throw Error(Errc::parse_error, "rule '" + name + "' has a non-string alternative");
        }
        alts.push_back(alt.get<std::string>());
      }
    } else {
      throw Error(Errc::parse_error, "rule '" + name + "' must be a string or string list");
    }
    if (alts.empty()) throw Error(Errc::empty_rule, name);
    grammar.rules[name] = std::move(alts);
  }

  // Validate every nonterminal reference up front.
  for (const auto& [name, alts] : grammar.rules) {
    for (const auto& tmpl : alts) {
      for_each_rule_ref(tmpl, [&](const std::string& ref) {
        if (ref.empty()) throw Error(Errc::parse_error, "empty rule reference in '" + name + "'");
        if (!grammar.has_rule(ref)) throw Error(Errc::undefined_rule, ref);
      });
    }
  }
  return grammar;
}

Grammar load_grammar(const std::string& path) { return parse_grammar(read_file(path)); }

std::string expand(const Grammar& grammar, const std::string& rule, const ExpansionContext& ctx,
                   const ExpansionBudget& budget, Rng& rng) {
  Expander expander(grammar, ctx, budget, rng);
  for (size_t attempt = 0; attempt < budget.max_attempts; ++attempt) {
    const std::string text = expander.expand_rule(rule, 0);
    try {
      return expander.resolve_slots(text);
    } catch (const SlotFailure&) {
      continue;  // resample the entire expansion
    }
  }
  throw Error(Errc::expansion_exhausted,
              "rule '" + rule + "' after " + std::to_string(budget.max_attempts) + " attempts");
}

FunctionRegistry make_builtin_registry(std::set<std::string> nouns) {
  FunctionRegistry registry;
  registry.register_function("title", GrammarFnKind::transform,
                             [](const std::string& v) { return title_case(v); });
  registry.register_function("lower", GrammarFnKind::transform,
                             [](const std::string& v) { return to_lower(v); });
  registry.register_function("upper", GrammarFnKind::transform,
                             [](const std::string& v) { return to_upper(v); });
  registry.register_function("a_an", GrammarFnKind::transform,
                             [](const std::string& v) { return a_an(v); });
  registry.register_function("plural", GrammarFnKind::transform,
                             [](const std::string& v) { return pluralize(v); });
  registry.register_function("ing", GrammarFnKind::transform,
                             [](const std::string& v) { return gerund(v); });
  registry.register_function(
      "is_noun", GrammarFnKind::predicate,
      [nouns = std::move(nouns)](const std::string& v) -> std::optional<std::string> {
        if (nouns.count(to_lower(v))) return v;
        return std::nullopt;
      });
  return registry;
}

}  // namespace deckforge
