#include "deckforge/semantic_graph.hpp"

#include <algorithm>
#include <fstream>

#include "deckforge/error.hpp"
#include "deckforge/text_util.hpp"

namespace deckforge {

namespace {

constexpr const char* kAtLocation = "at_location";

std::vector<Relation> sort_and_limit(std::vector<Relation> rels, const std::string& term,
                                     size_t limit) {
  std::erase_if(rels, [&](const Relation& r) { return r.to_term == term; });
  std::sort(rels.begin(), rels.end(), [](const Relation& a, const Relation& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.to_term < b.to_term;
  });
  if (rels.size() > limit) rels.resize(limit);
  return rels;
}

}  // namespace

void SemanticGraph::add_relation(Relation rel) {
  auto& edges = adjacency_[rel.from_term];
  edges.push_back(std::move(rel));
  ++edge_count_;
}

std::vector<Relation> SemanticGraph::lookup(
    const std::string& term, const std::optional<std::string>& relation_filter) const {
  auto it = adjacency_.find(term);
  if (it == adjacency_.end()) return {};
  if (!relation_filter) return it->second;
  std::vector<Relation> out;
  for (const auto& r : it->second) {
    if (r.relation_kind == *relation_filter) out.push_back(r);
  }
  return out;
}

SemanticGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open graph file " + path.string());

  SemanticGraph graph;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;

    const auto cols = split(line, '\t');
    if (cols.size() != 4) {
      throw Error(Errc::parse_error,
                  "line " + std::to_string(line_no) + ": expected 4 tab-separated columns");
    }
    Relation rel;
    rel.from_term = to_lower(trim(cols[0]));
    rel.relation_kind = to_lower(trim(cols[1]));
    rel.to_term = to_lower(trim(cols[2]));
    if (rel.from_term.empty() || rel.relation_kind.empty() || rel.to_term.empty()) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": empty column");
    }
    try {
      rel.weight = std::stod(cols[3]);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": bad weight");
    }
    if (rel.weight < 0) {
      throw Error(Errc::parse_error, "line " + std::to_string(line_no) + ": negative weight");
    }
    graph.add_relation(std::move(rel));
  }
  return graph;
}

std::vector<Relation> related_terms(const RelatedTermsProvider& provider, const std::string& term,
                                    size_t limit) {
  if (limit == 0) return {};
  return sort_and_limit(provider.lookup(term, std::nullopt), term, limit);
}

std::vector<Relation> related_locations(const RelatedTermsProvider& provider,
                                        const std::string& term, size_t limit) {
  if (limit == 0) return {};
  return sort_and_limit(provider.lookup(term, std::string(kAtLocation)), term, limit);
}

}  // namespace deckforge
