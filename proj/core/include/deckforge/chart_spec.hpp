#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace deckforge {

enum class ChartKind { histogram, pie, scatter };

const char* chart_kind_name(ChartKind k);

/// Abstract chart description. Rendering happens in the exporters;
/// the pie invariant (values renormalized to sum 100) is established by
/// the chart engine before a spec leaves it.
struct ChartSpec {
  ChartKind kind = ChartKind::histogram;
  std::string title;
  std::vector<std::pair<std::string, double>> categories;  // histogram / pie
  std::vector<std::pair<double, double>> points;           // scatter
  std::optional<std::pair<std::string, std::string>> axis_labels;
};

}  // namespace deckforge
