#include "json.hpp"

#include "minsect/cli_io.hpp"

namespace minsect {

std::string emit_json(const MinimizationReport& report) {
  using nlohmann::ordered_json;
  const SurfaceWord& surface = report.surface;

  ordered_json steps = ordered_json::array();
  for (const auto& s : report.steps) {
    ordered_json swaps = ordered_json::array();
    for (const auto& [a, b] : s.swaps) swaps.push_back({label(surface, a), label(surface, b)});
    ordered_json step;
    step["orientation"] = to_string(s.bigon.orientation);
    step["leg1"] = s.bigon.leg1;
    step["leg2"] = s.bigon.leg2;
    step["swaps"] = std::move(swaps);
    step["count_before"] = s.count_before;
    step["count_after"] = s.count_after;
    steps.push_back(std::move(step));
  }

  ordered_json points = ordered_json::array();
  for (const auto& pt : report.final_points.cyclic_order()) points.push_back(label(surface, pt));

  ordered_json segments = ordered_json::array();
  for (const auto& seg : report.final_segments) {
    segments.push_back({label(surface, seg.start), label(surface, seg.end)});
  }

  ordered_json doc;
  doc["surface"] = surface.str();
  doc["word"] = report.word.str();
  doc["initial_count"] = report.initial_count;
  doc["final_count"] = report.final_count;
  doc["skipped_improper"] = report.skipped_improper;
  doc["steps"] = std::move(steps);
  doc["P"] = std::move(points);
  doc["C"] = std::move(segments);
  return doc.dump(2) + "\n";
}

}  // namespace minsect
