#include "minsect/minimizer.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "minsect/error.hpp"

namespace minsect {
namespace {

std::vector<std::pair<EdgePoint, EdgePoint>> labeled(const std::vector<Swap>& swaps) {
  std::vector<std::pair<EdgePoint, EdgePoint>> out;
  for (const auto& s : swaps) {
    const Symbol lo{s.letter, false};
    const auto [a, b] = std::minmax(s.a, s.b);
    out.push_back({{lo, a}, {lo, b}});
    out.push_back({{lo.inverse(), a}, {lo.inverse(), b}});
  }
  return out;
}

}  // namespace

MinimizationReport minimize(const SurfaceWord& surface, const CyclicWord& word,
                            const MinimizeOptions& options) {
  return minimize_from(surface, word, build_initial(surface, word), options);
}

MinimizationReport minimize_from(const SurfaceWord& surface, const CyclicWord& word,
                                 Representative start, const MinimizeOptions& options) {
  MinimizationReport report;
  report.surface = surface;
  report.word = word;
  PointList p = std::move(start.points);
  const SegmentList c = std::move(start.segments);
  report.initial_count = intersection_count(p, c);

  for (std::size_t pass = 0;; ++pass) {
    // A full pass classifies every candidate; the first removable one in
    // scan order is the one removed.
    std::optional<CombinatorialBigon> chosen;
    std::optional<BigonClass> chosen_cls;
    for (auto [i, j] : intersecting_pairs(p, c)) {
      for (auto dir : kTraceDirections) {
        auto bigon = trace(p, c, i, j, dir);
        if (!bigon) continue;
        const BigonClass cls = classify(p, c, *bigon);
        if (options.on_bigon) options.on_bigon({p, c, *bigon, cls, pass});
        if (!cls.removable()) {
          ++report.skipped_improper;
        } else if (!chosen) {
          chosen = std::move(bigon);
          chosen_cls = cls;
        }
      }
    }
    if (!chosen) break;

    RemovalStep step;
    step.count_before = intersection_count(p, c);
    const auto swaps = removal_swaps(c, *chosen);
    apply_swaps(p, swaps);
    step.count_after = intersection_count(p, c);
    step.swaps = labeled(swaps);
    step.bigon = std::move(*chosen);
    step.cls = *chosen_cls;
    if (options.on_step) options.on_step(step);
    report.steps.push_back(std::move(step));
  }

  report.final_count = intersection_count(p, c);
  report.final_points = std::move(p);
  report.final_segments = c;
  return report;
}

std::uint64_t oracle_search_size(const SurfaceWord& surface, const CyclicWord& word) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (int m : multiplicities(surface, word)) {
    for (int f = 2; f <= m; ++f) {
      if (total > kMax / static_cast<std::uint64_t>(f)) return kMax;
      total *= static_cast<std::uint64_t>(f);
    }
  }
  return total;
}

void for_each_point_order(const SurfaceWord& surface, const CyclicWord& word,
                          const std::function<void(const PointList&)>& visit) {
  const auto m = multiplicities(surface, word);
  std::vector<std::vector<int>> order = PointList::identity(surface, m).edge_orders();
  // Odometer over the per-side permutations; next_permutation wraps each
  // wheel back to sorted order when it rolls over.
  for (;;) {
    visit(PointList(surface, order));
    std::size_t e = 0;
    while (e < order.size() && !std::next_permutation(order[e].begin(), order[e].end())) ++e;
    if (e == order.size()) return;
  }
}

std::size_t oracle_min(const SurfaceWord& surface, const CyclicWord& word, std::uint64_t cap) {
  const auto size = oracle_search_size(surface, word);
  if (size > cap) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                "oracle search space " + std::to_string(size) + " exceeds cap " +
                    std::to_string(cap));
  }
  const SegmentList c = build_initial(surface, word).segments;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_point_order(surface, word, [&](const PointList& p) {
    best = std::min(best, intersection_count(p, c));
  });
  return best;
}

}  // namespace minsect
