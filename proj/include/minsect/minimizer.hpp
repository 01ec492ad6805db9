#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "minsect/bigon_engine.hpp"
#include "minsect/representative.hpp"
#include "minsect/words.hpp"

namespace minsect {

struct RemovalStep {
  CombinatorialBigon bigon;
  BigonClass cls;
  std::vector<std::pair<EdgePoint, EdgePoint>> swaps;  // lowercase pair, then its mirror
  std::size_t count_before = 0;
  std::size_t count_after = 0;
};

struct MinimizationReport {
  SurfaceWord surface;
  CyclicWord word;
  std::size_t initial_count = 0;
  std::size_t final_count = 0;
  std::vector<RemovalStep> steps;
  PointList final_points;
  SegmentList final_segments;
  std::size_t skipped_improper = 0;
};

// Every bigon the scan classifies, with the point list it was found in.
struct BigonEvent {
  const PointList& points;
  const SegmentList& segments;
  const CombinatorialBigon& bigon;
  BigonClass cls;
  std::size_t pass;
};

struct MinimizeOptions {
  std::function<void(const BigonEvent&)> on_bigon;
  std::function<void(const RemovalStep&)> on_step;
};

// Repeats: scan the crossings in lexicographic order, trace each in the four
// directions, classify every bigon found, and remove the first removable one.
// Stops after a pass that finds nothing removable.
MinimizationReport minimize(const SurfaceWord& surface, const CyclicWord& word,
                            const MinimizeOptions& options = {});

// Same loop started from an arbitrary configuration of the same curve.
MinimizationReport minimize_from(const SurfaceWord& surface, const CyclicWord& word,
                                 Representative start, const MinimizeOptions& options = {});

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

// Number of point orders the brute-force oracle would visit (saturating).
std::uint64_t oracle_search_size(const SurfaceWord& surface, const CyclicWord& word);

// Exhaustive minimum of intersection_count over all per-side point orders,
// with C fixed to the canonical construction. Throws SearchSpaceTooLarge when
// the product of m_e! exceeds `cap`.
std::size_t oracle_min(const SurfaceWord& surface, const CyclicWord& word,
                       std::uint64_t cap = kDefaultOracleCap);

// Visits every per-side point order of the canonical construction.
void for_each_point_order(const SurfaceWord& surface, const CyclicWord& word,
                          const std::function<void(const PointList&)>& visit);

}  // namespace minsect
