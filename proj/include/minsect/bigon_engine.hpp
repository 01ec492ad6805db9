#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "minsect/representative.hpp"

namespace minsect {

enum class Sign { Plus, Minus };

struct TraceDirection {
  Sign first = Sign::Plus;
  Sign second = Sign::Plus;

  friend constexpr bool operator==(TraceDirection, TraceDirection) = default;
};

// Scan order used by the minimizer.
inline constexpr std::array<TraceDirection, 4> kTraceDirections{{
    {Sign::Plus, Sign::Plus},
    {Sign::Plus, Sign::Minus},
    {Sign::Minus, Sign::Plus},
    {Sign::Minus, Sign::Minus},
}};

std::string to_string(TraceDirection d);

// Two traced strands exactly as walked: leg1[m] pairs with leg2[m], the first
// pair is the starting intersection and the last pair the closing one.
struct RawTrace {
  std::vector<std::size_t> leg1;
  std::vector<std::size_t> leg2;
  TraceDirection direction;
};

// A bigon in normal form: leg1 runs forward through C; leg2 runs forward for
// (+,+) and backward for (+,-). leg1[m] and leg2[m] are traced together.
struct CombinatorialBigon {
  std::vector<std::size_t> leg1;
  std::vector<std::size_t> leg2;
  TraceDirection orientation;

  std::size_t length() const noexcept { return leg1.size(); }

  friend bool operator==(const CombinatorialBigon&, const CombinatorialBigon&) = default;
};

enum class BigonKind {
  RemovableProper,
  RemovableShared,
  ImproperSharedTwoPlus,
  ImproperCase6,
};

struct BigonClass {
  BigonKind kind = BigonKind::RemovableProper;
  int shared_case = 0;  // 1..6 for one shared segment, else 0

  bool removable() const noexcept {
    return kind == BigonKind::RemovableProper || kind == BigonKind::RemovableShared;
  }

  friend constexpr bool operator==(const BigonClass&, const BigonClass&) = default;
};

std::string to_string(BigonClass c);

// One point transposition on a side, written with lowercase labels; the
// uppercase mirror moves with it.
struct Swap {
  int letter = 0;
  int a = 0;
  int b = 0;

  friend constexpr bool operator==(const Swap&, const Swap&) = default;
};

// Walks two strands away from the intersection (k, l) in direction `dir`.
// Returns nullopt when the strands split to different sides, a strand meets
// the other's segment, or N steps pass without a second intersection.
// Throws NotAnIntersection if segments k and l do not cross.
std::optional<CombinatorialBigon> trace(const PointList& p, const SegmentList& c, std::size_t k,
                                        std::size_t l, TraceDirection dir);

// (-,-) becomes (+,+) read end-to-start; (-,+) becomes (+,-) with legs swapped.
CombinatorialBigon normalize(const RawTrace& raw);

// Segments used by both legs, in leg1 order. Throws StructureViolation if they
// are not arranged as a prefix of one leg and suffix of the other.
std::vector<std::size_t> shared_segments(const CombinatorialBigon& b);

// The six terminal points of a one-shared bigon, relabeled so that its first
// segment k is the last segment of the other leg; l starts the other leg and
// i ends the first.
struct SixPoints {
  std::size_t k, l, i;
};
SixPoints six_point_segments(const CombinatorialBigon& b);

// Matches the cyclic order of k1,k2,l1,l2,i1,i2 (up to rotation and reversal)
// against the six canonical orderings; 0 when none matches.
int match_shared_case(const PointList& p, const SegmentList& c, const SixPoints& s);

// Intersections among the three terminal segments for each canonical case,
// before and after the removal transpositions.
struct CaseDelta {
  int before;
  int after;
};
CaseDelta case_delta(int shared_case);

BigonClass classify(const PointList& p, const SegmentList& c, const CombinatorialBigon& b);

// The transpositions that homotope the bigon away: the m-th interface point
// of leg1 trades places with the m-th interface point of leg2, m = 1..L-1.
std::vector<Swap> removal_swaps(const SegmentList& c, const CombinatorialBigon& b);

void apply_swaps(PointList& p, const std::vector<Swap>& swaps);

// Throws NotRemovable unless classify() says the bigon is removable.
PointList apply_removal(const PointList& p, const SegmentList& c, const CombinatorialBigon& b);

}  // namespace minsect
