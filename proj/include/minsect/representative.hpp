#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minsect/words.hpp"

namespace minsect {

// A crossing of the curve with a labeled side. (s, k) and (inverse(s), k)
// name the same point of the surface.
struct EdgePoint {
  Symbol symbol;
  int index = 1;

  constexpr EdgePoint inverse() const noexcept { return {symbol.inverse(), index}; }

  friend constexpr auto operator<=>(const EdgePoint&, const EdgePoint&) = default;
};

std::string label(const SurfaceWord& surface, EdgePoint pt);

// Chord of the fundamental polygon, oriented along the curve.
struct WordSegment {
  EdgePoint start;
  EdgePoint end;

  friend constexpr bool operator==(const WordSegment&, const WordSegment&) = default;
};

// Cyclic order of all crossing points around the polygon (the point list P).
//
// Stored as one permutation per generator: edge_order(e)[j] is the index of
// the j-th lowercase point met clockwise along side e. The block for the
// inverse side lists the same indices reversed, so the gluing constraint
// holds for every value of the permutations.
class PointList {
 public:
  PointList() = default;
  PointList(const SurfaceWord& surface, std::vector<std::vector<int>> edge_order);

  // Identity order on every side, with the given crossing multiplicities.
  static PointList identity(const SurfaceWord& surface, std::span<const int> multiplicity);

  std::size_t size() const noexcept { return total_; }
  int multiplicity(int letter) const { return static_cast<int>(order_.at(letter).size()); }
  const std::vector<int>& edge_order(int letter) const { return order_.at(letter); }
  const std::vector<std::vector<int>>& edge_orders() const noexcept { return order_; }

  // Index of `pt` in the derived cyclic list, 0..2N-1. Throws UnknownPoint.
  std::size_t position(EdgePoint pt) const;

  // The derived cyclic list, starting at the first point of the first side.
  std::vector<EdgePoint> cyclic_order() const;

  // Exchanges the places of points `a` and `b` on side `letter`; the mirrored
  // points on the inverse side follow automatically.
  void transpose(int letter, int a, int b);

  friend bool operator==(const PointList& a, const PointList& b) {
    return a.order_ == b.order_;
  }

 private:
  void reindex();

  std::vector<Symbol> sides_;
  std::vector<std::vector<int>> order_;
  // pos_[letter][inverted][index - 1]
  std::vector<std::vector<std::size_t>> pos_[2];
  std::size_t total_ = 0;
};

// The segment list C. Never mutated by the minimization.
class SegmentList {
 public:
  SegmentList() = default;
  explicit SegmentList(std::vector<WordSegment> segments) : segments_(std::move(segments)) {}

  std::size_t size() const noexcept { return segments_.size(); }
  const WordSegment& operator[](std::size_t i) const { return segments_[i]; }
  auto begin() const { return segments_.begin(); }
  auto end() const { return segments_.end(); }

  friend bool operator==(const SegmentList&, const SegmentList&) = default;

 private:
  std::vector<WordSegment> segments_;
};

struct Representative {
  PointList points;
  SegmentList segments;
};

// Crossing multiplicity per generator: occurrences of e and E in the word.
std::vector<int> multiplicities(const SurfaceWord& surface, const CyclicWord& word);

// Canonical segmented representative: identity point order, crossings of
// each generator numbered m, m-1, ..., 1 in reading order.
Representative build_initial(const SurfaceWord& surface, const CyclicWord& word);

// True iff the endpoints of `t` lie in different open arcs cut by `s`.
// Throws SameSegment when s == t.
bool interleaves(const PointList& p, const WordSegment& s, const WordSegment& t);
bool interleaves(const PointList& p, const SegmentList& c, std::size_t i, std::size_t j);

std::size_t intersection_count(const PointList& p, const SegmentList& c);

// All intersecting pairs (i, j), i < j, in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> intersecting_pairs(const PointList& p,
                                                                    const SegmentList& c);

}  // namespace minsect
