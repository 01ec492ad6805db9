#include "minsect/representative.hpp"

#include <algorithm>

#include "minsect/error.hpp"

namespace minsect {

std::string label(const SurfaceWord& surface, EdgePoint pt) {
  return surface.to_char(pt.symbol) + std::to_string(pt.index);
}

PointList::PointList(const SurfaceWord& surface, std::vector<std::vector<int>> edge_order)
    : sides_(surface.symbols()), order_(std::move(edge_order)) {
  if (order_.size() != static_cast<std::size_t>(surface.rank())) {
    throw Error(ErrorCode::StructureViolation, "point list needs one order per generator");
  }
  for (const auto& o : order_) {
    std::vector<int> sorted = o;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (sorted[j] != static_cast<int>(j) + 1) {
        throw Error(ErrorCode::StructureViolation, "edge order is not a permutation of 1..m");
      }
    }
  }
  reindex();
}

PointList PointList::identity(const SurfaceWord& surface, std::span<const int> multiplicity) {
  std::vector<std::vector<int>> order;
  order.reserve(multiplicity.size());
  for (int m : multiplicity) {
    std::vector<int> o(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) o[static_cast<std::size_t>(j)] = j + 1;
    order.push_back(std::move(o));
  }
  return PointList(surface, std::move(order));
}

void PointList::reindex() {
  for (auto& side : pos_) {
    side.assign(order_.size(), {});
    for (std::size_t e = 0; e < order_.size(); ++e) side[e].assign(order_[e].size(), 0);
  }
  std::size_t at = 0;
  for (Symbol s : sides_) {
    const auto& o = order_[static_cast<std::size_t>(s.letter)];
    auto& pos = pos_[s.inverted ? 1 : 0][static_cast<std::size_t>(s.letter)];
    if (!s.inverted) {
      for (int idx : o) pos[static_cast<std::size_t>(idx - 1)] = at++;
    } else {
      for (auto it = o.rbegin(); it != o.rend(); ++it) pos[static_cast<std::size_t>(*it - 1)] = at++;
    }
  }
  total_ = at;
}

std::size_t PointList::position(EdgePoint pt) const {
  const auto letter = static_cast<std::size_t>(pt.symbol.letter);
  if (pt.symbol.letter < 0 || letter >= order_.size() || pt.index < 1 ||
      pt.index > static_cast<int>(order_[letter].size())) {
    throw Error(ErrorCode::UnknownPoint, "point is not part of this configuration");
  }
  return pos_[pt.symbol.inverted ? 1 : 0][letter][static_cast<std::size_t>(pt.index - 1)];
}

std::vector<EdgePoint> PointList::cyclic_order() const {
  std::vector<EdgePoint> out;
  out.reserve(total_);
  for (Symbol s : sides_) {
    const auto& o = order_[static_cast<std::size_t>(s.letter)];
    if (!s.inverted) {
      for (int idx : o) out.push_back({s, idx});
    } else {
      for (auto it = o.rbegin(); it != o.rend(); ++it) out.push_back({s, *it});
    }
  }
  return out;
}

void PointList::transpose(int letter, int a, int b) {
  auto& o = order_.at(static_cast<std::size_t>(letter));
  auto ia = std::find(o.begin(), o.end(), a);
  auto ib = std::find(o.begin(), o.end(), b);
  if (ia == o.end() || ib == o.end()) {
    throw Error(ErrorCode::UnknownPoint, "transposed point is not on this side");
  }
  std::iter_swap(ia, ib);
  reindex();
}

std::vector<int> multiplicities(const SurfaceWord& surface, const CyclicWord& word) {
  std::vector<int> m(static_cast<std::size_t>(surface.rank()), 0);
  for (Symbol s : word.letters()) ++m.at(static_cast<std::size_t>(s.letter));
  return m;
}

Representative build_initial(const SurfaceWord& surface, const CyclicWord& word) {
  const auto m = multiplicities(surface, word);
  std::vector<int> next = m;  // descending index per generator
  std::vector<EdgePoint> ends;
  ends.reserve(word.size());
  for (Symbol s : word.letters()) {
    ends.push_back({s, next[static_cast<std::size_t>(s.letter)]--});
  }
  std::vector<WordSegment> segs;
  segs.reserve(ends.size());
  for (std::size_t i = 0; i < ends.size(); ++i) {
    const EdgePoint prev = ends[(i + ends.size() - 1) % ends.size()];
    segs.push_back({prev.inverse(), ends[i]});
  }
  return {PointList::identity(surface, m), SegmentList(std::move(segs))};
}

bool interleaves(const PointList& p, const WordSegment& s, const WordSegment& t) {
  if (s == t) throw Error(ErrorCode::SameSegment, "a segment cannot cross itself");
  auto lo = p.position(s.start), hi = p.position(s.end);
  if (lo > hi) std::swap(lo, hi);
  auto inside = [&](std::size_t x) { return lo < x && x < hi; };
  return inside(p.position(t.start)) != inside(p.position(t.end));
}

bool interleaves(const PointList& p, const SegmentList& c, std::size_t i, std::size_t j) {
  if (i == j) throw Error(ErrorCode::SameSegment, "a segment cannot cross itself");
  return interleaves(p, c[i], c[j]);
}

std::size_t intersection_count(const PointList& p, const SegmentList& c) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) n += interleaves(p, c[i], c[j]);
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> intersecting_pairs(const PointList& p,
                                                                    const SegmentList& c) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (interleaves(p, c[i], c[j])) out.emplace_back(i, j);
  return out;
}

}  // namespace minsect
