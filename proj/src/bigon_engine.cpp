#include "minsect/bigon_engine.hpp"

#include <algorithm>
#include <set>

#include "minsect/error.hpp"

namespace minsect {
namespace {

constexpr TraceDirection kPlusPlus{Sign::Plus, Sign::Plus};
constexpr TraceDirection kPlusMinus{Sign::Plus, Sign::Minus};
constexpr TraceDirection kMinusPlus{Sign::Minus, Sign::Plus};

enum Corner { K1, K2, L1, L2, I1, I2 };

// Canonical orderings of the six terminal points, read from k1, with the
// number of crossings among W_k, W_l, W_i before and after the removal.
struct CaseRow {
  std::array<Corner, 6> order;
  CaseDelta delta;
};

constexpr std::array<CaseRow, 6> kCases{{
    {{K1, I1, L2, K2, I2, L1}, {3, 1}},
    {{K1, I1, L2, K2, L1, I2}, {2, 0}},
    {{K1, L2, I2, K2, L1, I1}, {3, 1}},
    {{K1, I2, L2, K2, L1, I1}, {2, 0}},
    {{K1, I2, L2, K2, I1, L1}, {3, 1}},
    {{K1, L2, I2, K2, I1, L1}, {2, 2}},
}};

char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

std::size_t step(std::size_t x, Sign s, std::size_t n) {
  return s == Sign::Plus ? (x + 1) % n : (x + n - 1) % n;
}

// Where a strand leaves its current segment when walking in direction s.
const EdgePoint& exit_point(const SegmentList& c, std::size_t x, Sign s) {
  return s == Sign::Plus ? c[x].end : c[x].start;
}

template <class Seq>
bool equal_runs(const Seq& a, std::size_t a0, const Seq& b, std::size_t b0, std::size_t len) {
  return std::equal(a.begin() + static_cast<std::ptrdiff_t>(a0),
                    a.begin() + static_cast<std::ptrdiff_t>(a0 + len),
                    b.begin() + static_cast<std::ptrdiff_t>(b0));
}

// Cyclic sequence of the six corners, ordered by position in P.
std::array<Corner, 6> corner_cycle(const PointList& p, const SegmentList& c, const SixPoints& s) {
  std::array<std::pair<std::size_t, Corner>, 6> at{{
      {p.position(c[s.k].start), K1},
      {p.position(c[s.k].end), K2},
      {p.position(c[s.l].start), L1},
      {p.position(c[s.l].end), L2},
      {p.position(c[s.i].start), I1},
      {p.position(c[s.i].end), I2},
  }};
  std::sort(at.begin(), at.end());
  std::array<Corner, 6> cyc{};
  for (std::size_t j = 0; j < 6; ++j) cyc[j] = at[j].second;
  return cyc;
}

// x sits between a and b: the three are consecutive among the six corners.
bool between(const std::array<Corner, 6>& cyc, Corner x, Corner a, Corner b) {
  auto idx = [&](Corner q) {
    return static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), q) - cyc.begin());
  };
  const std::size_t ix = idx(x), ia = idx(a), ib = idx(b);
  const std::size_t prev = (ix + 5) % 6, next = (ix + 1) % 6;
  return (ia == prev && ib == next) || (ia == next && ib == prev);
}

}  // namespace

std::string to_string(TraceDirection d) {
  return std::string("(") + sign_char(d.first) + "," + sign_char(d.second) + ")";
}

std::string to_string(BigonClass c) {
  switch (c.kind) {
    case BigonKind::RemovableProper: return "RemovableProper";
    case BigonKind::RemovableShared: return "RemovableShared(" + std::to_string(c.shared_case) + ")";
    case BigonKind::ImproperSharedTwoPlus: return "ImproperSharedTwoPlus";
    case BigonKind::ImproperCase6: return "ImproperCase6";
  }
  return "?";
}

std::optional<CombinatorialBigon> trace(const PointList& p, const SegmentList& c, std::size_t k,
                                        std::size_t l, TraceDirection dir) {
  const std::size_t n = c.size();
  if (k >= n || l >= n || k == l || !interleaves(p, c, k, l)) {
    throw Error(ErrorCode::NotAnIntersection, "trace must start at a crossing");
  }
  RawTrace raw{{k}, {l}, dir};
  std::size_t a = k, b = l;
  for (std::size_t steps = 0; steps < n; ++steps) {
    if (exit_point(c, a, dir.first).symbol != exit_point(c, b, dir.second).symbol) {
      return std::nullopt;  // split
    }
    a = step(a, dir.first, n);
    b = step(b, dir.second, n);
    if (a == b) return std::nullopt;
    raw.leg1.push_back(a);
    raw.leg2.push_back(b);
    if (interleaves(p, c, a, b)) return normalize(raw);
  }
  return std::nullopt;
}

CombinatorialBigon normalize(const RawTrace& raw) {
  CombinatorialBigon b{raw.leg1, raw.leg2, raw.direction};
  if (raw.direction.first == Sign::Minus && raw.direction.second == Sign::Minus) {
    std::reverse(b.leg1.begin(), b.leg1.end());
    std::reverse(b.leg2.begin(), b.leg2.end());
    b.orientation = kPlusPlus;
  } else if (raw.direction == kMinusPlus) {
    std::swap(b.leg1, b.leg2);
    b.orientation = kPlusMinus;
  }
  return b;
}

std::vector<std::size_t> shared_segments(const CombinatorialBigon& b) {
  const std::set<std::size_t> other(b.leg2.begin(), b.leg2.end());
  std::vector<std::size_t> shared;
  for (auto s : b.leg1)
    if (other.count(s)) shared.push_back(s);
  if (shared.empty()) return shared;

  if (b.orientation != kPlusPlus) {
    throw Error(ErrorCode::StructureViolation, "shared segments in a (+,-) bigon");
  }
  if (b.leg1 == b.leg2) throw Error(ErrorCode::StructureViolation, "bigon legs coincide");

  // Every shared segment must sit in a prefix of one leg that equals a suffix
  // of the other.
  const std::size_t len = b.length();
  std::set<std::size_t> explained;
  for (std::size_t s = 1; s < len; ++s) {
    if (equal_runs(b.leg1, 0, b.leg2, len - s, s))
      explained.insert(b.leg1.begin(), b.leg1.begin() + static_cast<std::ptrdiff_t>(s));
    if (equal_runs(b.leg1, len - s, b.leg2, 0, s))
      explained.insert(b.leg2.begin(), b.leg2.begin() + static_cast<std::ptrdiff_t>(s));
  }
  if (explained != std::set<std::size_t>(shared.begin(), shared.end())) {
    throw Error(ErrorCode::StructureViolation, "shared segments are not at the leg ends");
  }
  return shared;
}

SixPoints six_point_segments(const CombinatorialBigon& b) {
  if (b.leg1.front() == b.leg2.back()) return {b.leg1.front(), b.leg2.front(), b.leg1.back()};
  if (b.leg1.back() == b.leg2.front()) return {b.leg2.front(), b.leg1.front(), b.leg2.back()};
  throw Error(ErrorCode::StructureViolation, "bigon does not share a terminal segment");
}

int match_shared_case(const PointList& p, const SegmentList& c, const SixPoints& s) {
  const auto cyc = corner_cycle(p, c, s);
  const auto start = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), K1) - cyc.begin());
  std::array<Corner, 6> fwd{}, bwd{};
  for (std::size_t j = 0; j < 6; ++j) {
    fwd[j] = cyc[(start + j) % 6];
    bwd[j] = cyc[(start + 6 - j) % 6];
  }
  for (std::size_t r = 0; r < kCases.size(); ++r) {
    if (kCases[r].order == fwd || kCases[r].order == bwd) return static_cast<int>(r) + 1;
  }
  return 0;
}

CaseDelta case_delta(int shared_case) {
  if (shared_case < 1 || shared_case > 6) {
    throw Error(ErrorCode::UnmatchedOrdering, "no such canonical ordering");
  }
  return kCases[static_cast<std::size_t>(shared_case - 1)].delta;
}

BigonClass classify(const PointList& p, const SegmentList& c, const CombinatorialBigon& b) {
  const auto shared = shared_segments(b);
  if (shared.size() >= 2) return {BigonKind::ImproperSharedTwoPlus, 0};
  if (shared.empty()) return {BigonKind::RemovableProper, 0};

  const SixPoints six = six_point_segments(b);
  const int which = match_shared_case(p, c, six);
  if (which == 0) {
    throw Error(ErrorCode::UnmatchedOrdering, "terminal points match no canonical ordering");
  }
  // Cross-check with the betweenness form of the improper condition.
  const auto cyc = corner_cycle(p, c, six);
  const bool improper = between(cyc, L1, I1, K1) && between(cyc, I2, L2, K2);
  if (improper != (which == 6)) {
    throw Error(ErrorCode::StructureViolation, "ordering match disagrees with betweenness test");
  }
  if (which == 6) return {BigonKind::ImproperCase6, 6};
  return {BigonKind::RemovableShared, which};
}

std::vector<Swap> removal_swaps(const SegmentList& c, const CombinatorialBigon& b) {
  const bool second_forward = b.orientation == kPlusPlus;
  std::vector<Swap> swaps;
  for (std::size_t m = 1; m < b.length(); ++m) {
    const EdgePoint x = c[b.leg1[m - 1]].end;
    const EdgePoint y = second_forward ? c[b.leg2[m - 1]].end : c[b.leg2[m - 1]].start;
    if (x.symbol.letter != y.symbol.letter) {
      throw Error(ErrorCode::StructureViolation, "interface points lie on different sides");
    }
    swaps.push_back({x.symbol.letter, x.index, y.index});
  }
  return swaps;
}

void apply_swaps(PointList& p, const std::vector<Swap>& swaps) {
  for (const auto& s : swaps) p.transpose(s.letter, s.a, s.b);
}

PointList apply_removal(const PointList& p, const SegmentList& c, const CombinatorialBigon& b) {
  if (!classify(p, c, b).removable()) {
    throw Error(ErrorCode::NotRemovable, "bigon is improper and cannot be removed");
  }
  PointList out = p;
  apply_swaps(out, removal_swaps(c, b));
  return out;
}

}  // namespace minsect
