// Test-only helpers: word enumeration and a geometric crossing oracle that
// does not go through the interleave test.
#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "minsect/representative.hpp"
#include "minsect/words.hpp"

namespace minsect::testing {

inline std::string alphabet(const SurfaceWord& s) { return s.str(); }

inline bool cyclically_reduced(const SurfaceWord& s, const std::string& w) {
  const std::size_t n = w.size();
  if (n < 2) return n == 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (*s.from_char(w[(i + 1) % n]) == s.from_char(w[i])->inverse()) return false;
  }
  return true;
}

// Every cyclically reduced word of length 1..max_len (all rotations kept).
inline std::vector<std::string> reduced_words(const SurfaceWord& s, std::size_t max_len) {
  const std::string letters = alphabet(s);
  std::vector<std::string> out;
  std::vector<std::string> frontier{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      for (char c : letters) {
        if (!w.empty() && *s.from_char(c) == s.from_char(w.back())->inverse()) continue;
        next.push_back(w + c);
      }
    }
    for (const auto& w : next)
      if (cyclically_reduced(s, w)) out.push_back(w);
    frontier = std::move(next);
  }
  return out;
}

inline std::string random_reduced_word(const SurfaceWord& s, std::size_t len, std::mt19937& rng) {
  const std::string letters = alphabet(s);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  for (;;) {
    std::string w;
    while (w.size() < len) {
      char c = letters[pick(rng)];
      if (!w.empty() && *s.from_char(c) == s.from_char(w.back())->inverse()) continue;
      w.push_back(c);
    }
    if (cyclically_reduced(s, w)) return w;
  }
}

struct Pt {
  double x, y;
};

inline double cross(Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Proper crossing of two straight segments with distinct endpoints.
inline bool segments_cross(Pt a, Pt b, Pt c, Pt d) {
  const double d1 = cross(a, b, c), d2 = cross(a, b, d);
  const double d3 = cross(c, d, a), d4 = cross(c, d, b);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

inline std::size_t count_crossings(const std::vector<std::pair<Pt, Pt>>& chords) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j)
      n += segments_cross(chords[i].first, chords[i].second, chords[j].first, chords[j].second);
  return n;
}

// Places the listed points on a unit circle in the given cyclic order and
// counts crossings of the straight chords.
inline std::size_t geometric_crossings(const std::vector<EdgePoint>& order, const SegmentList& c) {
  std::map<EdgePoint, Pt> at;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order.size());
    at[order[i]] = {std::cos(t), std::sin(t)};
  }
  std::vector<std::pair<Pt, Pt>> chords;
  for (const auto& seg : c) chords.push_back({at.at(seg.start), at.at(seg.end)});
  return count_crossings(chords);
}

}  // namespace minsect::testing
