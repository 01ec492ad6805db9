// Acceptance suite: one pass/fail line per criterion.
//
//   acceptance            run everything
//   acceptance --only N   run criterion N

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "minsect/cli_io.hpp"
#include "minsect/minimizer.hpp"
#include "support.hpp"

using namespace minsect;
namespace mt = minsect::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

EdgePoint point(const SurfaceWord& s, const char* text) {
  return {*s.from_char(text[0]), std::atoi(text + 1)};
}

std::set<std::pair<std::string, std::string>> swap_set(const SurfaceWord& s,
                                                       const RemovalStep& step) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : step.swaps) {
    auto x = label(s, a), y = label(s, b);
    out.insert(std::minmax(x, y));
  }
  return out;
}

bool equal_up_to_rotation(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (std::equal(a.begin(), a.end(), b.begin() + static_cast<std::ptrdiff_t>(r), b.end()) &&
        std::equal(a.begin() + static_cast<std::ptrdiff_t>(a.size() - r), a.end(), b.begin()))
      return true;
  }
  return false;
}

// Crossings among the three terminal segments of a one-shared bigon, before
// and after its removal transpositions.
struct DeltaCheck {
  std::size_t seen = 0;
  std::size_t mismatches = 0;

  void operator()(const BigonEvent& e) {
    if (e.cls.kind != BigonKind::RemovableShared && e.cls.kind != BigonKind::ImproperCase6) return;
    ++seen;
    const auto six = six_point_segments(e.bigon);
    auto count3 = [&](const PointList& p) {
      return static_cast<int>(interleaves(p, e.segments, six.k, six.l)) +
             static_cast<int>(interleaves(p, e.segments, six.k, six.i)) +
             static_cast<int>(interleaves(p, e.segments, six.l, six.i));
    };
    PointList after = e.points;
    apply_swaps(after, removal_swaps(e.segments, e.bigon));
    const auto expect = case_delta(e.cls.shared_case);
    if (count3(e.points) != expect.before || count3(after) != expect.after) ++mismatches;
  }
};

DeltaCheck g_delta;  // filled by criteria 3 and 5, read by 7
bool g_delta_from3 = false, g_delta_from5 = false;

Outcome ac1() {
  const auto t0 = Clock::now();
  const auto s = parse_surface_word("abAB");
  const auto r = minimize(s, parse_cyclic_word("bbAAA", s));
  const double dt = seconds_since(t0);

  bool ok = r.steps.size() == 2;
  if (ok) {
    ok &= swap_set(s, r.steps[0]) ==
          std::set<std::pair<std::string, std::string>>{{"b1", "b2"}, {"B1", "B2"}};
    ok &= swap_set(s, r.steps[1]) ==
          std::set<std::pair<std::string, std::string>>{{"a1", "a3"}, {"A1", "A3"}};
    ok &= r.initial_count == 8 && r.steps[0].count_before == 8 && r.steps[0].count_after == 6 &&
          r.steps[1].count_before == 6 && r.steps[1].count_after == 2 && r.final_count == 2;
  }
  std::vector<std::string> got;
  for (const auto& p : r.final_points.cyclic_order()) got.push_back(label(s, p));
  const std::vector<std::string> paper{"a3", "a2", "a1", "b2", "b1", "A1", "A2", "A3", "B1", "B2"};
  ok &= equal_up_to_rotation(paper, got);
  ok &= dt < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "steps=%zu counts %zu->%zu->%zu, runtime %.4fs", r.steps.size(),
                r.initial_count, r.steps.empty() ? 0 : r.steps[0].count_after, r.final_count, dt);
  return {ok, buf};
}

Outcome ac2() {
  const auto s = parse_surface_word("abAB");
  const auto word = parse_cyclic_word("bbAAA", s);
  const auto c = build_initial(s, word).segments;
  auto index_of = [&](const char* a, const char* b) {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i].start == point(s, a) && c[i].end == point(s, b)) return i;
    return c.size();
  };
  const std::set<std::size_t> leg_a{index_of("a1", "b2"), index_of("a2", "A1"), index_of("a3", "A2")};
  const std::set<std::size_t> leg_b{index_of("a2", "A1"), index_of("a3", "A2"), index_of("B1", "A3")};

  std::size_t hits = 0, wrong_class = 0;
  MinimizeOptions opt;
  opt.on_bigon = [&](const BigonEvent& e) {
    const std::set<std::size_t> x(e.bigon.leg1.begin(), e.bigon.leg1.end());
    const std::set<std::size_t> y(e.bigon.leg2.begin(), e.bigon.leg2.end());
    if ((x == leg_a && y == leg_b) || (x == leg_b && y == leg_a)) {
      ++hits;
      if (e.cls.kind != BigonKind::ImproperSharedTwoPlus) ++wrong_class;
    }
  };
  const auto r = minimize(s, word, opt);
  bool removed = false;
  for (const auto& st : r.steps) {
    const std::set<std::size_t> x(st.bigon.leg1.begin(), st.bigon.leg1.end());
    removed |= x == leg_a || x == leg_b;
  }
  const bool ok = hits > 0 && wrong_class == 0 && !removed;
  return {ok, "encountered " + std::to_string(hits) + "x, misclassified " +
                  std::to_string(wrong_class) + ", removed " + (removed ? "yes" : "no")};
}

Outcome ac3() {
  const auto t0 = Clock::now();
  const auto s = parse_surface_word("abAB");
  const auto words = mt::reduced_words(s, 6);
  std::size_t mismatches = 0;
  MinimizeOptions opt;
  opt.on_bigon = std::ref(g_delta);
  for (const auto& w : words) {
    const auto cw = parse_cyclic_word(w, s);
    if (minimize(s, cw, opt).final_count != oracle_min(s, cw)) {
      ++mismatches;
      std::printf("    mismatch: %s\n", w.c_str());
    }
  }
  g_delta_from3 = true;
  const double dt = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu words, %zu mismatches, %.2fs", words.size(), mismatches, dt);
  return {mismatches == 0 && dt < 60.0, buf};
}

Outcome ac4() {
  const auto s = parse_surface_word("abAB");
  bool ok = true;
  std::string got;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto cw = parse_cyclic_word(std::string(n, 'a'), s);
    const auto fin = minimize(s, cw).final_count;
    const auto orc = oracle_min(s, cw);
    ok &= fin == n - 1 && orc == n - 1;
    got += " " + std::to_string(fin) + "/" + std::to_string(orc);
  }
  return {ok, "final/oracle for n=1..6:" + got};
}

Outcome ac5() {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<std::size_t> length(1, 10);
  const SurfaceWord surfaces[] = {parse_surface_word("abAB"), parse_surface_word("abABcCdD")};
  std::size_t steps = 0, bad_steps = 0, bad_totals = 0, below_two = 0, words = 0;
  MinimizeOptions opt;
  opt.on_bigon = std::ref(g_delta);
  for (std::size_t t = 0; t < 500; ++t) {
    const auto& s = surfaces[t % 2];
    const auto w = mt::random_reduced_word(s, length(rng), rng);
    const auto r = minimize(s, parse_cyclic_word(w, s), opt);
    ++words;
    for (const auto& st : r.steps) {
      ++steps;
      if (st.count_after + 2 != st.count_before) ++bad_steps;
      if (st.count_after + 2 > st.count_before) ++below_two;
    }
    if (r.final_count + 2 * r.steps.size() != r.initial_count) ++bad_totals;
  }
  g_delta_from5 = true;
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "%zu words, %zu steps: %zu steps with delta != 2, %zu reports with final != "
                "initial - 2*steps (steps dropping fewer than 2: %zu)",
                words, steps, bad_steps, bad_totals, below_two);
  return {bad_steps == 0 && bad_totals == 0, buf};
}

Outcome ac6() {
  const auto s = parse_surface_word("abAB");
  std::size_t disagreements = 0, runs = 0;
  for (const auto& w : mt::reduced_words(s, 5)) {
    const auto cw = parse_cyclic_word(w, s);
    const auto c = build_initial(s, cw).segments;
    std::set<std::size_t> finals;
    for_each_point_order(s, cw, [&](const PointList& p) {
      finals.insert(minimize_from(s, cw, {p, c}).final_count);
      ++runs;
    });
    if (finals.size() != 1) {
      ++disagreements;
      std::printf("    %s: %zu distinct final counts\n", w.c_str(), finals.size());
    }
  }
  return {disagreements == 0, std::to_string(runs) + " runs, " + std::to_string(disagreements) +
                                  " words with differing final counts"};
}

Outcome ac7() {
  if (!g_delta_from3) ac3();
  if (!g_delta_from5) ac5();
  return {g_delta.mismatches == 0 && g_delta.seen > 0,
          std::to_string(g_delta.seen) + " one-shared bigons, " +
              std::to_string(g_delta.mismatches) + " delta mismatches"};
}

Outcome ac8() {
  std::size_t nondeterministic = 0, nonidempotent = 0, checked = 0;
  for (const char* surface : {"abAB", "abABcCdD"}) {
    const auto s = parse_surface_word(surface);
    for (const auto& w : mt::reduced_words(s, surface[4] ? 3 : 5)) {
      const auto cw = parse_cyclic_word(w, s);
      const auto r1 = minimize(s, cw), r2 = minimize(s, cw);
      if (emit_json(r1) != emit_json(r2) ||
          emit_svg(s, r1.final_points, r1.final_segments) !=
              emit_svg(s, r2.final_points, r2.final_segments))
        ++nondeterministic;
      if (!minimize_from(s, cw, {r1.final_points, r1.final_segments}).steps.empty())
        ++nonidempotent;
      ++checked;
    }
  }
  return {nondeterministic == 0 && nonidempotent == 0,
          std::to_string(checked) + " words, " + std::to_string(nondeterministic) +
              " nondeterministic, " + std::to_string(nonidempotent) + " non-idempotent"};
}

Outcome ac9() {
  const auto s = parse_surface_word("abAB");
  std::vector<double> times;
  std::string detail;
  for (std::size_t k = 2; k <= 20; ++k) {
    const auto cw = parse_cyclic_word(std::string(k, 'a') + std::string(k, 'b'), s);
    const auto t0 = Clock::now();
    const auto r = minimize(s, cw);
    times.push_back(std::max(seconds_since(t0), 1e-7));
    if (k == 20) detail += "k=20: " + std::to_string(r.final_count) + " crossings; ";
  }
  // Slopes of log(time) vs log(N) across doublings k = 2->4->8->16.
  for (std::size_t k = 2; k <= 8; k *= 2) {
    const double slope = std::log(times[2 * k - 2] / times[k - 2]) / std::log(2.0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "slope %zu->%zu %.2f; ", k, 2 * k, slope);
    detail += buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "total %.3fs (reported, not asserted)", [&] {
    double t = 0;
    for (double x : times) t += x;
    return t;
  }());
  return {true, detail + buf};
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::vector<Criterion> criteria{
      {1, "paper walkthrough", ac1},
      {2, "improper-skip fidelity", ac2},
      {3, "oracle equivalence (abAB, length <= 6)", ac3},
      {4, "power law a^n -> n-1", ac4},
      {5, "step arithmetic (500 random words)", ac5},
      {6, "initial-ordering independence (length <= 5)", ac6},
      {7, "classification delta consistency", ac7},
      {8, "determinism and idempotence", ac8},
      {9, "complexity sanity (informal)", ac9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] AC%d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
