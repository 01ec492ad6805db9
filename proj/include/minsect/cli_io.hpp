#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "minsect/minimizer.hpp"

namespace minsect {

struct RenderSpec {
  double polygon_radius = 300.0;
  double margin = 60.0;
  double edge_stroke = 2.0;
  double chord_stroke = 1.5;
  double point_radius = 3.0;
  double edge_font_size = 18.0;
  double point_font_size = 11.0;
  // How far free boundary sides bow toward the center, as a fraction of
  // their length.
  double boundary_bow = 0.12;
};

// UTF-8 JSON with keys in a fixed order; integers only.
std::string emit_json(const MinimizationReport& report);

// Static SVG 1.1 drawing of the fundamental polygon with the curve's chords.
// Byte-identical for equal inputs.
std::string emit_svg(const SurfaceWord& surface, const PointList& p, const SegmentList& c,
                     const RenderSpec& spec = {});

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kOracleMismatch = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kOracleCap = 3;
}  // namespace exit_code

// Entry point behind the `minsect` executable. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minsect
