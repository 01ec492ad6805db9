#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "minsect/cli_io.hpp"
#include "minsect/error.hpp"

namespace minsect {
namespace {

struct CliOptions {
  std::string surface;
  std::string word;
  std::string json_path;
  std::string svg_path;
  std::string svg_initial_path;
  bool verify_oracle = false;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  bool trace = false;
};

bool write_file(const std::string& path, const std::string& bytes, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  f << bytes;
  return static_cast<bool>(f);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliOptions opt;
  CLI::App app{"Minimal self-intersection representatives of curves on surfaces with boundary",
               "minsect"};
  app.add_option("--surface", opt.surface, "surface word, e.g. abAB")->required();
  app.add_option("--word", opt.word, "curve word in the surface generators, e.g. bbAAA")
      ->required();
  app.add_option("--json", opt.json_path, "write the minimization report as JSON");
  app.add_option("--svg", opt.svg_path, "render the minimal representative as SVG");
  app.add_option("--svg-initial", opt.svg_initial_path, "render the starting representative");
  app.add_flag("--verify-oracle", opt.verify_oracle, "cross-check against brute force");
  app.add_option("--oracle-cap", opt.oracle_cap, "largest brute-force search allowed");
  app.add_flag("--trace", opt.trace, "log every removal step");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInvalidInput;
  }

  SurfaceWord surface;
  CyclicWord word;
  try {
    surface = parse_surface_word(opt.surface);
    try {
      word = parse_cyclic_word(opt.word, surface);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotReduced) throw;
      auto reduced = cyclic_reduce(opt.word, surface);
      err << "notice: " << opt.word << " is not cyclically reduced; reduced to "
          << (reduced ? reduced->str() : std::string("the empty word")) << "\n";
      if (!reduced) {
        err << "error: word is trivial\n";
        return exit_code::kInvalidInput;
      }
      word = *reduced;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInvalidInput;
  }

  const auto inv = surface_invariants(surface);
  out << "surface: " << surface.str() << " (genus " << inv.genus << ", boundary components "
      << inv.boundary_components << ", euler characteristic " << inv.euler_characteristic
      << ")\n";
  out << "word: " << word.str() << " (length " << word.size() << ")\n";

  MinimizeOptions mopt;
  if (opt.trace) {
    std::size_t n = 0;
    mopt.on_step = [&](const RemovalStep& s) {
      out << "step " << ++n << ": " << to_string(s.cls) << " " << to_string(s.bigon.orientation)
          << " legs [" << join(s.bigon.leg1) << "] / [" << join(s.bigon.leg2) << "] swaps";
      for (const auto& [a, b] : s.swaps) out << " " << label(surface, a) << "<->" << label(surface, b);
      out << ", crossings " << s.count_before << " -> " << s.count_after << "\n";
    };
  }
  const auto report = minimize(surface, word, mopt);

  out << "initial self-intersections: " << report.initial_count << "\n";
  out << "removal steps: " << report.steps.size() << "\n";
  out << "skipped improper bigons: " << report.skipped_improper << "\n";
  out << "minimal self-intersections: " << report.final_count << "\n";

  if (!opt.json_path.empty() && !write_file(opt.json_path, emit_json(report), err))
    return exit_code::kInvalidInput;
  if (!opt.svg_path.empty() &&
      !write_file(opt.svg_path, emit_svg(surface, report.final_points, report.final_segments), err))
    return exit_code::kInvalidInput;
  if (!opt.svg_initial_path.empty()) {
    const auto initial = build_initial(surface, word);
    if (!write_file(opt.svg_initial_path, emit_svg(surface, initial.points, initial.segments), err))
      return exit_code::kInvalidInput;
  }

  if (opt.verify_oracle) {
    std::size_t best = 0;
    try {
      best = oracle_min(surface, word, opt.oracle_cap);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return exit_code::kOracleCap;
    }
    if (best != report.final_count) {
      out << "oracle disagrees: " << best << "\n";
      return exit_code::kOracleMismatch;
    }
    out << "oracle agrees: " << best << "\n";
  }
  return exit_code::kOk;
}

}  // namespace minsect
