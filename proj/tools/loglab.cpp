// loglab: iterated-logarithm laboratory. Reproduces the attractor atlas of
// z -> log_b(z) as machine-readable data with stable CSV/JSON schemas.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "loglab/format.hpp"
#include "loglab/reproduce.hpp"

namespace {

using namespace loglab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMathFailure = 2;

// Output sink: a file (with a manifest sidecar) or standard output.
struct Sink {
  std::ofstream file;
  std::string path;

  explicit Sink(const std::string& p) : path(p) {
    if (!p.empty()) {
      file.open(p, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file: " + p);
    }
  }
  std::ostream& stream() { return path.empty() ? std::cout : file; }

  void write_manifest(const RunManifest& m) {
    if (path.empty()) return;
    std::ofstream mf(path + ".manifest.json", std::ios::binary);
    mf << manifest_to_json(m) << '\n';
  }
};

Complex require_complex(const std::string& text, const char* what) {
  const auto z = parse_complex(text);
  if (!z) {
    throw CLI::ValidationError(std::string(what) + ": unparseable complex literal '" + text + "'");
  }
  return *z;
}

std::string outcome_name(Outcome::Kind k) {
  switch (k) {
    case Outcome::Kind::Converged: return "Converged";
    case Outcome::Kind::MaxItersReached: return "MaxItersReached";
    case Outcome::Kind::Diverged: return "Diverged";
    case Outcome::Kind::UndefinedHit: return "UndefinedHit";
  }
  return "?";
}

nlohmann::json record_to_json(const AttractorRecord& rec) {
  return nlohmann::json{
      {"base_re", rec.base.base().real()},
      {"base_im", rec.base.base().imag()},
      {"half_plane", to_string(rec.half_plane)},
      {"attr_re", rec.value.real()},
      {"attr_im", rec.value.imag()},
      {"residual", rec.residual},
      {"multiplier_abs", rec.multiplier_abs},
      {"steps", rec.steps},
      {"method", to_string(rec.method)},
      {"status", to_string(rec.status)},
  };
}

int cmd_iterate(const std::string& start_s, const std::string& base_s,
                const IterationConfig& cfg, const std::string& output) {
  const Complex start = require_complex(start_s, "--start");
  const BaseSpec base(require_complex(base_s, "--base"));

  const IterationTrace trace = iterate(start, base, cfg);

  Sink sink(output);
  write_trace_csv(sink.stream(), trace);
  sink.write_manifest(make_manifest("iterate", cfg,
                                    "start=" + format_complex(start) +
                                        " base=" + format_complex(base.base())));

  std::ostream& summary = output.empty() ? std::cerr : std::cout;
  summary << outcome_name(trace.outcome.kind) << " after "
          << trace.outcome.steps << " iterates";
  if (trace.outcome.kind == Outcome::Kind::Converged) {
    summary << " at " << format_complex(trace.outcome.value);
  }
  summary << '\n';
  return trace.outcome.kind == Outcome::Kind::Converged ? kExitOk : kExitMathFailure;
}

int cmd_attractor(const std::string& base_s, const std::string& half_plane,
                  const IterationConfig& cfg, const std::string& output) {
  const BaseSpec base(require_complex(base_s, "--base"));
  const HalfPlane hp = half_plane == "lower" ? HalfPlane::Lower : HalfPlane::Upper;

  const AttractorRecord rec = attractor_for_base(base, hp, cfg);

  Sink sink(output);
  sink.stream() << record_to_json(rec).dump(2) << '\n';
  sink.write_manifest(make_manifest("attractor", cfg,
                                    "base=" + format_complex(base.base()) +
                                        " half_plane=" + to_string(hp)));
  return rec.status == RecordStatus::Failed ? kExitMathFailure : kExitOk;
}

int cmd_sweep(const std::string& regime_s, const std::string& grid_spec,
              std::optional<double> from, std::optional<double> to,
              std::optional<double> step, const IterationConfig& cfg,
              const std::string& output) {
  Regime regime;
  if (regime_s == "real") regime = Regime::RealAbove1;
  else if (regime_s == "unit-interval") regime = Regime::UnitInterval;
  else if (regime_s == "negative") regime = Regime::Negative;
  else if (regime_s == "imaginary") regime = Regime::Imaginary;
  else if (regime_s == "complex-grid") regime = Regime::ComplexGrid;
  else throw CLI::ValidationError("unknown regime: " + regime_s);

  std::vector<Complex> grid;
  std::string grid_desc;
  if (!grid_spec.empty()) {
    if (grid_spec == "table3") {
      for (double b : table3_bases()) grid.emplace_back(b, 0.0);
    } else if (auto parsed = parse_grid_spec(grid_spec)) {
      grid = std::move(*parsed);
    } else {
      throw CLI::ValidationError("invalid grid spec: " + grid_spec);
    }
    grid_desc = "grid=" + grid_spec;
  } else if (from && to && step) {
    grid = real_grid(*from, *to, *step);
    grid_desc = "from=" + format_double(*from) + " to=" + format_double(*to) +
                " step=" + format_double(*step);
  } else {
    throw CLI::ValidationError("need --grid or --from/--to/--step");
  }
  for (const Complex& b : grid) BaseSpec{b};  // validate before work starts

  const SweepResult sweep = sweep_bases(regime, grid, cfg);

  Sink sink(output);
  write_sweep_csv(sink.stream(), sweep);
  sink.write_manifest(make_manifest("sweep", cfg, "regime=" + regime_s + " " + grid_desc));
  return kExitOk;
}

int cmd_bifurcate(double lo, double hi, const IterationConfig& cfg,
                  const std::string& output) {
  const BifurcationPoint bp = locate_bifurcation(lo, hi, cfg);
  const double mult =
      std::abs(multiplier(bp.attractor_at_star, BaseSpec(Complex(bp.base_star, 0.0))));

  nlohmann::json j{
      {"base_star", bp.base_star},
      {"attr_re", bp.attractor_at_star.real()},
      {"attr_im", bp.attractor_at_star.imag()},
      {"multiplier_abs", mult},
  };
  Sink sink(output);
  sink.stream() << j.dump(2) << '\n';
  sink.write_manifest(make_manifest("bifurcate", cfg,
                                    "lo=" + format_double(lo) + " hi=" + format_double(hi)));
  return kExitOk;
}

int cmd_reproduce(const std::string& target, const std::string& output) {
  const ReproduceReport report = run_reproduce(target);
  Sink sink(output);
  std::ostream& os = sink.stream();
  int passed = 0, failed = 0, excluded = 0;
  for (const auto& row : report.rows) {
    const char* tag = row.excluded ? "SKIP" : (row.pass ? "PASS" : "FAIL");
    os << '[' << tag << "] " << row.label;
    if (row.error > 0.0) os << " (error " << format_double(row.error) << ')';
    os << '\n';
    if (row.excluded) ++excluded;
    else if (row.pass) ++passed;
    else ++failed;
  }
  os << report.target << ": " << passed << " passed, " << failed << " failed, "
     << excluded << " excluded\n";
  return report.pass ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loglab: attractors of iterated complex logarithms"};
  app.require_subcommand(1);

  IterationConfig cfg;
  std::string output;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tolerance", cfg.tolerance, "successive-difference threshold");
    sub->add_option("--max-iters", cfg.max_iters, "cap on recorded iterates");
    sub->add_option("--output", output, "output path (default: standard output)");
  };

  std::string start_s, base_s, half_plane = "upper", regime_s, grid_spec, target;
  std::optional<double> from, to, step;
  double lo = 0.0, hi = 0.0;

  CLI::App* it = app.add_subcommand("iterate", "trace one orbit to CSV");
  it->add_option("--start", start_s, "start point, e.g. 5 or 5-1i")->required();
  it->add_option("--base", base_s, "log base, e.g. e, 2, 2i")->required();
  add_common(it);

  CLI::App* at = app.add_subcommand("attractor", "resolve one base's attractor");
  at->add_option("--base", base_s)->required();
  at->add_option("--half-plane", half_plane)->check(CLI::IsMember({"upper", "lower"}));
  add_common(at);

  CLI::App* sw = app.add_subcommand("sweep", "attractor curve over a base grid");
  sw->add_option("--regime", regime_s)->required();
  sw->add_option("--grid", grid_spec, "'table3' or start:stop:step");
  sw->add_option("--from", from);
  sw->add_option("--to", to);
  sw->add_option("--step", step);
  add_common(sw);

  CLI::App* bf = app.add_subcommand("bifurcate", "bisect the attractor lift-off");
  bf->add_option("--lo", lo)->required();
  bf->add_option("--hi", hi)->required();
  add_common(bf);

  CLI::App* rp = app.add_subcommand("reproduce", "compare against embedded reference tables");
  rp->add_option("target", target, "table1|table2|table3|table4|fig2|fig11")->required();
  add_common(rp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (it->parsed()) return cmd_iterate(start_s, base_s, cfg, output);
    if (at->parsed()) return cmd_attractor(base_s, half_plane, cfg, output);
    if (sw->parsed()) return cmd_sweep(regime_s, grid_spec, from, to, step, cfg, output);
    if (bf->parsed()) return cmd_bifurcate(lo, hi, cfg, output);
    if (rp->parsed()) return cmd_reproduce(target, output);
  } catch (const NoBifurcationInInterval& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMathFailure;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMathFailure;
  }
  return kExitUsage;
}
