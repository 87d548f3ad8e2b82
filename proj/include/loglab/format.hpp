#ifndef LOGLAB_FORMAT_HPP_
#define LOGLAB_FORMAT_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "loglab/atlas.hpp"
#include "loglab/iterate.hpp"

namespace loglab {

/// Parses a complex literal: `a`, `a+bi`, `a-bi`, `bi`, `i`, or the letter
/// `e` for 2.718281828459045. Components are C-locale decimals (exponents
/// allowed, so `1e6` is a real literal, not 1 + i*6). No whitespace.
std::optional<Complex> parse_complex(const std::string& text);

/// Canonical literal form: shortest decimals that round-trip binary64,
/// `a` when the imaginary part is zero, `bi` when the real part is zero.
std::string format_complex(Complex z);

/// Shortest round-trip decimal for a double (to_chars).
std::string format_double(double x);

// CSV emitters. Schemas are fixed and ordered; header row always present;
// '.' decimal separator, LF line endings.

/// Columns: step, re, im, delta. The first row has an empty delta.
void write_trace_csv(std::ostream& os, const IterationTrace& trace);

/// Columns: base_re, base_im, half_plane, attr_re, attr_im, residual,
/// multiplier_abs, steps, status.
void write_sweep_csv(std::ostream& os, const SweepResult& sweep);

/// Reproducibility header accompanying every output file.
struct RunManifest {
  std::string command;
  IterationConfig config;
  std::string grid_description;
  std::string tool_version;
  std::string timestamp;  // ISO-8601, UTC
};

RunManifest make_manifest(const std::string& command, const IterationConfig& cfg,
                          const std::string& grid_description);

std::string manifest_to_json(const RunManifest& m);

/// Grid helpers shared by the CLI and the sweeps.
std::vector<Complex> real_grid(double from, double to, double step);
std::optional<std::vector<Complex>> parse_grid_spec(const std::string& spec);

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace loglab

#endif  // LOGLAB_FORMAT_HPP_
