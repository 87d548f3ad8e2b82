#include "loglab/format.hpp"

#include <charconv>
#include <cmath>
#include <ctime>

#include "json.hpp"

namespace loglab {
namespace {

std::optional<double> parse_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Position of the sign splitting the real and imaginary components, i.e. the
// last '+'/'-' that is neither leading nor part of an exponent.
size_t split_pos(std::string_view body) {
  for (size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') &&
        body[i - 1] != 'e' && body[i - 1] != 'E') {
      return i;
    }
  }
  return std::string_view::npos;
}

}  // namespace

std::optional<Complex> parse_complex(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "e") return Complex(2.718281828459045, 0.0);

  std::string_view s(text);
  if (s.back() != 'i') {
    const auto re = parse_double(s);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }

  std::string_view body = s.substr(0, s.size() - 1);
  const size_t pos = split_pos(body);
  if (pos == std::string_view::npos) {
    // Pure imaginary: "bi", "i", "-i".
    if (body.empty()) return Complex(0.0, 1.0);
    if (body == "-") return Complex(0.0, -1.0);
    if (body == "+") return std::nullopt;
    const auto im = parse_double(body);
    if (!im) return std::nullopt;
    return Complex(0.0, *im);
  }

  const auto re = parse_double(body.substr(0, pos));
  std::string_view im_part = body.substr(pos);
  std::optional<double> im;
  if (im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    // from_chars rejects an explicit '+'; the splitting sign guarantees the
    // component starts with '+' or '-'.
    if (im_part.front() == '+') im_part.remove_prefix(1);
    im = parse_double(im_part);
  }
  if (!re || !im) return std::nullopt;
  return Complex(*re, *im);
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string im = format_double(z.imag());
  if (z.real() == 0.0) return im + "i";
  std::string out = format_double(z.real());
  if (!im.empty() && im.front() != '-') out += '+';
  out += im;
  out += 'i';
  return out;
}

void write_trace_csv(std::ostream& os, const IterationTrace& trace) {
  os << "step,re,im,delta\n";
  for (size_t n = 0; n < trace.iterates.size(); ++n) {
    const Complex z = trace.iterates[n];
    os << (n + 1) << ',' << format_double(z.real()) << ','
       << format_double(z.imag()) << ',';
    if (n > 0) os << format_double(std::abs(z - trace.iterates[n - 1]));
    os << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
  os << "base_re,base_im,half_plane,attr_re,attr_im,residual,multiplier_abs,"
        "steps,status\n";
  for (const auto& rec : sweep.points) {
    os << format_double(rec.base.base().real()) << ','
       << format_double(rec.base.base().imag()) << ','
       << to_string(rec.half_plane) << ','
       << format_double(rec.value.real()) << ','
       << format_double(rec.value.imag()) << ','
       << format_double(rec.residual) << ','
       << format_double(rec.multiplier_abs) << ','
       << rec.steps << ','
       << to_string(rec.status) << '\n';
  }
}

RunManifest make_manifest(const std::string& command, const IterationConfig& cfg,
                          const std::string& grid_description) {
  char stamp[32] = {};
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return RunManifest{command, cfg, grid_description, kToolVersion, stamp};
}

std::string manifest_to_json(const RunManifest& m) {
  nlohmann::json j{
      {"command", m.command},
      {"config",
       {{"tolerance", m.config.tolerance},
        {"max_iters", m.config.max_iters},
        {"divergence_bound", m.config.divergence_bound}}},
      {"grid", m.grid_description},
      {"tool_version", m.tool_version},
      {"timestamp", m.timestamp},
  };
  return j.dump(2);
}

std::vector<Complex> real_grid(double from, double to, double step) {
  if (step == 0.0 || (to - from) * step < 0.0) {
    throw std::invalid_argument("grid step does not move from 'from' to 'to'");
  }
  const int count = static_cast<int>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<Complex> grid;
  grid.reserve(count);
  for (int i = 0; i < count; ++i) {
    grid.emplace_back(from + i * step, 0.0);
  }
  return grid;
}

std::optional<std::vector<Complex>> parse_grid_spec(const std::string& spec) {
  const size_t c1 = spec.find(':');
  if (c1 == std::string::npos) return std::nullopt;
  const size_t c2 = spec.find(':', c1 + 1);
  if (c2 == std::string::npos) return std::nullopt;

  const auto start = parse_complex(spec.substr(0, c1));
  const auto stop = parse_complex(spec.substr(c1 + 1, c2 - c1 - 1));
  const auto step = parse_complex(spec.substr(c2 + 1));
  if (!start || !stop || !step || *step == Complex(0.0, 0.0)) return std::nullopt;

  const double span = std::abs(*stop - *start);
  const double inc = std::abs(*step);
  const int count = static_cast<int>(std::floor(span / inc + 1e-9)) + 1;
  std::vector<Complex> grid;
  grid.reserve(count);
  for (int i = 0; i < count; ++i) {
    grid.push_back(*start + static_cast<double>(i) * *step);
  }
  return grid;
}

}  // namespace loglab
