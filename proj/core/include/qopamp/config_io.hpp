#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qopamp/device.hpp"
#include "qopamp/noise_analysis.hpp"

namespace qopamp {

struct RunConfig {
    DeviceParams params{};
    SweepSpec sweep{};
    UnitSystem units = UnitSystem::SI;
    double tolerance = 1e-9;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parse or validation failure. line() is 1-based, 0 when the problem is not
/// tied to a single line (e.g. a missing required key).
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Sectioned "key = value" text:
///
///   [device]       R_l, R_r, R_f, R_0 (required), reactance_kind, reactance_value
///   [temperatures] T_l, T_r, T_f, T_a, T_b   (kelvin, default 0)
///   [sweep]        omega_min, omega_max, points, spacing = linear|logarithmic
///   [run]          units = SI|normalized, tolerance
///
/// '#' starts a comment. Throws ConfigError.
RunConfig parse_config(std::string_view text);

/// Canonical text form; parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& config);

/// Throws std::invalid_argument on an empty list.
std::string write_csv(const std::vector<NoiseReport>& reports);

inline constexpr std::string_view kCsvHeader =
    "omega,sigma_total,term_r,term_f,term_a,term_b,xi,noise_figure_db,back_action";

}  // namespace qopamp
