#pragma once

#include <vector>

#include "qopamp/device.hpp"

namespace qopamp {

/// Added noise at one frequency, referred to the signal input.
struct NoiseReport {
    double omega = 0.0;
    double sigma_total = 0.0;  ///< sum of the four terms below
    double term_r = 0.0;       ///< readout-line Nyquist noise
    double term_f = 0.0;       ///< feedback-line Nyquist noise
    double term_a = 0.0;       ///< amplifier line a
    double term_b = 0.0;       ///< amplifier line b (conjugated)
    double xi = 0.0;
    double noise_figure_db = 0.0;
    double back_action = 0.0;  ///< full spectrum of l_out, not the excess

    friend bool operator==(const NoiseReport&, const NoiseReport&) = default;
};

enum class Spacing { linear, logarithmic };

struct SweepSpec {
    double omega_min = 1e2;
    double omega_max = 1e8;
    int points = 13;
    Spacing spacing = Spacing::logarithmic;

    void validate() const;
    /// Ascending grid. Endpoints are exactly omega_min and omega_max.
    std::vector<double> grid() const;

    friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct MatchingOptimum {
    double xi_star;
    double sigma_star;
};

/// Estimator of l_in from the readout: -sqrt(R_r R_l) / (2 Z_f) * r_out.
FieldExpr estimator(const DeviceParams& params, double omega);

/// Closed-form added noise plus the derived figures.
NoiseReport added_noise(const DeviceParams& params, double omega);

/// Added noise computed the long way: spectrum of the estimator with its l_in
/// term removed. Must agree with added_noise().sigma_total.
double added_noise_from_modes(const DeviceParams& params, double omega);

/// xi = ln sqrt(R_l / R_0).
double xi_parameter(const DeviceParams& params);

/// Large-feedback limit sinh^2(xi) sigma_aa + cosh^2(xi) sigma_bb.
double sigma_asymptotic(double xi, double sigma_aa, double sigma_bb);

/// Minimizes sigma_asymptotic over xi in [-10, 10] for the given line spectra.
MatchingOptimum minimize_matching(double sigma_aa, double sigma_bb);

/// minimize_matching with sigma_aa and sigma_bb taken from the device.
MatchingOptimum optimize_matching(const DeviceParams& params, double omega);

/// 10 log10((sigma_in + added) / sigma_in).
double noise_figure_db(double added, double signal_sigma);
double noise_figure_db(const DeviceParams& params, double omega);

/// Spectrum of l_out: sigma_ll + (R_0 / R_l)(sigma_aa + sigma_bb).
double back_action(const DeviceParams& params, double omega);

std::vector<NoiseReport> sweep(const DeviceParams& params, const SweepSpec& spec);

}  // namespace qopamp
