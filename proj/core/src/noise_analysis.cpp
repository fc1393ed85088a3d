#include "qopamp/noise_analysis.hpp"

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qopamp {

namespace {

constexpr double kXiBound = 10.0;

struct LineSpectra {
    double l, r, f, a, b;
};

LineSpectra line_spectra(const DeviceParams& params, double omega) {
    const auto sigma = [&](PortId p) { return thermal_sigma(params.env.temperature(p), omega, params.constants); };
    return {sigma(PortId::signal_l), sigma(PortId::readout_r), sigma(PortId::feedback_f), sigma(PortId::noise_a),
            sigma(PortId::noise_b)};
}

}  // namespace

void SweepSpec::validate() const {
    if (!std::isfinite(omega_min) || !(omega_min > 0.0)) throw std::invalid_argument("omega_min must be positive");
    if (!std::isfinite(omega_max) || omega_max < omega_min) {
        throw std::invalid_argument("omega_max must be >= omega_min");
    }
    if (points < 1) throw std::invalid_argument("points must be >= 1");
}

std::vector<double> SweepSpec::grid() const {
    validate();
    std::vector<double> omegas(static_cast<std::size_t>(points));
    omegas.front() = omega_min;
    if (points == 1) return omegas;
    const double last = static_cast<double>(points - 1);
    for (int i = 1; i < points - 1; ++i) {
        const double t = static_cast<double>(i) / last;
        omegas[static_cast<std::size_t>(i)] = spacing == Spacing::linear
                                                  ? omega_min + t * (omega_max - omega_min)
                                                  : omega_min * std::pow(omega_max / omega_min, t);
    }
    omegas.back() = omega_max;
    return omegas;
}

FieldExpr estimator(const DeviceParams& params, double omega) {
    const complex Z = feedback_impedance(params, omega);
    const complex factor = -std::sqrt(params.R_r * params.R_l) / (2.0 * Z);
    FieldExpr est = factor * scattering_transcribed(params, omega).out_r;
    // The readout's l_in coefficient is -2 Z / sqrt(R_r R_l); the product is 1
    // up to round-off, so pin it.
    return est.with_u(PortId::signal_l, 1.0);
}

double added_noise_from_modes(const DeviceParams& params, double omega) {
    const FieldExpr noise = estimator(params, omega).with_u(PortId::signal_l, 0.0);
    return sym_spectrum(noise, params.env, params.constants);
}

NoiseReport added_noise(const DeviceParams& params, double omega) {
    const complex Z = feedback_impedance(params, omega);
    const double Z2 = std::norm(Z);
    const double R_l = params.R_l;
    const double R_0 = params.R_0;
    const LineSpectra s = line_spectra(params, omega);

    NoiseReport rep;
    rep.omega = omega;
    rep.term_r = R_l * params.R_r / (4.0 * Z2) * s.r;
    rep.term_f = R_l * params.R_f / Z2 * s.f;
    rep.term_a = R_l * R_0 / 4.0 * std::norm(1.0 / Z + 1.0 / R_l - 1.0 / R_0) * s.a;
    rep.term_b = R_l * R_0 / 4.0 * std::norm(1.0 / Z + 1.0 / R_l + 1.0 / R_0) * s.b;
    rep.sigma_total = rep.term_r + rep.term_f + rep.term_a + rep.term_b;
    rep.xi = xi_parameter(params);
    rep.noise_figure_db = noise_figure_db(rep.sigma_total, s.l);
    rep.back_action = back_action(params, omega);
    return rep;
}

double xi_parameter(const DeviceParams& params) {
    if (!(params.R_l > 0.0) || !(params.R_0 > 0.0)) throw std::invalid_argument("R_l and R_0 must be positive");
    return 0.5 * std::log(params.R_l / params.R_0);
}

double sigma_asymptotic(double xi, double sigma_aa, double sigma_bb) {
    const double sh = std::sinh(xi);
    const double ch = std::cosh(xi);
    return sh * sh * sigma_aa + ch * ch * sigma_bb;
}

MatchingOptimum minimize_matching(double sigma_aa, double sigma_bb) {
    const auto objective = [=](double xi) { return sigma_asymptotic(xi, sigma_aa, sigma_bb); };
    const auto [xi, value] = boost::math::tools::brent_find_minima(objective, -kXiBound, kXiBound,
                                                                   std::numeric_limits<double>::digits / 2);
    return {xi, value};
}

MatchingOptimum optimize_matching(const DeviceParams& params, double omega) {
    const LineSpectra s = line_spectra(params, omega);
    return minimize_matching(s.a, s.b);
}

double noise_figure_db(double added, double signal_sigma) {
    return 10.0 * std::log10((signal_sigma + added) / signal_sigma);
}

double noise_figure_db(const DeviceParams& params, double omega) {
    return added_noise(params, omega).noise_figure_db;
}

double back_action(const DeviceParams& params, double omega) {
    return sym_spectrum(scattering_transcribed(params, omega).out_l, params.env, params.constants);
}

std::vector<NoiseReport> sweep(const DeviceParams& params, const SweepSpec& spec) {
    std::vector<NoiseReport> reports;
    const std::vector<double> omegas = spec.grid();
    reports.reserve(omegas.size());
    for (double omega : omegas) reports.push_back(added_noise(params, omega));
    return reports;
}

}  // namespace qopamp
