#include "qopamp/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "qopamp/noise_analysis.hpp"

namespace qopamp {

DeviceParams sample_device(std::mt19937_64& rng, const PhysicalConstants& constants) {
    std::uniform_real_distribution<double> decade(0.0, 6.0);
    std::uniform_real_distribution<double> kelvin(0.0, 300.0);
    std::uniform_int_distribution<int> kind(0, 3);
    const auto ohms = [&] { return std::pow(10.0, decade(rng)); };

    DeviceParams p;
    p.constants = constants;
    p.R_l = ohms();
    p.R_r = ohms();
    p.R_f = ohms();
    p.R_0 = ohms();
    switch (kind(rng)) {
    case 0: p.reactance = {ReactanceKind::none, 0.0}; break;
    case 1: {
        std::uniform_real_distribution<double> sign(-1.0, 1.0);
        p.reactance = {ReactanceKind::constant_X, sign(rng) * ohms()};
        break;
    }
    case 2: p.reactance = {ReactanceKind::inductive, std::pow(10.0, -9.0 + decade(rng))}; break;
    default: p.reactance = {ReactanceKind::capacitive, std::pow(10.0, -12.0 + decade(rng))}; break;
    }
    for (PortId port : kAllPorts) p.env.set(port, kelvin(rng));
    return p;
}

std::vector<double> verification_grid() {
    return SweepSpec{1e2, 1e8, 13, Spacing::logarithmic}.grid();
}

void accumulate_invariants(const DeviceParams& params, const std::vector<double>& omegas, InvariantSummary& summary) {
    for (double omega : omegas) {
        const ScatteringRelation transcribed = scattering_transcribed(params, omega);
        const ScatteringRelation solved = scattering_solved(params, omega);
        summary.max_bogoliubov = std::max(summary.max_bogoliubov, verify_bogoliubov_scaled(transcribed));
        summary.max_bogoliubov_absolute = std::max(summary.max_bogoliubov_absolute, verify_bogoliubov(transcribed));
        summary.max_solver_deviation =
            std::max(summary.max_solver_deviation, max_relative_deviation(transcribed, solved));

        const double formula = added_noise(params, omega).sigma_total;
        const double modes = added_noise_from_modes(params, omega);
        summary.max_sigma_deviation = std::max(summary.max_sigma_deviation, std::abs(formula - modes) / formula);
        ++summary.evaluations;
    }
}

InvariantSummary check_invariants(const DeviceParams& params, const std::vector<double>& omegas, std::size_t draws,
                                  std::uint64_t seed) {
    InvariantSummary summary;
    accumulate_invariants(params, omegas, summary);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < draws; ++i) accumulate_invariants(sample_device(rng, params.constants), omegas, summary);
    return summary;
}

}  // namespace qopamp
