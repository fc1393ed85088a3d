#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qopamp/device.hpp"

namespace qopamp {

/// Worst-case numbers from a sweep of the model invariants.
struct InvariantSummary {
    double max_bogoliubov = 0.0;         ///< row-norm scaled commutator residual (gated)
    double max_bogoliubov_absolute = 0.0;  ///< unscaled residual, reported only
    double max_solver_deviation = 0.0;   ///< transcribed vs circuit-solved, row-scaled
    double max_sigma_deviation = 0.0;    ///< closed-form vs mode-algebra added noise, relative
    std::size_t evaluations = 0;

    bool within(double tolerance) const {
        return max_bogoliubov <= tolerance && max_solver_deviation <= tolerance && max_sigma_deviation <= tolerance;
    }
};

/// Random valid device: resistances log-uniform in [1, 1e6] ohm, random
/// reactance kind, temperatures uniform in [0, 300] K.
DeviceParams sample_device(std::mt19937_64& rng, const PhysicalConstants& constants);

/// Logarithmic 13-point grid from 1e2 to 1e8 rad/s.
std::vector<double> verification_grid();

/// Checks every invariant for one device at each frequency.
void accumulate_invariants(const DeviceParams& params, const std::vector<double>& omegas, InvariantSummary& summary);

/// The configured device plus `draws` random devices (seeded), each on `omegas`.
InvariantSummary check_invariants(const DeviceParams& params, const std::vector<double>& omegas, std::size_t draws,
                                  std::uint64_t seed);

}  // namespace qopamp
