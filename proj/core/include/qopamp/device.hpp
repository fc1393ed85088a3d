#pragma once

#include <stdexcept>

#include "qopamp/field_algebra.hpp"

namespace qopamp {

enum class ReactanceKind { none, constant_X, inductive, capacitive };

/// Reactive part of the feedback loop. value is ohms (constant_X), henries
/// (inductive) or farads (capacitive); ignored for none.
struct ReactanceSpec {
    ReactanceKind kind = ReactanceKind::none;
    double value = 0.0;

    /// X(omega), the imaginary part of Z_f.
    double at(double omega) const;

    friend bool operator==(const ReactanceSpec&, const ReactanceSpec&) = default;
};

/// Everything that determines the measurement device. The dissipative part of
/// the feedback impedance is R_f by construction.
struct DeviceParams {
    double R_l = 50.0;
    double R_r = 50.0;
    double R_f = 1000.0;
    double R_0 = 50.0;
    ReactanceSpec reactance{};
    ThermalEnvironment env{};
    PhysicalConstants constants = PhysicalConstants::si();

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    friend bool operator==(const DeviceParams&, const DeviceParams&) = default;
};

/// The three physical outward fields over the five inward ones.
struct ScatteringRelation {
    double omega;
    FieldExpr out_l;
    FieldExpr out_r;
    FieldExpr out_f;
};

/// Voltage and current noise generators of the amplifier.
struct NoiseGenerators {
    FieldExpr U;
    FieldExpr I;
};

class SingularCircuit : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Z_f(omega) = R_f + i X(omega).
complex feedback_impedance(const DeviceParams& params, double omega);

/// U = sqrt(hbar omega R_0 / 2)(a - c), I = sqrt(hbar omega / 2 R_0)(a + c),
/// where c = b^dagger lands in the creation coefficient of port b.
NoiseGenerators noise_generators(const DeviceParams& params, double omega);

/// Closed-form output rows with the noise generators already expanded into
/// the a and b lines.
ScatteringRelation scattering_transcribed(const DeviceParams& params, double omega);

/// Same closed form evaluated with an explicitly supplied feedback impedance.
/// Nothing ties Re(z_feedback) to R_f here; used to probe what happens when the
/// dissipative part and line f disagree.
ScatteringRelation scattering_transcribed_with_impedance(const DeviceParams& params, double omega,
                                                         complex z_feedback);

/// Independent route: solves the Kirchhoff relations of the amplifier and the
/// line relations for the outward fields. Throws SingularCircuit if the 2x2
/// elimination degenerates (not reachable with validated params).
ScatteringRelation scattering_solved(const DeviceParams& params, double omega);

/// Largest deviation from canonical commutators among the three output rows:
/// max |[o_i, o_j^dagger] - delta_ij| and |[o_i, o_j]|.
double verify_bogoliubov(const ScatteringRelation& rel);

/// verify_bogoliubov with each (i, j) entry divided by |o_i| |o_j|, where
/// |o|^2 = sum_p |u_p|^2 + |v_p|^2. Physical rows have |o| >= 1, so this never
/// exceeds the absolute residual; it stays at round-off level when large
/// impedance ratios make the row norms huge.
double verify_bogoliubov_scaled(const ScatteringRelation& rel);

/// Largest coefficient difference between two relations, each row scaled by
/// the largest coefficient magnitude of that row in `reference`.
double max_relative_deviation(const ScatteringRelation& reference, const ScatteringRelation& other);

}  // namespace qopamp
