#include "qopamp/device.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qopamp {

namespace {

void require_positive(double value, const char* name) {
    if (!std::isfinite(value) || !(value > 0.0)) {
        throw std::invalid_argument(std::string(name) + " must be positive");
    }
}

void require_omega(double omega) {
    if (!std::isfinite(omega) || !(omega > 0.0)) throw std::invalid_argument("omega must be finite and > 0");
}

}  // namespace

double ReactanceSpec::at(double omega) const {
    require_omega(omega);
    switch (kind) {
    case ReactanceKind::none: return 0.0;
    case ReactanceKind::constant_X: return value;
    case ReactanceKind::inductive: return omega * value;
    case ReactanceKind::capacitive: return -1.0 / (omega * value);
    }
    return 0.0;
}

void DeviceParams::validate() const {
    require_positive(R_l, "R_l");
    require_positive(R_r, "R_r");
    require_positive(R_f, "R_f");
    require_positive(R_0, "R_0");
    switch (reactance.kind) {
    case ReactanceKind::none: break;
    case ReactanceKind::constant_X:
        if (!std::isfinite(reactance.value)) throw std::invalid_argument("reactance_value must be finite");
        break;
    case ReactanceKind::inductive:
    case ReactanceKind::capacitive: require_positive(reactance.value, "reactance_value"); break;
    }
    for (PortId p : kAllPorts) {
        const double t = env.temperature(p);
        if (!std::isfinite(t) || t < 0.0) {
            throw std::invalid_argument("T_" + std::string(port_name(p)) + " must be >= 0");
        }
    }
}

complex feedback_impedance(const DeviceParams& params, double omega) {
    return {params.R_f, params.reactance.at(omega)};
}

NoiseGenerators noise_generators(const DeviceParams& params, double omega) {
    require_omega(omega);
    const double hw = params.constants.hbar * omega;
    const double u_scale = std::sqrt(hw * params.R_0 / 2.0);
    const double i_scale = std::sqrt(hw / (2.0 * params.R_0));
    FieldExpr U = FieldExpr(omega).with_u(PortId::noise_a, u_scale).with_v(PortId::noise_b, -u_scale);
    FieldExpr I = FieldExpr(omega).with_u(PortId::noise_a, i_scale).with_v(PortId::noise_b, i_scale);
    return {std::move(U), std::move(I)};
}

ScatteringRelation scattering_transcribed_with_impedance(const DeviceParams& params, double omega,
                                                         complex z_feedback) {
    require_omega(omega);
    const double R_l = params.R_l;
    const double R_r = params.R_r;
    const double R_f = params.R_f;
    const double R_0 = params.R_0;
    const complex Z = z_feedback;

    const double back = std::sqrt(R_0 / R_l);
    FieldExpr out_l = FieldExpr(omega)
                          .with_u(PortId::signal_l, -1.0)
                          .with_u(PortId::noise_a, back)
                          .with_v(PortId::noise_b, -back);

    const double readout = std::sqrt(R_0 / R_r);
    FieldExpr out_r = FieldExpr(omega)
                          .with_u(PortId::readout_r, -1.0)
                          .with_u(PortId::signal_l, -2.0 * Z / std::sqrt(R_r * R_l))
                          .with_u(PortId::feedback_f, -2.0 * std::sqrt(R_f / R_r))
                          .with_u(PortId::noise_a, (1.0 + Z / R_l - Z / R_0) * readout)
                          .with_v(PortId::noise_b, -(1.0 + Z / R_l + Z / R_0) * readout);

    const double sqrt_R0 = std::sqrt(R_0);
    const double sqrt_Rf = std::sqrt(R_f);
    FieldExpr out_f = FieldExpr(omega)
                          .with_u(PortId::feedback_f, 1.0)
                          .with_u(PortId::signal_l, 2.0 * std::sqrt(R_f / R_l))
                          .with_u(PortId::noise_a, sqrt_Rf * (1.0 / sqrt_R0 - sqrt_R0 / R_l))
                          .with_v(PortId::noise_b, sqrt_Rf * (1.0 / sqrt_R0 + sqrt_R0 / R_l));

    return {omega, std::move(out_l), std::move(out_r), std::move(out_f)};
}

ScatteringRelation scattering_transcribed(const DeviceParams& params, double omega) {
    return scattering_transcribed_with_impedance(params, omega, feedback_impedance(params, omega));
}

ScatteringRelation scattering_solved(const DeviceParams& params, double omega) {
    require_omega(omega);
    // Line p: I_p = g_p (p_out - p_in), U_p = k_p (p_out + p_in).
    const double s = std::sqrt(params.constants.hbar * omega / 2.0);
    const auto g = [s](double R) { return s / std::sqrt(R); };
    const auto k = [s](double R) { return s * std::sqrt(R); };
    const complex X = feedback_impedance(params, omega) - params.R_f;

    const auto in = [omega](PortId p) { return FieldExpr::annihilation(omega, p); };
    const auto [U, I] = noise_generators(params, omega);

    // U = U_l fixes l_out on its own.
    FieldExpr out_l = (1.0 / k(params.R_l)) * U - in(PortId::signal_l);

    // Remaining relations, linear in (r_out, f_out):
    //   I = I_l + I_f                       ->  m11 r + m12 f = rhs1
    //   U_l = U_r + U_f + X I_f             ->  m21 r + m22 f = rhs2
    const complex m11 = 0.0;
    const complex m12 = g(params.R_f);
    const FieldExpr rhs1 = I - g(params.R_l) * (out_l - in(PortId::signal_l)) + g(params.R_f) * in(PortId::feedback_f);

    const complex m21 = k(params.R_r);
    const complex m22 = k(params.R_f) + X * g(params.R_f);
    const FieldExpr rhs2 = k(params.R_l) * (out_l + in(PortId::signal_l)) - k(params.R_r) * in(PortId::readout_r) -
                           k(params.R_f) * in(PortId::feedback_f) + X * g(params.R_f) * in(PortId::feedback_f);

    const complex det = m11 * m22 - m12 * m21;
    if (std::abs(det) == 0.0 || !std::isfinite(std::abs(det))) {
        throw SingularCircuit("circuit relations are singular at omega = " + std::to_string(omega));
    }
    FieldExpr out_r = (1.0 / det) * (m22 * rhs1 - m12 * rhs2);
    FieldExpr out_f = (1.0 / det) * (m11 * rhs2 - m21 * rhs1);

    return {omega, std::move(out_l), std::move(out_r), std::move(out_f)};
}

namespace {

double euclidean_norm(const FieldExpr& x) {
    double sum = 0.0;
    for (std::size_t i = 0; i < kPortCount; ++i) sum += std::norm(x.u()[i]) + std::norm(x.v()[i]);
    return std::sqrt(sum);
}

double bogoliubov_residual(const ScatteringRelation& rel, bool scaled) {
    const FieldExpr* rows[] = {&rel.out_l, &rel.out_r, &rel.out_f};
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const double delta = i == j ? 1.0 : 0.0;
            double scale = scaled ? euclidean_norm(*rows[i]) * euclidean_norm(*rows[j]) : 1.0;
            if (scale == 0.0) scale = 1.0;
            worst = std::max(worst, std::abs(commutator(*rows[i], adjoint(*rows[j])) - delta) / scale);
            worst = std::max(worst, std::abs(commutator(*rows[i], *rows[j])) / scale);
        }
    }
    return worst;
}

}  // namespace

double verify_bogoliubov(const ScatteringRelation& rel) { return bogoliubov_residual(rel, false); }

double verify_bogoliubov_scaled(const ScatteringRelation& rel) { return bogoliubov_residual(rel, true); }

double max_relative_deviation(const ScatteringRelation& reference, const ScatteringRelation& other) {
    const std::pair<const FieldExpr*, const FieldExpr*> rows[] = {
        {&reference.out_l, &other.out_l}, {&reference.out_r, &other.out_r}, {&reference.out_f, &other.out_f}};
    double worst = 0.0;
    for (const auto& [ref, cmp] : rows) {
        double scale = 0.0;
        for (std::size_t i = 0; i < kPortCount; ++i) {
            scale = std::max({scale, std::abs(ref->u()[i]), std::abs(ref->v()[i])});
        }
        if (scale == 0.0) scale = 1.0;
        for (std::size_t i = 0; i < kPortCount; ++i) {
            worst = std::max(worst, std::abs(ref->u()[i] - cmp->u()[i]) / scale);
            worst = std::max(worst, std::abs(ref->v()[i] - cmp->v()[i]) / scale);
        }
    }
    return worst;
}

}  // namespace qopamp
