#include "qopamp/field_algebra.hpp"

#include <cmath>
#include <string>

namespace qopamp {

std::string_view port_name(PortId p) noexcept {
    switch (p) {
    case PortId::signal_l: return "l";
    case PortId::readout_r: return "r";
    case PortId::feedback_f: return "f";
    case PortId::noise_a: return "a";
    case PortId::noise_b: return "b";
    }
    return "?";
}

FrequencyMismatch::FrequencyMismatch(double lhs, double rhs)
    : std::invalid_argument("frequency mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs) + " rad/s") {}

ThermalEnvironment& ThermalEnvironment::set(PortId p, double kelvin) {
    if (!std::isfinite(kelvin) || kelvin < 0.0) {
        throw std::invalid_argument("temperature of port " + std::string(port_name(p)) + " must be finite and >= 0");
    }
    kelvin_[index(p)] = kelvin;
    return *this;
}

FieldExpr::FieldExpr(double omega) : omega_(omega) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::invalid_argument("field frequency must be finite and > 0");
    }
}

FieldExpr::FieldExpr(double omega, const Coefficients& u, const Coefficients& v) : FieldExpr(omega) {
    u_ = u;
    v_ = v;
    check_finite();
}

FieldExpr FieldExpr::annihilation(double omega, PortId p, complex coefficient) {
    return FieldExpr(omega).with_u(p, coefficient);
}

FieldExpr FieldExpr::creation(double omega, PortId p, complex coefficient) {
    return FieldExpr(omega).with_v(p, coefficient);
}

FieldExpr FieldExpr::with_u(PortId p, complex c) const {
    FieldExpr out = *this;
    out.u_[index(p)] = c;
    out.check_finite();
    return out;
}

FieldExpr FieldExpr::with_v(PortId p, complex c) const {
    FieldExpr out = *this;
    out.v_[index(p)] = c;
    out.check_finite();
    return out;
}

bool FieldExpr::is_zero() const noexcept {
    for (std::size_t i = 0; i < kPortCount; ++i) {
        if (u_[i] != 0.0 || v_[i] != 0.0) return false;
    }
    return true;
}

FieldExpr& FieldExpr::operator+=(const FieldExpr& rhs) {
    if (omega_ != rhs.omega_) throw FrequencyMismatch(omega_, rhs.omega_);
    for (std::size_t i = 0; i < kPortCount; ++i) {
        u_[i] += rhs.u_[i];
        v_[i] += rhs.v_[i];
    }
    check_finite();
    return *this;
}

FieldExpr& FieldExpr::operator-=(const FieldExpr& rhs) {
    if (omega_ != rhs.omega_) throw FrequencyMismatch(omega_, rhs.omega_);
    for (std::size_t i = 0; i < kPortCount; ++i) {
        u_[i] -= rhs.u_[i];
        v_[i] -= rhs.v_[i];
    }
    check_finite();
    return *this;
}

FieldExpr& FieldExpr::operator*=(complex s) {
    for (std::size_t i = 0; i < kPortCount; ++i) {
        u_[i] *= s;
        v_[i] *= s;
    }
    check_finite();
    return *this;
}

void FieldExpr::check_finite() const {
    for (std::size_t i = 0; i < kPortCount; ++i) {
        if (!std::isfinite(u_[i].real()) || !std::isfinite(u_[i].imag()) || !std::isfinite(v_[i].real()) ||
            !std::isfinite(v_[i].imag())) {
            throw std::invalid_argument("field coefficient on port " + std::string(port_name(kAllPorts[i])) +
                                        " is not finite");
        }
    }
}

complex commutator(const FieldExpr& x, const FieldExpr& y) {
    if (x.omega() != y.omega()) throw FrequencyMismatch(x.omega(), y.omega());
    complex sum = 0.0;
    for (std::size_t i = 0; i < kPortCount; ++i) {
        sum += x.u()[i] * y.v()[i] - x.v()[i] * y.u()[i];
    }
    return sum;
}

FieldExpr adjoint(const FieldExpr& x) {
    FieldExpr::Coefficients u{};
    FieldExpr::Coefficients v{};
    for (std::size_t i = 0; i < kPortCount; ++i) {
        u[i] = std::conj(x.v()[i]);
        v[i] = std::conj(x.u()[i]);
    }
    return FieldExpr(x.omega(), u, v);
}

double thermal_sigma(double kelvin, double omega, const PhysicalConstants& constants) {
    if (std::isnan(kelvin) || kelvin < 0.0) throw std::invalid_argument("temperature must be >= 0");
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
    if (kelvin == 0.0) return 0.5;
    const double x = constants.hbar * omega / (2.0 * constants.k_B * kelvin);
    return 0.5 / std::tanh(x);
}

complex sym_cross_spectrum(const FieldExpr& x, const FieldExpr& y, const ThermalEnvironment& env,
                           const PhysicalConstants& constants) {
    if (x.omega() != y.omega()) throw FrequencyMismatch(x.omega(), y.omega());
    complex sum = 0.0;
    for (PortId p : kAllPorts) {
        const complex weight = x.u(p) * std::conj(y.u(p)) + x.v(p) * std::conj(y.v(p));
        if (weight == 0.0) continue;
        sum += thermal_sigma(env.temperature(p), x.omega(), constants) * weight;
    }
    return sum;
}

double sym_spectrum(const FieldExpr& x, const ThermalEnvironment& env, const PhysicalConstants& constants) {
    double sum = 0.0;
    for (PortId p : kAllPorts) {
        const double weight = std::norm(x.u(p)) + std::norm(x.v(p));
        if (weight == 0.0) continue;
        sum += thermal_sigma(env.temperature(p), x.omega(), constants) * weight;
    }
    return sum;
}

}  // namespace qopamp
