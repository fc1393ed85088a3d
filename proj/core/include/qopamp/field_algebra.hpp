#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string_view>

namespace qopamp {

using complex = std::complex<double>;

// Dissipation lines of the 5-port network. The order is fixed and used as
// row/column index everywhere.
enum class PortId : std::size_t {
    signal_l = 0,
    readout_r = 1,
    feedback_f = 2,
    noise_a = 3,
    noise_b = 4,
};

inline constexpr std::size_t kPortCount = 5;
inline constexpr std::array<PortId, kPortCount> kAllPorts = {
    PortId::signal_l, PortId::readout_r, PortId::feedback_f, PortId::noise_a, PortId::noise_b};

constexpr std::size_t index(PortId p) noexcept { return static_cast<std::size_t>(p); }

/// Single-letter port label: l, r, f, a, b.
std::string_view port_name(PortId p) noexcept;

class FrequencyMismatch : public std::invalid_argument {
  public:
    FrequencyMismatch(double lhs, double rhs);
};

enum class UnitSystem { SI, normalized };

struct PhysicalConstants {
    double hbar;
    double k_B;
    UnitSystem mode;

    static constexpr PhysicalConstants si() noexcept { return {1.054571817e-34, 1.380649e-23, UnitSystem::SI}; }
    static constexpr PhysicalConstants normalized() noexcept { return {1.0, 1.0, UnitSystem::normalized}; }
    static constexpr PhysicalConstants for_units(UnitSystem u) noexcept {
        return u == UnitSystem::SI ? si() : normalized();
    }

    friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;
};

/// Port temperatures in kelvin; unset ports sit at 0 K.
class ThermalEnvironment {
  public:
    ThermalEnvironment() = default;

    double temperature(PortId p) const noexcept { return kelvin_[index(p)]; }

    /// Throws std::invalid_argument for negative or non-finite values.
    ThermalEnvironment& set(PortId p, double kelvin);

    friend bool operator==(const ThermalEnvironment&, const ThermalEnvironment&) = default;

  private:
    std::array<double, kPortCount> kelvin_{};
};

/// A field at one analysis frequency written as a linear combination of the
/// annihilation (u) and creation (v) operators of each port at that frequency.
/// Normalization is [a_p, a_p^dagger] = 1.
class FieldExpr {
  public:
    using Coefficients = std::array<complex, kPortCount>;

    /// Zero expression. Throws std::invalid_argument unless omega > 0.
    explicit FieldExpr(double omega);
    FieldExpr(double omega, const Coefficients& u, const Coefficients& v);

    static FieldExpr annihilation(double omega, PortId p, complex coefficient = 1.0);
    static FieldExpr creation(double omega, PortId p, complex coefficient = 1.0);

    double omega() const noexcept { return omega_; }
    complex u(PortId p) const noexcept { return u_[index(p)]; }
    complex v(PortId p) const noexcept { return v_[index(p)]; }
    const Coefficients& u() const noexcept { return u_; }
    const Coefficients& v() const noexcept { return v_; }

    FieldExpr with_u(PortId p, complex c) const;
    FieldExpr with_v(PortId p, complex c) const;

    bool is_zero() const noexcept;

    FieldExpr& operator+=(const FieldExpr& rhs);
    FieldExpr& operator-=(const FieldExpr& rhs);
    FieldExpr& operator*=(complex s);

    friend FieldExpr operator+(FieldExpr lhs, const FieldExpr& rhs) { return lhs += rhs; }
    friend FieldExpr operator-(FieldExpr lhs, const FieldExpr& rhs) { return lhs -= rhs; }
    friend FieldExpr operator*(complex s, FieldExpr x) { return x *= s; }
    friend FieldExpr operator*(FieldExpr x, complex s) { return x *= s; }
    friend FieldExpr operator-(FieldExpr x) { return x *= -1.0; }

    friend bool operator==(const FieldExpr&, const FieldExpr&) = default;

  private:
    void check_finite() const;

    double omega_;
    Coefficients u_{};
    Coefficients v_{};
};

/// [x, y] = sum_p (u_x,p v_y,p - v_x,p u_y,p). Bilinear and antisymmetric.
/// Throws FrequencyMismatch when the two expressions live at different omega.
complex commutator(const FieldExpr& x, const FieldExpr& y);

/// Hermitian conjugate, i.e. the field at -omega re-expressed at +omega.
FieldExpr adjoint(const FieldExpr& x);

/// Half the thermal occupation factor, 1/2 coth(hbar omega / 2 k_B T).
/// Exactly 1/2 at T = 0. Throws std::invalid_argument for T < 0 or omega <= 0.
double thermal_sigma(double kelvin, double omega, const PhysicalConstants& constants);

/// Symmetrized autospectrum of x with all ports in independent thermal states.
double sym_spectrum(const FieldExpr& x, const ThermalEnvironment& env, const PhysicalConstants& constants);

/// Symmetrized cross-spectrum between x and y, built by the same port-sum rule:
/// sum_p sigma_p (u_x,p conj(u_y,p) + v_x,p conj(v_y,p)). cross(x, x) is the
/// autospectrum.
complex sym_cross_spectrum(const FieldExpr& x, const FieldExpr& y, const ThermalEnvironment& env,
                           const PhysicalConstants& constants);

}  // namespace qopamp
