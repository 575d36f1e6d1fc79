#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace homsense {

/// Single-photon transverse-momentum density |phi(k)|^2.
///
/// Gaussian kind is closed-form; tabulated kind is the piecewise-linear
/// interpolant of (grid, values), normalized to unit mass on construction.
/// Immutable after construction; all member functions are const and pure.
struct MomentumDistribution {
    enum class Kind { Gaussian, Tabulated };

    Kind kind = Kind::Gaussian;
    double sigma_k = 1.0;  // std dev of the density
    double mean_k = 0.0;
    std::vector<double> grid;    // tabulated only; strictly increasing
    std::vector<double> values;  // tabulated only; >= 0, unit mass

    double density(double k) const;
    double total_mass() const;  // 1 up to rounding, by construction
};

/// Two-photon beat envelope C(dk): the autocorrelation of |phi(k)|^2.
/// Numeric tables are uniform, symmetric about dk = 0, unit mass.
struct BeatEnvelope {
    enum class Kind { GaussianClosedForm, NumericTable };

    Kind kind = Kind::GaussianClosedForm;
    double sigma_k = 1.0;  // of the source distribution, not of C itself
    std::vector<double> dk_grid;
    std::vector<double> values;

    double operator()(double dk) const;
    double peak() const { return (*this)(0.0); }
    /// Second moment of C; equals 2*sigma_k^2 up to table resolution.
    double second_moment() const;
    /// |dk| beyond which C is negligible (< 1e-14 of peak); integration cutoff.
    double support_radius() const;
    /// Panel edges for quadrature: table knots, or empty for the closed form.
    const std::vector<double>& breakpoints() const { return dk_grid; }
};

MomentumDistribution make_gaussian(double sigma_k);

/// Tabulated density from (grid, values); values are renormalized to unit mass.
/// Throws invalid_parameter for non-increasing grids, negative values, or
/// degenerate (zero-mass / zero-variance) input.
MomentumDistribution make_tabulated(std::vector<double> grid, std::vector<double> values);

/// Two-column CSV (k, density), comma-separated, optional header row,
/// '#' comments ignored.
MomentumDistribution load_distribution_csv(const std::string& path);
MomentumDistribution load_distribution_csv(std::istream& in, const std::string& name);

/// C(dk) = Int dK |phi(K+dk/2)|^2 |phi(K-dk/2)|^2.
///
/// Gaussian input returns the closed form exp(-dk^2/(4 s^2))/sqrt(4 pi s^2).
/// Tabulated input is autocorrelated exactly (the integrand is piecewise
/// quadratic between knots, integrated segment-exactly) onto a uniform grid
/// spanning at least [-8*sqrt(2)*sigma_k, +8*sqrt(2)*sigma_k].
/// Throws resolution_error when the tabulated grid has fewer than 16 points
/// per sigma_k anywhere the density is non-negligible.
BeatEnvelope envelope(const MomentumDistribution& dist);

/// Quantum Fisher information for the displacement: H = 2*sigma_k^2.
double qfi(double sigma_k);

/// Diffraction-limited width rule of thumb: sigma_x ~ 2.2/k0.
inline constexpr double kFourierLimitSigmaXFactor = 2.2;

}  // namespace homsense
