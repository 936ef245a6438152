#pragma once

// Numerical ranges of finite matrices via support-function sweeps, and the
// closure of W(T_+) as the convex hull of the symbol ranges W(Phi(theta)).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ptoeplitz/eigen.hpp"
#include "ptoeplitz/error.hpp"
#include "ptoeplitz/geometry.hpp"
#include "ptoeplitz/matrix.hpp"
#include "ptoeplitz/operator.hpp"

namespace ptoeplitz {

struct SupportSample {
    double theta = 0.0;  // symbol parameter; 0 for a plain matrix
    double phi = 0.0;
    double support_value = 0.0;
    Point boundary_point;
};

struct RangeReport {
    ConvexPolygon polygon;
    std::vector<SupportSample> samples;
    std::size_t theta_count = 0;
    std::size_t phi_count = 0;
    std::map<std::string, double> residual_summary;
};

inline double uniform_angle(std::size_t k, std::size_t count) {
    return 2.0 * kPi * static_cast<double>(k) / static_cast<double>(count);
}

/// Largest eigenvalue of the rotated Hermitian part at phi and the Rayleigh
/// value <Av, v> of a top unit eigenvector v.
inline SupportSample support_function(const ComplexMatrix& a, double phi) {
    require(a.square(), "support_function needs a square matrix");
    const auto dec = eigh(rotated_hermitian_part(a, phi));
    const std::size_t top = dec.eigenvalues.size() - 1;
    const auto v = dec.eigenvectors.column(top);
    const Complex z = inner(a * std::span<const Complex>(v), v);
    return {0.0, phi, dec.eigenvalues[top], {z.real(), z.imag()}};
}

inline std::vector<SupportSample> support_sweep(const ComplexMatrix& a, std::size_t phi_count, double theta = 0.0) {
    require(phi_count >= 3, "phi_count must be >= 3");
    std::vector<SupportSample> out;
    out.reserve(phi_count);
    require(a.square(), "support_sweep needs a square matrix");
    ComplexMatrix basis = ComplexMatrix::identity(a.rows());
    for (std::size_t k = 0; k < phi_count; ++k) {
        const double phi = uniform_angle(k, phi_count);
        // consecutive angles have nearby eigenvectors
        const auto dec = eigh_from(rotated_hermitian_part(a, phi), basis);
        const std::size_t top = dec.eigenvalues.size() - 1;
        const auto v = dec.eigenvectors.column(top);
        const Complex z = inner(a * std::span<const Complex>(v), v);
        out.push_back({theta, phi, dec.eigenvalues[top], {z.real(), z.imag()}});
        basis = dec.eigenvectors;
    }
    return out;
}

/// support_sweep for a matrix with a(j, k) = 0 whenever |j - k| > band.
inline std::vector<SupportSample> banded_support_sweep(const ComplexMatrix& a, std::size_t band,
                                                       std::size_t phi_count, double theta = 0.0) {
    require(a.square(), "banded_support_sweep needs a square matrix");
    require(phi_count >= 3, "phi_count must be >= 3");
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            require((j > k ? j - k : k - j) <= band || a(j, k) == Complex{}, "matrix is wider than the stated band");
    std::vector<SupportSample> out;
    out.reserve(phi_count);
    for (std::size_t k = 0; k < phi_count; ++k) {
        const double phi = uniform_angle(k, phi_count);
        const Complex rot = std::polar(1.0, -phi);
        const auto top = banded_top_eigenpair(n, band, [&](std::size_t i, std::size_t j) {
            if (i == j) return Complex((rot * a(i, i)).real());
            return 0.5 * (rot * a(i, j) + std::conj(rot * a(j, i)));
        });
        Complex z{};
        for (std::size_t i = 0; i < n; ++i) {
            Complex row{};
            for (std::size_t j = (i >= band ? i - band : 0); j < std::min(n, i + band + 1); ++j)
                row += a(i, j) * top.vector[j];
            z += row * std::conj(top.vector[i]);
        }
        out.push_back({theta, phi, top.value, {z.real(), z.imag()}});
    }
    return out;
}

inline ConvexPolygon hull_of_samples(std::span<const SupportSample> samples) {
    std::vector<Point> pts;
    pts.reserve(samples.size());
    for (const auto& s : samples) pts.push_back(s.boundary_point);
    return convex_hull(pts);
}

/// Inner polygonal approximation of W(A) from phi_count uniform support directions.
inline ConvexPolygon matrix_numerical_range(const ComplexMatrix& a, std::size_t phi_count) {
    const auto samples = support_sweep(a, phi_count);
    return hull_of_samples(samples);
}

/// Largest amount by which a sample's boundary point falls short of its support value.
inline double attainment_gap(std::span<const SupportSample> samples) {
    double gap = 0.0;
    for (const auto& s : samples) {
        const double proj = s.boundary_point.x * std::cos(s.phi) + s.boundary_point.y * std::sin(s.phi);
        gap = std::max(gap, s.support_value - proj);
    }
    return gap;
}

/// Closure of W(T_+) approximated by the hull of W(Phi(2 pi j/theta_count)).
inline RangeReport operator_range(const PeriodicBandedSpec& spec, std::size_t theta_count, std::size_t phi_count) {
    require(theta_count >= 1, "theta_count must be >= 1");
    require(phi_count >= 3, "phi_count must be >= 3");
    RangeReport report;
    report.theta_count = theta_count;
    report.phi_count = phi_count;
    report.samples.reserve(theta_count * phi_count);
    for (std::size_t j = 0; j < theta_count; ++j) {
        const double theta = uniform_angle(j, theta_count);
        const auto batch = support_sweep(symbol(spec, theta), phi_count, theta);
        report.samples.insert(report.samples.end(), batch.begin(), batch.end());
    }
    report.polygon = hull_of_samples(report.samples);
    report.residual_summary["attainment_gap"] = attainment_gap(report.samples);
    report.residual_summary["vertex_count"] = static_cast<double>(report.polygon.size());
    report.residual_summary["diameter"] = diameter(report.polygon);
    return report;
}

/// [min_theta lambda_min(Phi(theta)), max_theta lambda_max(Phi(theta))] over a uniform grid.
inline std::pair<double, double> selfadjoint_interval(const PeriodicBandedSpec& spec, std::size_t theta_count) {
    require(theta_count >= 1, "theta_count must be >= 1");
    if (!is_selfadjoint(spec))
        fail(ErrorKind::kInvalidArgument,
             "selfadjoint_interval: operator is not selfadjoint (defect " + std::to_string(selfadjoint_defect(spec)) +
                 ")");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < theta_count; ++j) {
        // rotated_hermitian_part at phi = 0 is the Hermitian part, i.e. Phi itself up to rounding
        const auto dec = eigh(rotated_hermitian_part(symbol(spec, uniform_angle(j, theta_count)), 0.0));
        lo = std::min(lo, dec.eigenvalues.front());
        hi = std::max(hi, dec.eigenvalues.back());
    }
    return {lo, hi};
}

/// Angular-resolution gap of a support sweep: diameter * (1 - cos(pi / phi_count)).
inline double sweep_resolution_bound(const ConvexPolygon& poly, std::size_t phi_count) {
    return diameter(poly) * (1.0 - std::cos(kPi / static_cast<double>(phi_count)));
}

/// Support samples of W(T_N) on a uniform grid of phi_count directions.
inline std::vector<SupportSample> truncation_support_sweep(const PeriodicBandedSpec& spec, std::size_t n,
                                                           std::size_t phi_count) {
    require(n >= 1, "truncation size must be >= 1");
    return banded_support_sweep(truncation(spec, n), spec.band(), phi_count);
}

/// Inner polygonal approximation of W(T_N).
inline ConvexPolygon truncation_range(const PeriodicBandedSpec& spec, std::size_t n, std::size_t phi_count) {
    const auto samples = truncation_support_sweep(spec, n, phi_count);
    return hull_of_samples(samples);
}

/// Largest excess of the support function of W(T_N) over the report polygon,
/// over the report's phi grid.
inline double truncation_inclusion_check(const PeriodicBandedSpec& spec, std::size_t n, const RangeReport& report) {
    require(report.phi_count >= 3 && !report.polygon.empty(), "inclusion check needs a populated report");
    double excess = -std::numeric_limits<double>::infinity();
    for (const auto& s : truncation_support_sweep(spec, n, report.phi_count))
        excess = std::max(excess, s.support_value - support(report.polygon, s.phi));
    return excess;
}

}  // namespace ptoeplitz
