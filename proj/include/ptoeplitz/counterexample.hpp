#pragma once

// The 2-periodic, 5-banded operator whose closed numerical range is not the
// numerical range of any finite matrix, and the computations that exhibit it.

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ptoeplitz/error.hpp"
#include "ptoeplitz/forms.hpp"
#include "ptoeplitz/geometry.hpp"
#include "ptoeplitz/numerical_range.hpp"
#include "ptoeplitz/operator.hpp"

namespace ptoeplitz {

/// a^{(1)} = (-1, 2), a^{(2)} = (1, 1), all other diagonals zero.
inline PeriodicBandedSpec counterexample_spec() { return make_spec(2, 2, {{1, {-1.0, 2.0}}, {2, {1.0, 1.0}}}); }

struct DualitySample {
    double x = 0.0;
    double y = 0.0;
    double residual = 0.0;  // |l(n)| / ||l||_1 with n the unit normal (grad L) at (1, x, y)
};

struct NonrepresentabilityReport {
    TernaryForm quartic;
    TernaryForm dual;
    long long envelope_ratio_num = 0;  // alpha^2 + beta^2 - gamma^2 = (num/den) L(1, X, Y)
    long long envelope_ratio_den = 0;
    std::vector<DualitySample> duality_samples;
    double max_duality_residual = 0.0;
    HyperbolicityVerdict verdict;
    std::vector<double> witness_restriction;  // descending powers of t
    std::vector<double> witness_real_roots;
    bool representable_by_matrix = true;
    std::string conclusion;
};

/// Unit normal of the tangent line to L = 0 at (1, x, y), as dual coordinates (t, x, y).
inline std::optional<std::array<double, 3>> tangent_line(const TernaryForm& curve, double x, double y) {
    auto g = curve.gradient(1.0, x, y);
    const double n = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
    if (!(n > 1e-9)) return std::nullopt;  // singular point
    for (double& c : g) c /= n;
    return g;
}

/// Real points of L(1, X, Y) = 0 obtained by solving the quadratic in Y^2 on a grid of X.
inline std::vector<std::pair<double, double>> counterexample_curve_points(std::size_t grid = 40) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < grid; ++i) {
        const double x = -2.5 + 4.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(grid);
        // 16 w^2 + (32 X^2 - 72) w + (16 X^4 - 72 X^2 + 64 X - 15) = 0 with w = Y^2
        const double a = 16.0, b = 32.0 * x * x - 72.0, c = 16.0 * x * x * x * x - 72.0 * x * x + 64.0 * x - 15.0;
        const double disc = b * b - 4.0 * a * c;
        if (disc < 0.0) continue;
        for (double sign : {1.0, -1.0}) {
            const double w = (-b + sign * std::sqrt(disc)) / (2.0 * a);
            if (w < 0.0) continue;
            pts.emplace_back(x, std::sqrt(w));
            if (w > 0.0) pts.emplace_back(x, -std::sqrt(w));
        }
    }
    return pts;
}

inline DualitySample duality_check(const TernaryForm& curve, const TernaryForm& dual, double x, double y) {
    const auto n = tangent_line(curve, x, y);
    if (!n) fail(ErrorKind::kInvalidArgument, "duality_check at a singular point");
    return {x, y, std::abs(dual((*n)[0], (*n)[1], (*n)[2])) / dual.coefficient_l1()};
}

/// Runs the algebraic chain: quartic, dual, envelope identity, sampled
/// duality, and the hyperbolicity test of the dual.
inline NonrepresentabilityReport nonrepresentability_report(std::size_t direction_count = 720, double tol = 1e-7) {
    NonrepresentabilityReport rep;
    std::string stage = "quartic";
    try {
        rep.quartic = counterexample_quartic();
        stage = "dual";
        rep.dual = counterexample_dual();

        stage = "envelope";
        const auto ratio = exact_proportionality(envelope_polynomial(counterexample_family()), dehomogenize_exact(rep.quartic));
        rep.envelope_ratio_num = ratio.first;
        rep.envelope_ratio_den = ratio.second;
        if (ratio.second == 0) fail(ErrorKind::kToleranceBreach, "envelope is not proportional to the quartic");

        stage = "duality";
        for (const auto& [x, y] : counterexample_curve_points()) {
            if (!tangent_line(rep.quartic, x, y)) continue;
            rep.duality_samples.push_back(duality_check(rep.quartic, rep.dual, x, y));
            rep.max_duality_residual = std::max(rep.max_duality_residual, rep.duality_samples.back().residual);
        }
        rep.duality_samples.push_back(duality_check(rep.quartic, rep.dual, 1.5, 0.0));
        rep.max_duality_residual = std::max(rep.max_duality_residual, rep.duality_samples.back().residual);

        stage = "hyperbolicity";
        rep.verdict = hyperbolicity_test(rep.dual, direction_count, tol);
        if (rep.verdict.witness_angle) {
            rep.witness_restriction = rep.dual.restrict_to_direction(*rep.verdict.witness_angle);
            for (Complex z : *rep.verdict.witness_roots)
                if (std::abs(z.imag()) <= tol * (1.0 + std::abs(z))) rep.witness_real_roots.push_back(z.real());
        }
        rep.representable_by_matrix = rep.verdict.hyperbolic;
        rep.conclusion = rep.verdict.hyperbolic
                             ? "dual form passed the sampled hyperbolicity test; no obstruction found"
                             : "dual form is not hyperbolic => no finite matrix B has W(B) equal to the closed range";
    } catch (const Error& e) {
        throw Error(e.kind(), "[" + stage + "] " + e.what());
    }
    return rep;
}

struct CounterexampleSummary {
    RangeReport range;
    double max_quartic_residual = 0.0;  // max |L(1,X,Y)| / (1 + |(X,Y)|^4) over polygon vertices
    double real_axis_min = 0.0;
    double real_axis_max = 0.0;
    double max_ellipse_residual = 0.0;  // 100 x 100 grid of the ellipse parametrization
    NonrepresentabilityReport algebra;
};

inline double normalized_quartic_residual(const TernaryForm& quartic, Point p) {
    const double r2 = p.x * p.x + p.y * p.y;
    return std::abs(quartic(1.0, p.x, p.y)) / (1.0 + r2 * r2);
}

inline CounterexampleSummary counterexample_pipeline(std::size_t theta_count = 720, std::size_t phi_count = 720,
                                         std::size_t direction_count = 720) {
    CounterexampleSummary out;
    std::string stage = "range";
    try {
        out.range = operator_range(counterexample_spec(), theta_count, phi_count);
        stage = "quartic residual";
        const auto quartic = counterexample_quartic();
        for (const Point& v : out.range.polygon.vertices)
            out.max_quartic_residual = std::max(out.max_quartic_residual, normalized_quartic_residual(quartic, v));
        const auto extent = real_axis_extent(out.range.polygon);
        if (!extent) fail(ErrorKind::kToleranceBreach, "range polygon misses the real axis");
        out.real_axis_min = extent->first;
        out.real_axis_max = extent->second;
        out.range.residual_summary["max_quartic_residual"] = out.max_quartic_residual;
        out.range.residual_summary["real_axis_min"] = out.real_axis_min;
        out.range.residual_summary["real_axis_max"] = out.real_axis_max;

        stage = "ellipse family";
        for (std::size_t i = 0; i < 100; ++i)
            for (std::size_t j = 0; j < 100; ++j)
                out.max_ellipse_residual = std::max(
                    out.max_ellipse_residual,
                    std::abs(ellipse_on_family_check(uniform_angle(i, 100), uniform_angle(j, 100))));
    } catch (const Error& e) {
        throw Error(e.kind(), "[" + stage + "] " + e.what());
    }
    out.algebra = nonrepresentability_report(direction_count);
    return out;
}

}  // namespace ptoeplitz
