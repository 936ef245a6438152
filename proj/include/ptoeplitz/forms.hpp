#pragma once

// Real ternary forms, Kippenhahn polynomials and hyperbolicity, together with
// the algebraic data of the 2-periodic, 5-banded example operator: its
// boundary quartic L(U, X, Y), the dual quartic l(t, x, y) and the family of
// ellipses H(X, Y; theta) = alpha cos(theta) + beta sin(theta) + gamma.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptoeplitz/eigen.hpp"
#include "ptoeplitz/error.hpp"
#include "ptoeplitz/geometry.hpp"
#include "ptoeplitz/matrix.hpp"
#include "ptoeplitz/polynomial.hpp"

namespace ptoeplitz {

/// Exponents of (t, x, y); for the point curve L the same slots hold (U, X, Y).
using Exponent = std::array<int, 3>;

/// Real homogeneous polynomial in three variables.
class TernaryForm {
public:
    TernaryForm() = default;

    TernaryForm(int degree, std::map<Exponent, double> coefficients) : degree_(degree) {
        require(degree >= 0, "form degree must be >= 0");
        for (const auto& [e, c] : coefficients) {
            require(e[0] >= 0 && e[1] >= 0 && e[2] >= 0, "negative exponent in form");
            require(e[0] + e[1] + e[2] == degree, "exponents do not sum to the form degree");
            require(std::isfinite(c), "non-finite form coefficient");
            if (c != 0.0) coefficients_[e] = c;
        }
        require(!coefficients_.empty(), "a form needs at least one nonzero coefficient");
    }

    int degree() const noexcept { return degree_; }
    const std::map<Exponent, double>& coefficients() const noexcept { return coefficients_; }

    double coefficient(int i, int j, int k) const {
        auto it = coefficients_.find({i, j, k});
        return it == coefficients_.end() ? 0.0 : it->second;
    }

    double operator()(double t, double x, double y) const {
        double s = 0.0;
        for (const auto& [e, c] : coefficients_) s += c * ipow(t, e[0]) * ipow(x, e[1]) * ipow(y, e[2]);
        return s;
    }

    /// F(t, -cos(theta), -sin(theta)) as a polynomial in t, descending powers.
    std::vector<double> restrict_to_direction(double theta) const {
        const double x = -std::cos(theta), y = -std::sin(theta);
        std::vector<double> desc(static_cast<std::size_t>(degree_) + 1, 0.0);
        for (const auto& [e, c] : coefficients_)
            desc[static_cast<std::size_t>(degree_ - e[0])] += c * ipow(x, e[1]) * ipow(y, e[2]);
        return desc;
    }

    /// (dF/dt, dF/dx, dF/dy)
    std::array<double, 3> gradient(double t, double x, double y) const {
        std::array<double, 3> g{0.0, 0.0, 0.0};
        const std::array<double, 3> v{t, x, y};
        for (const auto& [e, c] : coefficients_)
            for (std::size_t slot = 0; slot < 3; ++slot) {
                if (e[slot] == 0) continue;
                double term = c * e[slot];
                for (std::size_t o = 0; o < 3; ++o) term *= ipow(v[o], o == slot ? e[o] - 1 : e[o]);
                g[slot] += term;
            }
        return g;
    }

    double coefficient_l1() const {
        double s = 0.0;
        for (const auto& [e, c] : coefficients_) s += std::abs(c);
        return s;
    }

    friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

private:
    static double ipow(double v, int e) {
        double r = 1.0;
        for (int i = 0; i < e; ++i) r *= v;
        return r;
    }

    int degree_ = 0;
    std::map<Exponent, double> coefficients_;
};

inline double evaluate_form(const TernaryForm& f, double t, double x, double y) { return f(t, x, y); }

/// L(U,X,Y) = 16X^4 + 32X^2Y^2 + 16Y^4 - 72U^2X^2 - 72U^2Y^2 + 64U^3X - 15U^4.
inline TernaryForm counterexample_quartic() {
    return TernaryForm(4, {{{0, 4, 0}, 16.0},
                           {{0, 2, 2}, 32.0},
                           {{0, 0, 4}, 16.0},
                           {{2, 2, 0}, -72.0},
                           {{2, 0, 2}, -72.0},
                           {{3, 1, 0}, 64.0},
                           {{4, 0, 0}, -15.0}});
}

/// l(t,x,y) = 16t^4 + 32t^3x - 72t^2(x^2+y^2) - 216t(x^3+xy^2) - 135x^4 - 162x^2y^2 - 27y^4.
inline TernaryForm counterexample_dual() {
    return TernaryForm(4, {{{4, 0, 0}, 16.0},
                           {{3, 1, 0}, 32.0},
                           {{2, 2, 0}, -72.0},
                           {{2, 0, 2}, -72.0},
                           {{1, 3, 0}, -216.0},
                           {{1, 1, 2}, -216.0},
                           {{0, 4, 0}, -135.0},
                           {{0, 2, 2}, -162.0},
                           {{0, 0, 4}, -27.0}});
}

/// H(X, Y; theta) = alpha(X,Y) cos(theta) + beta(X,Y) sin(theta) + gamma(X,Y).
struct ConicFamilyCoefficients {
    IntegerPolynomial alpha;
    IntegerPolynomial beta;
    IntegerPolynomial gamma;

    double operator()(double x, double y, double theta) const {
        return alpha(x, y) * std::cos(theta) + beta(x, y) * std::sin(theta) + gamma(x, y);
    }
};

inline ConicFamilyCoefficients counterexample_family() {
    ConicFamilyCoefficients f;
    f.alpha.terms = {{{2, 0}, 16}, {{0, 2}, -16}, {{1, 0}, -40}, {{0, 0}, 16}};
    f.beta.terms = {{{1, 1}, 32}, {{0, 1}, -40}};
    f.gamma.terms = {{{2, 0}, 20}, {{0, 2}, 20}, {{1, 0}, -32}, {{0, 0}, 11}};
    return f;
}

/// alpha^2 + beta^2 - gamma^2 at (X, Y); zero exactly on the envelope of the family.
inline double envelope_residual(const ConicFamilyCoefficients& fam, double x, double y) {
    const double a = fam.alpha(x, y), b = fam.beta(x, y), g = fam.gamma(x, y);
    return a * a + b * b - g * g;
}

/// alpha^2 + beta^2 - gamma^2 in exact integer arithmetic.
inline IntegerPolynomial envelope_polynomial(const ConicFamilyCoefficients& fam) {
    return fam.alpha * fam.alpha + fam.beta * fam.beta - fam.gamma * fam.gamma;
}

/// F(1, X, Y) of an integer-valued form, exactly.
inline IntegerPolynomial dehomogenize_exact(const TernaryForm& f) {
    IntegerPolynomial p;
    for (const auto& [e, c] : f.coefficients()) {
        const auto ic = static_cast<long long>(c);
        require(static_cast<double>(ic) == c, "dehomogenize_exact needs integer coefficients");
        p.terms[{e[1], e[2]}] += ic;
    }
    p.prune();
    return p;
}

/// Point of the ellipse bounding W(Phi(theta)) at parameter t.
inline std::pair<double, double> counterexample_ellipse_point(double theta, double t) {
    const double ch = std::cos(theta / 2.0), sh = std::sin(theta / 2.0);
    const double x = std::cos(theta) + 0.5 * ch * std::cos(t) - 1.5 * sh * std::sin(t);
    const double y = std::sin(theta) + 0.5 * sh * std::cos(t) + 1.5 * ch * std::sin(t);
    return {x, y};
}

/// H(X(t), Y(t); theta) for the parametrized ellipse; vanishes identically.
inline double ellipse_on_family_check(double theta, double t) {
    const auto [x, y] = counterexample_ellipse_point(theta, t);
    return counterexample_family()(x, y, theta);
}

// ---------------------------------------------------------------------------
// Kippenhahn polynomial
// ---------------------------------------------------------------------------

inline constexpr std::size_t kKippenhahnMaxSize = 12;

namespace detail {

struct LeastSquaresFit {
    std::vector<double> solution;
    double residual = 0.0;   // max |A x - b|
    double condition = 1.0;  // max |R_ii| / min |R_ii|
};

// Dense real least squares by Householder QR. a is rows x cols, row-major.
inline LeastSquaresFit least_squares(std::vector<double> a, std::vector<double> b, std::size_t rows, std::size_t cols) {
    require(rows >= cols, "least squares needs rows >= cols");
    const std::vector<double> a0 = a, b0 = b;
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * cols + j]; };
    for (std::size_t k = 0; k < cols; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < rows; ++i) norm += at(i, k) * at(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double alpha = at(k, k) > 0 ? -norm : norm;
        std::vector<double> v(rows, 0.0);
        for (std::size_t i = k; i < rows; ++i) v[i] = at(i, k);
        v[k] -= alpha;
        double vn = 0.0;
        for (std::size_t i = k; i < rows; ++i) vn += v[i] * v[i];
        if (vn == 0.0) continue;
        for (std::size_t j = k; j < cols; ++j) {
            double s = 0.0;
            for (std::size_t i = k; i < rows; ++i) s += v[i] * at(i, j);
            s = 2.0 * s / vn;
            for (std::size_t i = k; i < rows; ++i) at(i, j) -= s * v[i];
        }
        double s = 0.0;
        for (std::size_t i = k; i < rows; ++i) s += v[i] * b[i];
        s = 2.0 * s / vn;
        for (std::size_t i = k; i < rows; ++i) b[i] -= s * v[i];
    }
    LeastSquaresFit fit;
    double rmax = 0.0, rmin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < cols; ++k) {
        rmax = std::max(rmax, std::abs(at(k, k)));
        rmin = std::min(rmin, std::abs(at(k, k)));
    }
    fit.condition = rmin > 0.0 ? rmax / rmin : std::numeric_limits<double>::infinity();
    if (!std::isfinite(fit.condition)) return fit;
    fit.solution.assign(cols, 0.0);
    for (std::size_t k = cols; k-- > 0;) {
        double s = b[k];
        for (std::size_t j = k + 1; j < cols; ++j) s -= at(k, j) * fit.solution[j];
        fit.solution[k] = s / at(k, k);
    }
    for (std::size_t i = 0; i < rows; ++i) {
        double s = -b0[i];
        for (std::size_t j = 0; j < cols; ++j) s += a0[i * cols + j] * fit.solution[j];
        fit.residual = std::max(fit.residual, std::abs(s));
    }
    return fit;
}

}  // namespace detail

/// F_B(t, x, y) = det(t I + x Re(B) + y Im(B)).
///
/// For a unit direction (x, y) = (cos psi, sin psi) the determinant equals
/// prod_i (t + mu_i) with mu_i the eigenvalues of x Re(B) + y Im(B), so the
/// coefficient of t^{k-d} is the elementary symmetric function e_d(mu), a
/// binary form of degree d in (x, y). Each binary form is recovered from
/// 2(d+1) sampled directions in [0, pi) by least squares.
inline TernaryForm kippenhahn_form(const ComplexMatrix& b) {
    require(b.square() && b.rows() >= 1, "kippenhahn_form needs a nonempty square matrix");
    const std::size_t k = b.rows();
    require(k <= kKippenhahnMaxSize, "kippenhahn_form: size " + std::to_string(k) + " over budget " +
                                         std::to_string(kKippenhahnMaxSize));
    const ComplexMatrix bstar = adjoint(b);
    const ComplexMatrix re = Complex{0.5} * (b + bstar);
    const ComplexMatrix im = Complex{0.0, -0.5} * (b - bstar);

    std::map<Exponent, double> coeffs;
    coeffs[{static_cast<int>(k), 0, 0}] = 1.0;
    for (std::size_t d = 1; d <= k; ++d) {
        const std::size_t samples = 2 * (d + 1);
        std::vector<double> a(samples * (d + 1)), rhs(samples);
        for (std::size_t s = 0; s < samples; ++s) {
            const double psi = kPi * (static_cast<double>(s) + 0.5) / static_cast<double>(samples);
            const double c = std::cos(psi), sn = std::sin(psi);
            ComplexMatrix m = Complex{c} * re + Complex{sn} * im;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) m(j, i) = std::conj(m(i, j));
            const auto mu = eigh(m).eigenvalues;
            // e_d(mu) by the usual recurrence
            std::vector<double> e(k + 1, 0.0);
            e[0] = 1.0;
            for (double v : mu)
                for (std::size_t q = k; q >= 1; --q) e[q] += v * e[q - 1];
            rhs[s] = e[d];
            for (std::size_t j = 0; j <= d; ++j)  // column j: x^{d-j} y^j
                a[s * (d + 1) + j] = std::pow(c, static_cast<double>(d - j)) * std::pow(sn, static_cast<double>(j));
        }
        const auto fit = detail::least_squares(a, rhs, samples, d + 1);
        if (!(fit.condition < 1e10))
            fail(ErrorKind::kIllConditioned,
                 "kippenhahn_form: interpolation condition estimate " + std::to_string(fit.condition));
        double magnitude = 1.0;
        for (double v : rhs) magnitude = std::max(magnitude, std::abs(v));
        if (fit.residual > 1e-8 * magnitude)
            fail(ErrorKind::kIllConditioned, "kippenhahn_form: fit residual " + std::to_string(fit.residual) +
                                                 " at degree " + std::to_string(d));
        for (std::size_t j = 0; j <= d; ++j)
            coeffs[{static_cast<int>(k - d), static_cast<int>(d - j), static_cast<int>(j)}] = fit.solution[j];
    }
    return TernaryForm(static_cast<int>(k), coeffs);
}

// ---------------------------------------------------------------------------
// Hyperbolicity with respect to (1, 0, 0)
// ---------------------------------------------------------------------------

struct HyperbolicityVerdict {
    bool hyperbolic = true;
    std::optional<double> witness_angle;            // theta of the failing direction
    std::optional<Point> witness_direction;        // (x, y) = (-cos theta, -sin theta)
    std::optional<std::vector<Complex>> witness_roots;
    double max_imag = 0.0;  // witness max |Im| when not hyperbolic, else max over all directions
    std::size_t direction_count = 0;
    double tol = 0.0;
};

/// Samples theta_j = 2 pi j / direction_count and counts the real roots of
/// F(t, -cos theta_j, -sin theta_j). On failure the witness is the direction
/// with the largest imaginary part, ties resolved towards the smaller angle.
inline HyperbolicityVerdict hyperbolicity_test(const TernaryForm& f, std::size_t direction_count = 720,
                                               double tol = 1e-7) {
    require(direction_count >= 1, "hyperbolicity_test needs at least one direction");
    const int d = f.degree();
    if (f.coefficient(d, 0, 0) == 0.0)
        fail(ErrorKind::kInvalidArgument, "hyperbolicity_test: coefficient of t^d vanishes");
    HyperbolicityVerdict verdict;
    verdict.direction_count = direction_count;
    verdict.tol = tol;
    double worst = -1.0;
    for (std::size_t j = 0; j < direction_count; ++j) {
        const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(direction_count);
        const auto restricted = f.restrict_to_direction(theta);
        const auto roots = univariate_real_root_count(restricted, tol);
        double imag = 0.0;
        for (Complex z : roots.roots) imag = std::max(imag, std::abs(z.imag()));
        const bool ok = roots.real_count == static_cast<std::size_t>(d);
        verdict.max_imag = std::max(verdict.max_imag, imag);
        if (ok) continue;
        verdict.hyperbolic = false;
        if (imag > worst * (1.0 + 1e-9)) {
            worst = imag;
            verdict.witness_angle = theta;
            verdict.witness_direction = Point{-std::cos(theta), -std::sin(theta)};
            verdict.witness_roots = roots.roots;
        }
    }
    if (!verdict.hyperbolic) verdict.max_imag = worst;
    return verdict;
}

}  // namespace ptoeplitz
