#pragma once

// Periodic banded Toeplitz operators and their finite surrogates.
//
// Diagonal convention: the sequence stored under offset r sits on the r-th
// superdiagonal, so the operator entry at (j, k) is a_j^{(k-j)} with j taken
// modulo the period. With this convention a^{(1)} = (-1, 2), a^{(2)} = (1, 1)
// produces the upper-triangular 2-periodic, 5-banded example operator whose
// leading row is (0, -1, 1, 0, ...).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "ptoeplitz/eigen.hpp"
#include "ptoeplitz/error.hpp"
#include "ptoeplitz/matrix.hpp"

namespace ptoeplitz {

/// Unvalidated operator description as read from input.
struct RawSpec {
    long long period = 0;
    long long band = 0;
    std::map<long long, std::vector<Complex>> diagonals;
    bool zero_operator = false;  // all-zero coefficients are only accepted when declared
};

/// Validated (n+1)-periodic, (2m+1)-banded operator. Every offset -m..m is
/// present and each diagonal has exactly `period` entries.
class PeriodicBandedSpec {
public:
    std::size_t period() const noexcept { return period_; }
    std::size_t band() const noexcept { return band_; }

    /// a_j^{(r)} for r in [-m, m], any integer j (reduced modulo the period).
    Complex coefficient(long long r, long long j) const {
        const auto m = static_cast<long long>(band_);
        if (r < -m || r > m) return {};
        const auto p = static_cast<long long>(period_);
        const long long jj = ((j % p) + p) % p;
        return diagonals_[static_cast<std::size_t>(r + m)][static_cast<std::size_t>(jj)];
    }

    /// Entry (j, k) of the bi-infinite matrix of T.
    Complex entry(long long j, long long k) const { return coefficient(k - j, j); }

    const std::vector<Complex>& diagonal(long long r) const {
        return diagonals_.at(static_cast<std::size_t>(r + static_cast<long long>(band_)));
    }

    double max_abs_coefficient() const {
        double a = 0.0;
        for (const auto& d : diagonals_)
            for (Complex z : d) a = std::max(a, std::abs(z));
        return a;
    }

    bool is_zero() const { return max_abs_coefficient() == 0.0; }

    friend PeriodicBandedSpec validate_spec(const RawSpec& raw);
    friend bool operator==(const PeriodicBandedSpec&, const PeriodicBandedSpec&) = default;

private:
    std::size_t period_ = 1;
    std::size_t band_ = 0;
    std::vector<std::vector<Complex>> diagonals_;  // index r + m
};

inline PeriodicBandedSpec validate_spec(const RawSpec& raw) {
    require(raw.period >= 1, "period must be >= 1 (got " + std::to_string(raw.period) + ")");
    require(raw.band >= 0, "band must be >= 0 (got " + std::to_string(raw.band) + ")");
    require(raw.period <= static_cast<long long>(kMaxDenseDimension), "period exceeds dense size cap");
    PeriodicBandedSpec spec;
    spec.period_ = static_cast<std::size_t>(raw.period);
    spec.band_ = static_cast<std::size_t>(raw.band);
    spec.diagonals_.assign(2 * spec.band_ + 1, std::vector<Complex>(spec.period_, Complex{}));
    for (const auto& [r, values] : raw.diagonals) {
        require(std::llabs(r) <= raw.band,
                "diagonal offset " + std::to_string(r) + " outside -" + std::to_string(raw.band) + ".." +
                    std::to_string(raw.band));
        require(values.size() == spec.period_, "diagonal offset " + std::to_string(r) + " has " +
                                                   std::to_string(values.size()) + " entries, expected " +
                                                   std::to_string(spec.period_));
        for (std::size_t j = 0; j < values.size(); ++j)
            require(is_finite(values[j]),
                    "diagonal offset " + std::to_string(r) + " entry " + std::to_string(j) + " is not finite");
        spec.diagonals_[static_cast<std::size_t>(r + raw.band)] = values;
    }
    require(!spec.is_zero() || raw.zero_operator, "all coefficients are zero; declare the zero operator explicitly");
    return spec;
}

/// Convenience: build from offset -> values without the zero-operator flag.
inline PeriodicBandedSpec make_spec(long long period, long long band,
                                    std::map<long long, std::vector<Complex>> diagonals) {
    return validate_spec(RawSpec{period, band, std::move(diagonals), false});
}

/// The same operator regarded as having period `new_period` (a multiple of the current one).
inline PeriodicBandedSpec with_period(const PeriodicBandedSpec& spec, std::size_t new_period) {
    require(new_period % spec.period() == 0, "new period must be a multiple of the period");
    RawSpec raw{static_cast<long long>(new_period), static_cast<long long>(spec.band()), {}, spec.is_zero()};
    const auto m = static_cast<long long>(spec.band());
    for (long long r = -m; r <= m; ++r) {
        std::vector<Complex> d(new_period);
        for (std::size_t j = 0; j < new_period; ++j) d[j] = spec.coefficient(r, static_cast<long long>(j));
        raw.diagonals[r] = std::move(d);
    }
    return validate_spec(raw);
}

/// Leading N x N compression T_N of T_+.
inline ComplexMatrix truncation(const PeriodicBandedSpec& spec, std::size_t n) {
    require(n >= 1, "truncation size must be >= 1");
    ComplexMatrix t(n, n);
    const std::size_t m = spec.band();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = (j >= m ? j - m : 0); k < std::min(n, j + m + 1); ++k)
            t(j, k) = spec.entry(static_cast<long long>(j), static_cast<long long>(k));
    return t;
}

namespace detail {

inline long long floor_div(long long a, long long b) {
    const long long q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace detail

/// Symbol Phi(theta): entry (j, k) = sum_u e^{i u theta} T(j, k + u (n+1)).
inline ComplexMatrix symbol(const PeriodicBandedSpec& spec, double theta) {
    const auto p = static_cast<long long>(spec.period());
    const auto m = static_cast<long long>(spec.band());
    theta = std::fmod(theta, 2.0 * kPi);
    ComplexMatrix phi(spec.period(), spec.period());
    for (long long j = 0; j < p; ++j)
        for (long long k = 0; k < p; ++k) {
            // u ranges over the integers with -m <= k + u p - j <= m
            const long long u_lo = detail::floor_div(j - k - m + p - 1, p);
            const long long u_hi = detail::floor_div(j - k + m, p);
            Complex sum{};
            for (long long u = u_lo; u <= u_hi; ++u) {
                const Complex a = spec.entry(j, k + u * p);
                if (a == Complex{}) continue;
                sum += (u == 0 ? Complex{1.0} : std::polar(1.0, static_cast<double>(u) * theta)) * a;
            }
            phi(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = sum;
        }
    return phi;
}

/// C_mu with mu = s (n+1): entry (j, k) = sum_u T(j, k + u mu).
inline ComplexMatrix c_mu(const PeriodicBandedSpec& spec, std::size_t s) {
    require(s >= 1, "c_mu needs s >= 1");
    require(s * spec.period() >= 2 * spec.band() + 1,
            "c_mu needs s(n+1) >= 2m+1 (s=" + std::to_string(s) + ", n+1=" + std::to_string(spec.period()) +
                ", m=" + std::to_string(spec.band()) + ")");
    const auto mu = static_cast<long long>(s * spec.period());
    const auto m = static_cast<long long>(spec.band());
    ComplexMatrix c(static_cast<std::size_t>(mu), static_cast<std::size_t>(mu));
    for (long long j = 0; j < mu; ++j)
        for (long long k = 0; k < mu; ++k) {
            Complex sum{};
            for (long long u = -1; u <= 1; ++u) {
                const long long off = k + u * mu - j;
                if (off >= -m && off <= m) sum += spec.entry(j, k + u * mu);
            }
            c(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = sum;
        }
    return c;
}

/// Unitary whose column q(n+1)+p is f_{p,q} = s^{-1/2} sum_u rho^{uq} e_{p+u(n+1)}, rho = e^{2 pi i/s}.
inline ComplexMatrix fourier_unitary(std::size_t period, std::size_t s) {
    require(period >= 1, "fourier_unitary needs period >= 1");
    require(s >= 1, "fourier_unitary needs s >= 1");
    const std::size_t mu = s * period;
    ComplexMatrix u_mat(mu, mu);
    const double norm = 1.0 / std::sqrt(static_cast<double>(s));
    for (std::size_t q = 0; q < s; ++q)
        for (std::size_t p = 0; p < period; ++p)
            for (std::size_t u = 0; u < s; ++u) {
                // reduce u q mod s so the phase is exact at the roots of unity
                const double angle = 2.0 * kPi * static_cast<double>((u * q) % s) / static_cast<double>(s);
                u_mat(p + u * period, q * period + p) = std::polar(norm, angle);
            }
    return u_mat;
}

/// Phi(2 pi q / s) for q = 0..s-1.
inline std::vector<ComplexMatrix> symbol_blocks(const PeriodicBandedSpec& spec, std::size_t s) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(s);
    for (std::size_t q = 0; q < s; ++q)
        blocks.push_back(symbol(spec, 2.0 * kPi * static_cast<double>(q) / static_cast<double>(s)));
    return blocks;
}

/// max |U* C_mu U - (Phi(0) + Phi(2pi/s) + ... + Phi(2(s-1)pi/s))|.
inline double block_diagonalization_residual(const PeriodicBandedSpec& spec, std::size_t s) {
    const ComplexMatrix c = c_mu(spec, s);
    const ComplexMatrix u = fourier_unitary(spec.period(), s);
    const auto blocks = symbol_blocks(spec, s);
    return max_norm(adjoint(u) * c * u - direct_sum(blocks));
}

struct LiftedEigenvector {
    std::vector<Complex> base;
    std::size_t replication = 0;
    std::size_t frequency = 0;
    std::vector<Complex> lifted;
};

/// V_r = (v, rho^r v, rho^{2r} v, ..., rho^{(s-1)r} v) with rho = e^{2 pi i/s}.
inline LiftedEigenvector lift_eigenvector(std::vector<Complex> v, std::size_t r, std::size_t s) {
    require(!v.empty(), "lift_eigenvector: empty base vector");
    require(s >= 1 && r < s, "lift_eigenvector needs 0 <= r < s");
    const std::size_t p = v.size();
    std::vector<Complex> lifted(p * s);
    for (std::size_t u = 0; u < s; ++u) {
        const Complex phase =
            std::polar(1.0, 2.0 * kPi * static_cast<double>((u * r) % s) / static_cast<double>(s));
        for (std::size_t j = 0; j < p; ++j) lifted[j + u * p] = v[j] * phase;
    }
    return {std::move(v), s, r, std::move(lifted)};
}

/// Selfadjointness of T: a_j^{(r)} = conj(a_{j+r}^{(-r)}) for all j, r.
inline double selfadjoint_defect(const PeriodicBandedSpec& spec) {
    const auto m = static_cast<long long>(spec.band());
    const auto p = static_cast<long long>(spec.period());
    double d = 0.0;
    for (long long j = 0; j < p; ++j)
        for (long long r = -m; r <= m; ++r)
            d = std::max(d, std::abs(spec.entry(j, j + r) - std::conj(spec.entry(j + r, j))));
    return d;
}

inline bool is_selfadjoint(const PeriodicBandedSpec& spec, double tol = 1e-12) {
    return selfadjoint_defect(spec) <= tol * (1.0 + spec.max_abs_coefficient());
}

/// Extreme eigenvalues of the selfadjoint truncation T_N without forming it densely.
inline std::pair<double, double> truncation_extremes(const PeriodicBandedSpec& spec, std::size_t n,
                                                     double tol = 1e-10) {
    require(is_selfadjoint(spec), "truncation_extremes needs a selfadjoint operator");
    return banded_hermitian_extremes(
        n, spec.band(),
        [&](std::size_t j, std::size_t k) { return spec.entry(static_cast<long long>(j), static_cast<long long>(k)); },
        tol);
}

// ---------------------------------------------------------------------------
// Spectral identities between C_mu and the sampled symbols.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> r(a.size() + b.size() - 1, Complex{});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace detail

/// Compares det(lambda - C_mu) with prod_r det(lambda - Phi(2 pi r/s)) coefficientwise.
/// Both sides are computed on matrices scaled into the unit disk; the result is
/// max_k |c_k - d_k| / max(1, max_k |c_k|).
inline double eigenvalue_multiset_mismatch(const PeriodicBandedSpec& spec, std::size_t s) {
    const ComplexMatrix c = c_mu(spec, s);
    double row_sum = 0.0;
    for (std::size_t i = 0; i < c.rows(); ++i) {
        double r = 0.0;
        for (std::size_t j = 0; j < c.cols(); ++j) r += std::abs(c(i, j));
        row_sum = std::max(row_sum, r);
    }
    const Complex inv = 1.0 / std::max(1.0, row_sum);
    const auto lhs = characteristic_polynomial(inv * c);
    std::vector<Complex> rhs{Complex{1.0}};
    for (const auto& block : symbol_blocks(spec, s)) rhs = detail::poly_mul(rhs, characteristic_polynomial(inv * block));
    require(lhs.size() == rhs.size(), "characteristic polynomial degree mismatch");
    double diff = 0.0, mag = 1.0;
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        diff = std::max(diff, std::abs(lhs[k] - rhs[k]));
        mag = std::max(mag, std::abs(lhs[k]));
    }
    return diff / mag;
}

/// For every r and every eigenpair (lambda, v) of Phi(2 pi r/s) with |v| = 1,
/// max |C_mu V_r - lambda V_r| over the entries of the lifted vector.
inline double lifted_eigenvector_residual(const PeriodicBandedSpec& spec, std::size_t s) {
    const ComplexMatrix c = c_mu(spec, s);
    double worst = 0.0;
    for (std::size_t r = 0; r < s; ++r) {
        const ComplexMatrix phi = symbol(spec, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(s));
        for (Complex lambda : eigenvalues(phi)) {
            const auto lifted = lift_eigenvector(eigenvector_for(phi, lambda), r, s);
            const auto cw = c * std::span<const Complex>(lifted.lifted);
            for (std::size_t i = 0; i < cw.size(); ++i)
                worst = std::max(worst, std::abs(cw[i] - lambda * lifted.lifted[i]));
        }
    }
    return worst;
}

}  // namespace ptoeplitz
