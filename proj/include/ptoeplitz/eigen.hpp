#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "ptoeplitz/error.hpp"
#include "ptoeplitz/matrix.hpp"

namespace ptoeplitz {

struct HermitianEigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]
};

struct JacobiOptions {
    int max_sweeps = 100;
    double relative_threshold = 1e-13;  // off-diagonal Frobenius norm vs ||H||_F
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One unitary annihilation of a(p,q), applied as a <- W* a W and vt <- (V W)^T
// with W = diag(1, e) * [[c, s], [-s, c]] on the (p, q) plane, e = conj(a_pq)/|a_pq|.
// Rows are rotated (contiguous) and mirrored into the columns by Hermitian symmetry.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& vt, std::size_t p, std::size_t q) {
    const std::size_t n = a.rows();
    const Complex g = a(p, q);
    const double mag = std::abs(g);
    if (mag == 0.0) return;
    const Complex e = std::conj(g) / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex se = s * e;
    const Complex ce = c * e;
    const Complex sec = std::conj(se);
    const Complex cec = std::conj(ce);
    Complex* row_p = &a(p, 0);
    Complex* row_q = &a(q, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = row_p[k];
        const Complex aqk = row_q[k];
        row_p[k] = c * apk - sec * aqk;
        row_q[k] = s * apk + cec * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        a(k, p) = std::conj(row_p[k]);
        a(k, q) = std::conj(row_q[k]);
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app - t * mag;
    a(q, q) = aqq + t * mag;

    Complex* vp = &vt(p, 0);
    Complex* vq = &vt(q, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex x = vp[k];
        const Complex y = vq[k];
        vp[k] = c * x - se * y;
        vq[k] = s * x + ce * y;
    }
}

inline void require_hermitian(const ComplexMatrix& h) {
    require(h.square(), "eigh needs a square matrix");
    require(h.all_finite(), "eigh: non-finite entry");
    const double scale = 1.0 + max_norm(h);
    if (hermitian_defect(h) > 1e-12 * scale)
        fail(ErrorKind::kInvalidArgument,
             "eigh: input is not Hermitian (defect " + std::to_string(hermitian_defect(h)) + ")");
}

// Sweeps a (Hermitian, similar to h) to diagonal form, accumulating rotations into v.
inline HermitianEigenDecomposition jacobi_diagonalize(const ComplexMatrix& h, ComplexMatrix a, ComplexMatrix v,
                                                      const JacobiOptions& opts) {
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
    ComplexMatrix vt(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) vt(j, i) = v(i, j);
    const double target = opts.relative_threshold * frobenius_norm(h);
    int sweep = 0;
    for (; sweep < opts.max_sweeps; ++sweep) {
        const double off = detail::off_diagonal_norm(a);
        if (off <= target || off == 0.0) break;
        // Entries far below the current off-diagonal mass wait for a later sweep.
        const double skip_below = 0.1 * off / static_cast<double>(n);
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                // Entries already negligible against both diagonals are dropped.
                const double g = std::abs(a(p, q));
                if (g == 0.0 || g < skip_below) continue;
                if (sweep > 3 && 1e3 * g <= std::numeric_limits<double>::epsilon() *
                                                std::min(std::abs(a(p, p).real()), std::abs(a(q, q).real()))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                detail::jacobi_rotate(a, vt, p, q);
            }
    }
    if (sweep == opts.max_sweeps && detail::off_diagonal_norm(a) > target)
        fail(ErrorKind::kNonConvergence, "eigh: Jacobi did not converge in " + std::to_string(opts.max_sweeps) +
                                             " sweeps (off-diagonal " +
                                             std::to_string(detail::off_diagonal_norm(a)) + ")");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = vt(order[j], i);
    }
    return out;
}

}  // namespace detail

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
inline HermitianEigenDecomposition eigh(const ComplexMatrix& h, const JacobiOptions& opts = {}) {
    detail::require_hermitian(h);
    return detail::jacobi_diagonalize(h, h, ComplexMatrix::identity(h.rows()), opts);
}

/// Same as eigh, starting the sweeps from basis* h basis for a unitary basis
/// close to the eigenvectors (e.g. those of a nearby matrix).
inline HermitianEigenDecomposition eigh_from(const ComplexMatrix& h, const ComplexMatrix& basis,
                                             const JacobiOptions& opts = {}) {
    detail::require_hermitian(h);
    require(basis.rows() == h.rows() && basis.square(), "eigh_from: basis has the wrong shape");
    ComplexMatrix a = adjoint(basis) * h * basis;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    return detail::jacobi_diagonalize(h, std::move(a), basis, opts);
}

// ---------------------------------------------------------------------------
// Small general (non-Hermitian) matrices. Used for polynomial roots via
// companion matrices, characteristic polynomials and eigenpairs of symbols.
// ---------------------------------------------------------------------------

/// Unitary similarity to upper Hessenberg form (Householder).
inline ComplexMatrix hessenberg(const ComplexMatrix& a0) {
    require(a0.square(), "hessenberg needs a square matrix");
    ComplexMatrix a = a0;
    const std::size_t n = a.rows();
    std::vector<Complex> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(a(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        const Complex x0 = a(k + 1, k);
        const Complex phase = std::abs(x0) == 0.0 ? Complex{1.0} : x0 / std::abs(x0);
        const Complex alpha = -phase * xnorm;
        std::fill(v.begin(), v.end(), Complex{});
        for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
        v[k + 1] -= alpha;
        double vn = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vn += std::norm(v[i]);
        vn = std::sqrt(vn);
        if (vn == 0.0) continue;
        for (std::size_t i = k + 1; i < n; ++i) v[i] /= vn;
        // a <- (I - 2 v v*) a
        for (std::size_t j = 0; j < n; ++j) {
            Complex s{};
            for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * a(i, j);
            for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= 2.0 * v[i] * s;
        }
        // a <- a (I - 2 v v*)
        for (std::size_t i = 0; i < n; ++i) {
            Complex s{};
            for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= 2.0 * s * std::conj(v[j]);
        }
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
    }
    return a;
}

/// Eigenvalues of a general complex matrix: Hessenberg reduction followed by
/// Wilkinson-shifted QR with deflation. Order is unspecified.
inline std::vector<Complex> eigenvalues(const ComplexMatrix& a0) {
    require(a0.square(), "eigenvalues needs a square matrix");
    require(a0.all_finite(), "eigenvalues: non-finite entry");
    const std::size_t n = a0.rows();
    std::vector<Complex> out;
    out.reserve(n);
    if (n == 0) return out;
    ComplexMatrix h = hessenberg(a0);
    const double eps = std::numeric_limits<double>::epsilon();
    const double anorm = std::max(max_norm(a0), std::numeric_limits<double>::min());

    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
    int iter = 0;
    const int max_iter = 60 * static_cast<int>(n);
    std::vector<Complex> cs_s;
    std::vector<double> cs_c;
    while (hi >= 0) {
        if (hi == 0) {
            out.push_back(h(0, 0));
            break;
        }
        std::ptrdiff_t l = hi;
        for (; l > 0; --l) {
            const double sub = std::abs(h(l, l - 1));
            double ref = std::abs(h(l, l)) + std::abs(h(l - 1, l - 1));
            if (ref == 0.0) ref = anorm;
            if (sub <= eps * ref) {
                h(l, l - 1) = 0.0;
                break;
            }
        }
        if (l == hi) {
            out.push_back(h(hi, hi));
            --hi;
            iter = 0;
            continue;
        }
        if (++iter > max_iter) fail(ErrorKind::kNonConvergence, "eigenvalues: QR iteration did not converge");

        // Wilkinson shift from the trailing 2x2 block.
        const Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
        const Complex tr = a + d;
        const Complex disc = std::sqrt((a - d) * (a - d) + 4.0 * b * c);
        const Complex mu1 = 0.5 * (tr + disc), mu2 = 0.5 * (tr - disc);
        Complex shift = std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
        if (iter % 11 == 10) shift = d + Complex{std::abs(c), 0.0} * 0.75;  // exceptional shift

        const auto lo = static_cast<std::size_t>(l);
        const auto top = static_cast<std::size_t>(hi);
        for (std::size_t k = lo; k <= top; ++k) h(k, k) -= shift;
        cs_c.assign(top - lo, 0.0);
        cs_s.assign(top - lo, Complex{});
        for (std::size_t k = lo; k < top; ++k) {
            const Complex x = h(k, k), y = h(k + 1, k);
            const double r = std::hypot(std::abs(x), std::abs(y));
            double cc;
            Complex ss;
            if (r == 0.0) {
                cc = 1.0;
                ss = 0.0;
            } else if (std::abs(x) == 0.0) {
                cc = 0.0;
                ss = std::conj(y) / std::abs(y);
            } else {
                cc = std::abs(x) / r;
                ss = (x / std::abs(x)) * std::conj(y) / r;
            }
            cs_c[k - lo] = cc;
            cs_s[k - lo] = ss;
            for (std::size_t j = k; j <= top; ++j) {
                const Complex u = h(k, j), w = h(k + 1, j);
                h(k, j) = cc * u + ss * w;
                h(k + 1, j) = -std::conj(ss) * u + cc * w;
            }
        }
        for (std::size_t k = lo; k < top; ++k) {
            const double cc = cs_c[k - lo];
            const Complex ss = cs_s[k - lo];
            const std::size_t last = std::min(k + 2, top);
            for (std::size_t i = lo; i <= last; ++i) {
                const Complex u = h(i, k), w = h(i, k + 1);
                h(i, k) = u * cc + w * std::conj(ss);
                h(i, k + 1) = -u * ss + w * cc;
            }
        }
        for (std::size_t k = lo; k <= top; ++k) h(k, k) += shift;
    }
    return out;
}

/// Coefficients (ascending powers) of det(lambda I - A), expanded along the
/// last row of the Hessenberg form.
inline std::vector<Complex> characteristic_polynomial(const ComplexMatrix& a) {
    require(a.square(), "characteristic_polynomial needs a square matrix");
    const std::size_t n = a.rows();
    const ComplexMatrix h = hessenberg(a);
    // p[k] = det(lambda I - H[0..k, 0..k]); p[0] is the empty determinant.
    std::vector<std::vector<Complex>> p(n + 1);
    p[0] = {Complex{1.0}};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t kk = k - 1;  // zero-based index of the new row/column
        std::vector<Complex> next(k + 1, Complex{});
        for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
            next[d + 1] += p[k - 1][d];
            next[d] -= h(kk, kk) * p[k - 1][d];
        }
        Complex prod{1.0};
        for (std::size_t i = 1; i < k; ++i) {
            prod *= h(kk - i + 1, kk - i);
            const Complex coeff = h(kk - i, kk) * prod;
            if (coeff == Complex{}) continue;
            for (std::size_t d = 0; d < p[k - i - 1].size(); ++d) next[d] -= coeff * p[k - i - 1][d];
        }
        p[k] = std::move(next);
    }
    return p[n];
}

/// Solves a x = b by LU with partial pivoting; returns false if exactly singular.
inline bool lu_solve(ComplexMatrix a, std::vector<Complex>& b) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (std::abs(a(piv, k)) == 0.0) return false;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(b[k], b[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = a(i, k) / a(k, k);
            if (f == Complex{}) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        Complex s = b[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= a(k, j) * b[j];
        b[k] = s / a(k, k);
    }
    return true;
}

/// Unit eigenvector for a known eigenvalue by inverse iteration.
inline std::vector<Complex> eigenvector_for(const ComplexMatrix& a, Complex lambda) {
    require(a.square(), "eigenvector_for needs a square matrix");
    const std::size_t n = a.rows();
    const double scale = 1.0 + max_norm(a);
    ComplexMatrix shifted = a;
    // A slight offset keeps the factorization regular at an exact eigenvalue.
    const Complex sigma = lambda + Complex{1e-13 * scale, 1e-13 * scale};
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= sigma;

    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = Complex{1.0 + 0.1 * static_cast<double>(i), 0.3};
    std::vector<Complex> best = x;
    double best_res = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 4; ++it) {
        if (!lu_solve(shifted, x)) {
            shifted(0, 0) += Complex{1e-14 * scale, 0.0};
            continue;
        }
        const double nx = vector_norm(x);
        if (!(nx > 0.0) || !std::isfinite(nx)) break;
        for (Complex& z : x) z /= nx;
        const auto ax = a * std::span<const Complex>(x);
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(ax[i] - lambda * x[i]));
        if (res < best_res) {
            best_res = res;
            best = x;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Banded Hermitian matrices too large for the dense path.
// ---------------------------------------------------------------------------

/// Entry accessor (row, col) -> value for a Hermitian matrix with half-bandwidth m.
using BandedEntry = std::function<Complex(std::size_t, std::size_t)>;

/// Number of eigenvalues strictly below lambda, by Sylvester inertia of the
/// unpivoted band LDL* factorization of (H - lambda I).
inline std::size_t count_eigenvalues_below(std::size_t n, std::size_t m, const BandedEntry& entry, double lambda) {
    const std::size_t w = 2 * m + 1;
    std::vector<Complex> band(n * w, Complex{});  // band[j*w + (k - j + m)]
    auto at = [&](std::size_t j, std::size_t k) -> Complex& { return band[j * w + (k + m - j)]; };
    double scale = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = (j >= m ? j - m : 0); k < std::min(n, j + m + 1); ++k) {
            at(j, k) = entry(j, k);
            scale = std::max(scale, std::abs(at(j, k)));
        }
    for (std::size_t j = 0; j < n; ++j) at(j, j) -= lambda;
    const double tiny = std::numeric_limits<double>::epsilon() * (1.0 + scale + std::abs(lambda));

    std::size_t negatives = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double d = at(k, k).real();
        if (std::abs(d) < tiny) d = -tiny;  // zero pivot: count as just below
        at(k, k) = d;
        if (d < 0.0) ++negatives;
        const std::size_t last = std::min(n, k + m + 1);
        for (std::size_t i = k + 1; i < last; ++i) {
            const Complex f = at(i, k) / d;
            if (f == Complex{}) continue;
            for (std::size_t j = k + 1; j < last; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return negatives;
}

/// Smallest and largest eigenvalues of a banded Hermitian matrix by bisection
/// on inertia counts, to absolute accuracy tol.
inline std::pair<double, double> banded_hermitian_extremes(std::size_t n, std::size_t m, const BandedEntry& entry,
                                                           double tol = 1e-10) {
    require(n >= 1, "banded_hermitian_extremes needs n >= 1");
    double radius = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double r = 0.0;
        for (std::size_t k = (j >= m ? j - m : 0); k < std::min(n, j + m + 1); ++k) r += std::abs(entry(j, k));
        radius = std::max(radius, r);
    }
    auto bisect = [&](std::size_t target) {
        // smallest x with count_below(x) >= target
        double lo = -radius - 1.0, hi = radius + 1.0;
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            if (count_eigenvalues_below(n, m, entry, mid) >= target) hi = mid;
            else lo = mid;
        }
        return 0.5 * (lo + hi);
    };
    return {bisect(1), bisect(n)};
}

namespace detail {

// LU with partial pivoting of a matrix with lower and upper bandwidth m.
// Row i keeps columns i-m .. i+2m (room for pivoting fill).
class BandLu {
public:
    BandLu(std::size_t n, std::size_t m, const BandedEntry& entry, double shift)
        : n_(n), m_(m), w_(3 * m + 1), band_(n * (3 * m + 1), Complex{}), pivot_(n) {
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = (j >= m ? j - m : 0); k < std::min(n, j + m + 1); ++k) at(j, k) = entry(j, k);
        for (std::size_t j = 0; j < n; ++j) at(j, j) -= shift;
        double scale = 0.0;
        for (Complex z : band_) scale = std::max(scale, std::abs(z));
        const double tiny = std::numeric_limits<double>::epsilon() * (1.0 + scale);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t last_row = std::min(n, k + m + 1);
            const std::size_t last_col = std::min(n, k + 2 * m + 1);
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < last_row; ++i)
                if (std::abs(at(i, k)) > std::abs(at(piv, k))) piv = i;
            pivot_[k] = piv;
            if (piv != k)
                for (std::size_t j = k; j < last_col; ++j) std::swap(at(k, j), at(piv, j));
            if (std::abs(at(k, k)) < tiny) at(k, k) = tiny;
            for (std::size_t i = k + 1; i < last_row; ++i) {
                const Complex f = at(i, k) / at(k, k);
                at(i, k) = f;
                if (f == Complex{}) continue;
                for (std::size_t j = k + 1; j < last_col; ++j) at(i, j) -= f * at(k, j);
            }
        }
    }

    void solve(std::vector<Complex>& b) const {
        for (std::size_t k = 0; k < n_; ++k) {
            std::swap(b[k], b[pivot_[k]]);
            for (std::size_t i = k + 1; i < std::min(n_, k + m_ + 1); ++i) b[i] -= at(i, k) * b[k];
        }
        for (std::size_t k = n_; k-- > 0;) {
            Complex acc = b[k];
            for (std::size_t j = k + 1; j < std::min(n_, k + 2 * m_ + 1); ++j) acc -= at(k, j) * b[j];
            b[k] = acc / at(k, k);
        }
    }

private:
    Complex& at(std::size_t i, std::size_t j) { return band_[i * w_ + (j + m_ - i)]; }
    const Complex& at(std::size_t i, std::size_t j) const { return band_[i * w_ + (j + m_ - i)]; }

    std::size_t n_, m_, w_;
    std::vector<Complex> band_;
    std::vector<std::size_t> pivot_;
};

}  // namespace detail

struct TopEigenpair {
    double value = 0.0;
    std::vector<Complex> vector;  // unit norm
};

/// Largest eigenvalue of a banded Hermitian matrix (inertia bisection to tol)
/// and a unit eigenvector (inverse iteration on a band LU shifted just above it).
inline TopEigenpair banded_top_eigenpair(std::size_t n, std::size_t m, const BandedEntry& entry, double tol = 1e-13) {
    require(n >= 1, "banded_top_eigenpair needs n >= 1");
    double radius = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double r = 0.0;
        for (std::size_t k = (j >= m ? j - m : 0); k < std::min(n, j + m + 1); ++k) r += std::abs(entry(j, k));
        radius = std::max(radius, r);
    }
    const double abs_tol = tol * (1.0 + radius);
    double lo = -radius - 1.0, hi = radius + 1.0;
    while (hi - lo > abs_tol) {
        const double mid = 0.5 * (lo + hi);
        if (count_eigenvalues_below(n, m, entry, mid) >= n) hi = mid;
        else lo = mid;
    }
    TopEigenpair out{0.5 * (lo + hi), std::vector<Complex>(n)};

    const detail::BandLu lu(n, m, entry, hi + abs_tol);
    for (std::size_t i = 0; i < n; ++i) out.vector[i] = Complex(1.0, 0.5 * std::sin(static_cast<double>(i) + 1.0));
    for (int it = 0; it < 4; ++it) {
        lu.solve(out.vector);
        const double norm = vector_norm(out.vector);
        require(norm > 0.0 && std::isfinite(norm), "banded_top_eigenpair: inverse iteration broke down");
        for (Complex& z : out.vector) z /= norm;
    }
    return out;
}

}  // namespace ptoeplitz
