#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ptoeplitz/error.hpp"

namespace ptoeplitz {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Upper bound on either dimension of a dense matrix.
inline constexpr std::size_t kMaxDenseDimension = 1024;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
        require(rows <= kMaxDenseDimension && cols <= kMaxDenseDimension,
                "matrix dimension " + std::to_string(std::max(rows, cols)) + " exceeds cap " +
                    std::to_string(kMaxDenseDimension));
        data_.assign(rows * cols, Complex{});
    }

    /// Builds from nested rows; all rows must have equal length and finite entries.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
        : ComplexMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
        std::size_t r = 0;
        for (const auto& row : rows) {
            require(row.size() == cols_, "ragged matrix rows");
            std::size_t c = 0;
            for (const auto& v : row) {
                require(is_finite(v), "non-finite matrix entry");
                (*this)(r, c++) = v;
            }
            ++r;
        }
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(std::span<const Complex> d) {
        ComplexMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> data() const noexcept { return data_; }
    std::span<Complex> data() noexcept { return data_; }

    std::vector<Complex> column(std::size_t c) const {
        std::vector<Complex> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    bool all_finite() const {
        return std::all_of(data_.begin(), data_.end(), [](Complex z) { return is_finite(z); });
    }

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

inline double max_norm(const ComplexMatrix& a) {
    double m = 0.0;
    for (Complex z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

inline double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (Complex z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
    return r;
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "dimension mismatch in +");
    ComplexMatrix r = a;
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] += b.data()[i];
    return r;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "dimension mismatch in -");
    ComplexMatrix r = a;
    for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] -= b.data()[i];
    return r;
}

inline ComplexMatrix operator*(Complex alpha, const ComplexMatrix& a) {
    ComplexMatrix r = a;
    for (Complex& z : r.data()) z *= alpha;
    return r;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols() == b.rows(), "dimension mismatch in *");
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v) {
    require(a.cols() == v.size(), "dimension mismatch in matrix-vector product");
    std::vector<Complex> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex s{};
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

/// <a v, w> = sum_j (a v)_j conj(w_j)
inline Complex inner(std::span<const Complex> v, std::span<const Complex> w) {
    Complex s{};
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * std::conj(w[i]);
    return s;
}

inline double vector_norm(std::span<const Complex> v) { return std::sqrt(std::real(inner(v, v))); }

inline double hermitian_defect(const ComplexMatrix& a) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
    return d;
}

/// (e^{-i phi} A + e^{i phi} A*) / 2, symmetrized so the result is exactly Hermitian.
inline ComplexMatrix rotated_hermitian_part(const ComplexMatrix& a, double phi) {
    require(a.square(), "rotated_hermitian_part needs a square matrix");
    const std::size_t n = a.rows();
    const Complex rot = std::polar(1.0, -phi);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = Complex{std::real(rot * a(i, i)), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (rot * a(i, j) + std::conj(rot * a(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

/// Block-diagonal direct sum of square blocks.
inline ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        require(b.square(), "direct_sum needs square blocks");
        n += b.rows();
    }
    ComplexMatrix r(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return r;
}

}  // namespace ptoeplitz
