#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "ptoeplitz/eigen.hpp"
#include "ptoeplitz/error.hpp"
#include "ptoeplitz/matrix.hpp"

namespace ptoeplitz {

/// Horner evaluation; coefficients in descending powers.
template <typename Scalar>
Scalar horner(std::span<const double> descending, Scalar t) {
    Scalar acc{};
    for (double c : descending) acc = acc * t + c;
    return acc;
}

struct RealRootCount {
    std::size_t real_count = 0;
    std::vector<Complex> roots;
};

/// All roots of a real polynomial (descending coefficients) as eigenvalues of
/// its companion matrix, Newton-polished. A root counts as real when
/// |Im| <= tol * (1 + |root|).
inline RealRootCount univariate_real_root_count(std::span<const double> descending, double tol = 1e-7) {
    std::size_t lead = 0;
    while (lead < descending.size() && descending[lead] == 0.0) ++lead;
    if (lead == descending.size()) fail(ErrorKind::kInvalidArgument, "root count of the zero polynomial");
    const auto coeffs = descending.subspan(lead);
    const std::size_t d = coeffs.size() - 1;
    RealRootCount out;
    if (d == 0) return out;

    ComplexMatrix companion(d, d);
    for (std::size_t j = 0; j < d; ++j) companion(0, j) = -coeffs[j + 1] / coeffs[0];
    for (std::size_t i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    out.roots = eigenvalues(companion);

    std::vector<double> deriv(d);
    for (std::size_t j = 0; j < d; ++j) deriv[j] = coeffs[j] * static_cast<double>(d - j);
    for (Complex& z : out.roots) {
        for (int it = 0; it < 3; ++it) {
            const Complex pz = horner<Complex>(coeffs, z);
            const Complex dz = horner<Complex>(deriv, z);
            if (dz == Complex{}) break;
            const Complex next = z - pz / dz;
            if (!(std::abs(horner<Complex>(coeffs, next)) < std::abs(pz))) break;
            z = next;
        }
    }
    std::sort(out.roots.begin(), out.roots.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    for (Complex z : out.roots)
        if (std::abs(z.imag()) <= tol * (1.0 + std::abs(z))) ++out.real_count;
    return out;
}

/// Bivariate polynomial sum c_{ab} X^a Y^b with exact or floating coefficients.
template <typename Coeff>
struct BivariatePolynomial {
    std::map<std::pair<int, int>, Coeff> terms;

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms)
            if (c != Coeff{}) d = std::max(d, e.first + e.second);
        return d;
    }

    double operator()(double x, double y) const {
        double s = 0.0;
        for (const auto& [e, c] : terms) s += static_cast<double>(c) * std::pow(x, e.first) * std::pow(y, e.second);
        return s;
    }

    Coeff coefficient(int a, int b) const {
        auto it = terms.find({a, b});
        return it == terms.end() ? Coeff{} : it->second;
    }

    void prune() { std::erase_if(terms, [](const auto& kv) { return kv.second == Coeff{}; }); }

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        for (const auto& [e, c] : b.terms) a.terms[e] += c;
        a.prune();
        return a;
    }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
        for (const auto& [e, c] : b.terms) a.terms[e] -= c;
        a.prune();
        return a;
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        BivariatePolynomial r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) r.terms[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
        r.prune();
        return r;
    }
    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;
};

using IntegerPolynomial = BivariatePolynomial<long long>;

/// If p == (num/den) * q exactly, returns {num, den} with den > 0; otherwise {0, 0}.
inline std::pair<long long, long long> exact_proportionality(const IntegerPolynomial& p, const IntegerPolynomial& q) {
    if (q.terms.empty() || p.terms.empty()) return {0, 0};
    const auto& [e0, q0] = *q.terms.begin();
    const long long p0 = p.coefficient(e0.first, e0.second);
    if (p0 == 0) return {0, 0};
    for (const auto& [e, qc] : q.terms)
        if (p.coefficient(e.first, e.second) * q0 != p0 * qc) return {0, 0};
    for (const auto& [e, pc] : p.terms)
        if (pc * q0 != p0 * q.coefficient(e.first, e.second)) return {0, 0};
    long long num = p0, den = q0;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
}

}  // namespace ptoeplitz
