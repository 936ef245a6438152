#include <gtest/gtest.h>

#include <random>

#include "ptoeplitz/eigen.hpp"
#include "ptoeplitz/matrix.hpp"
#include "test_support.hpp"

using namespace ptoeplitz;
using ptoeplitz::testing::random_hermitian;
using ptoeplitz::testing::random_matrix;
using ptoeplitz::testing::random_unitary;

namespace {

// Fraction-free (Bareiss) determinant with row pivoting.
Complex bareiss_det(ComplexMatrix a) {
    const std::size_t n = a.rows();
    Complex prev = 1.0;
    double sign = 1.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (a(piv, k) == Complex{}) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

double shifted_det(const ComplexMatrix& h, double lambda) {
    return bareiss_det(h - lambda * ComplexMatrix::identity(h.rows())).real();
}

}  // namespace

TEST(Adjoint, Examples) {
    EXPECT_EQ(adjoint(ComplexMatrix::identity(2)), ComplexMatrix::identity(2));
    EXPECT_EQ(adjoint(ComplexMatrix{{0.0, -1.0}, {2.0, 0.0}}), (ComplexMatrix{{0.0, 2.0}, {-1.0, 0.0}}));
    EXPECT_EQ(adjoint(ComplexMatrix{{kI}}), (ComplexMatrix{{-kI}}));
}

TEST(Adjoint, IsAnInvolution) {
    std::mt19937_64 rng(11);
    const auto a = random_matrix(rng, 5, 3);
    EXPECT_EQ(adjoint(adjoint(a)), a);
}

TEST(ComplexMatrix, RejectsNonFiniteEntries) {
    EXPECT_THROW((ComplexMatrix{{1.0, std::nan("")}}), Error);
}

TEST(RotatedHermitianPart, IdentityScalesByCosine) {
    for (double phi : {0.0, 0.7, 2.0, -3.1}) {
        const auto h = rotated_hermitian_part(ComplexMatrix::identity(3), phi);
        EXPECT_LE(max_norm(h - Complex(std::cos(phi)) * ComplexMatrix::identity(3)), 1e-15);
    }
}

TEST(RotatedHermitianPart, NilpotentExamples) {
    const ComplexMatrix a{{0.0, 2.0}, {0.0, 0.0}};
    EXPECT_LE(max_norm(rotated_hermitian_part(a, 0.0) - ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}), 1e-15);
    // (e^{-i pi/2} A + e^{i pi/2} A*) / 2 has (0,1) = -i and (1,0) = i
    EXPECT_LE(max_norm(rotated_hermitian_part(a, kPi / 2) - ComplexMatrix{{0.0, -kI}, {kI, 0.0}}), 1e-15);
}

TEST(RotatedHermitianPart, IsExactlyHermitian) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_matrix(rng, 6, 6);
        const auto h = rotated_hermitian_part(a, 0.37 * trial);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(h(i, j), std::conj(h(j, i)));
    }
}

TEST(Eigh, SmallExamples) {
    auto d = eigh(ComplexMatrix::diagonal(std::vector<Complex>{3.0, -1.0}));
    EXPECT_DOUBLE_EQ(d.eigenvalues[0], -1.0);
    EXPECT_DOUBLE_EQ(d.eigenvalues[1], 3.0);
    d = eigh(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
    EXPECT_NEAR(d.eigenvalues[0], -1.0, 1e-15);
    EXPECT_NEAR(d.eigenvalues[1], 1.0, 1e-15);
}

TEST(Eigh, MatchesDeterminantBisection) {
    std::mt19937_64 rng(13);
    const auto h = random_hermitian(rng, 8);
    const auto dec = eigh(h);

    double radius = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        double r = 0.0;
        for (std::size_t j = 0; j < 8; ++j) r += std::abs(h(i, j));
        radius = std::max(radius, r);
    }
    const int grid = 40000;
    std::vector<double> roots;
    double prev_x = -radius - 1.0, prev_f = shifted_det(h, prev_x);
    for (int k = 1; k <= grid; ++k) {
        const double x = -radius - 1.0 + (2.0 * radius + 2.0) * k / grid;
        const double f = shifted_det(h, x);
        if ((f > 0) != (prev_f > 0)) {
            double lo = prev_x, hi = x, flo = prev_f;
            for (int it = 0; it < 100 && hi - lo > 1e-13; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = shifted_det(h, mid);
                if ((fm > 0) == (flo > 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_f = f;
    }
    ASSERT_EQ(roots.size(), 8u);
    for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(dec.eigenvalues[k], roots[k], 1e-9);
}

TEST(Eigh, Postconditions) {
    std::mt19937_64 rng(14);
    for (std::size_t n : {1u, 2u, 5u, 16u, 40u}) {
        const auto h = random_hermitian(rng, n);
        const auto dec = eigh(h);
        EXPECT_TRUE(std::is_sorted(dec.eigenvalues.begin(), dec.eigenvalues.end()));
        const auto& v = dec.eigenvectors;
        EXPECT_LE(max_norm(adjoint(v) * v - ComplexMatrix::identity(n)), 1e-10);
        const auto lambda = ComplexMatrix::diagonal(std::vector<Complex>(dec.eigenvalues.begin(), dec.eigenvalues.end()));
        EXPECT_LE(max_norm(h * v - v * lambda), 1e-9 * (1.0 + max_norm(h)));
        double trace = 0.0, sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) trace += h(i, i).real();
        for (double e : dec.eigenvalues) sum += e;
        EXPECT_NEAR(sum, trace, 1e-9 * static_cast<double>(n) * (1.0 + max_norm(h)));
    }
}

TEST(Eigh, UnitaryInvariance) {
    std::mt19937_64 rng(15);
    const auto h = random_hermitian(rng, 7);
    const auto u = random_unitary(rng, 7);
    const auto a = eigh(h).eigenvalues;
    const auto b = eigh(rotated_hermitian_part(adjoint(u) * h * u, 0.0)).eigenvalues;
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-8);
}

TEST(Eigh, WarmStartAgreesWithColdStart) {
    std::mt19937_64 rng(16);
    const auto h = random_hermitian(rng, 12);
    const auto u = random_unitary(rng, 12);
    const auto cold = eigh(h);
    const auto warm = eigh_from(h, u);
    for (std::size_t k = 0; k < 12; ++k) EXPECT_NEAR(cold.eigenvalues[k], warm.eigenvalues[k], 1e-10);
    const auto& v = warm.eigenvectors;
    EXPECT_LE(max_norm(adjoint(v) * v - ComplexMatrix::identity(12)), 1e-10);
}

TEST(Eigh, RejectsNonHermitianInput) {
    try {
        eigh(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
    }
}

TEST(GeneralEigenvalues, KnownSpectra) {
    std::mt19937_64 rng(17);
    const std::vector<Complex> spectrum{1.0, -2.0, Complex(0.5, 3.0), Complex(0.0, -1.0), 4.0};
    const auto u = random_unitary(rng, 5);
    const auto a = u * ComplexMatrix::diagonal(spectrum) * adjoint(u);
    auto got = eigenvalues(a);
    ASSERT_EQ(got.size(), spectrum.size());
    for (Complex z : spectrum) {
        double best = 1e300;
        for (Complex w : got) best = std::min(best, std::abs(z - w));
        EXPECT_LE(best, 1e-10);
    }
}

TEST(GeneralEigenvalues, NilpotentJordanBlock) {
    const ComplexMatrix j{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}};
    for (Complex z : eigenvalues(j)) EXPECT_LE(std::abs(z), 1e-12);
}

TEST(CharacteristicPolynomial, TwoByTwo) {
    // det(l - A) for A = [[1, -1], [2, 1]] is l^2 - 2 l + 3
    const auto c = characteristic_polynomial(ComplexMatrix{{1.0, -1.0}, {2.0, 1.0}});
    ASSERT_EQ(c.size(), 3u);
    EXPECT_NEAR(std::abs(c[0] - 3.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(c[1] + 2.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(c[2] - 1.0), 0.0, 1e-14);
}

TEST(CharacteristicPolynomial, MatchesBareissDeterminant) {
    std::mt19937_64 rng(18);
    const auto a = random_matrix(rng, 6, 6);
    const auto c = characteristic_polynomial(a);
    for (Complex lambda : {Complex(0.3, -0.2), Complex(-1.5, 0.7), Complex(2.0, 0.0)}) {
        Complex value{};
        for (std::size_t k = c.size(); k-- > 0;) value = value * lambda + c[k];
        const Complex expected = bareiss_det(lambda * ComplexMatrix::identity(6) - a);
        EXPECT_LE(std::abs(value - expected), 1e-9 * (1.0 + std::abs(expected)));
    }
}

TEST(EigenvectorFor, ResidualIsSmall) {
    std::mt19937_64 rng(19);
    const auto a = random_matrix(rng, 5, 5);
    for (Complex lambda : eigenvalues(a)) {
        const auto v = eigenvector_for(a, lambda);
        EXPECT_NEAR(vector_norm(v), 1.0, 1e-12);
        const auto av = a * std::span<const Complex>(v);
        for (std::size_t i = 0; i < v.size(); ++i) EXPECT_LE(std::abs(av[i] - lambda * v[i]), 1e-9);
    }
}

TEST(BandedExtremes, TridiagonalLaplacian) {
    const std::size_t n = 500;
    const auto [lo, hi] = banded_hermitian_extremes(
        n, 1, [](std::size_t j, std::size_t k) { return j == k ? Complex{} : Complex{1.0}; }, 1e-12);
    const double expected = 2.0 * std::cos(kPi / static_cast<double>(n + 1));
    EXPECT_NEAR(hi, expected, 1e-10);
    EXPECT_NEAR(lo, -expected, 1e-10);
}

TEST(BandedExtremes, MatchesDenseEigh) {
    std::mt19937_64 rng(20);
    const std::size_t n = 30, band = 3;
    auto h = random_hermitian(rng, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((i > j ? i - j : j - i) > band) h(i, j) = 0.0;
    const auto dec = eigh(h);
    const auto [lo, hi] = banded_hermitian_extremes(n, band, [&](std::size_t j, std::size_t k) { return h(j, k); }, 1e-12);
    EXPECT_NEAR(lo, dec.eigenvalues.front(), 1e-9);
    EXPECT_NEAR(hi, dec.eigenvalues.back(), 1e-9);
}
