#include <gtest/gtest.h>

#include <random>

#include "ptoeplitz/counterexample.hpp"
#include "ptoeplitz/operator.hpp"
#include "test_support.hpp"

using namespace ptoeplitz;
using ptoeplitz::testing::random_selfadjoint_spec;
using ptoeplitz::testing::random_spec;

namespace {

ComplexMatrix symbol_by_definition(const PeriodicBandedSpec& spec, double theta) {
    const auto p = static_cast<long long>(spec.period());
    const auto m = static_cast<long long>(spec.band());
    ComplexMatrix phi(spec.period(), spec.period());
    for (long long j = 0; j < p; ++j)
        for (long long k = 0; k < p; ++k)
            for (long long u = -(m + p); u <= m + p; ++u) {
                const long long col = k + u * p;
                if (std::llabs(col - j) <= m)
                    phi(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) +=
                        std::polar(1.0, static_cast<double>(u) * theta) * spec.entry(j, col);
            }
    return phi;
}

}  // namespace

TEST(ValidateSpec, AcceptsCounterexampleData) {
    RawSpec raw{2, 2, {{1, {-1.0, 2.0}}, {2, {1.0, 1.0}}}, false};
    const auto spec = validate_spec(raw);
    EXPECT_EQ(spec, counterexample_spec());
    EXPECT_EQ(spec.diagonal(-2).size(), 2u);
    EXPECT_EQ(spec.coefficient(0, 1), Complex{});
}

TEST(ValidateSpec, ScalarIdentity) {
    const auto spec = validate_spec({1, 0, {{0, {Complex(2.0, -1.0)}}}, false});
    EXPECT_EQ(spec.entry(5, 5), Complex(2.0, -1.0));
    EXPECT_EQ(spec.entry(5, 6), Complex{});
}

TEST(ValidateSpec, RejectsWrongDiagonalLength) {
    try {
        validate_spec({2, 1, {{-1, {1.0}}}, false});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
        EXPECT_NE(std::string(e.what()).find("offset -1"), std::string::npos);
    }
}

TEST(ValidateSpec, RejectsOffsetOutsideBand) {
    EXPECT_THROW(validate_spec({2, 1, {{2, {1.0, 1.0}}}, false}), Error);
}

TEST(ValidateSpec, ZeroOperatorMustBeDeclared) {
    EXPECT_THROW(validate_spec({1, 1, {}, false}), Error);
    EXPECT_TRUE(validate_spec({1, 1, {}, true}).is_zero());
}

TEST(Truncation, CounterexampleLeadingBlock) {
    const ComplexMatrix expected{{0.0, -1.0, 1.0, 0.0, 0.0},
                                 {0.0, 0.0, 2.0, 1.0, 0.0},
                                 {0.0, 0.0, 0.0, -1.0, 1.0},
                                 {0.0, 0.0, 0.0, 0.0, 2.0},
                                 {0.0, 0.0, 0.0, 0.0, 0.0}};
    EXPECT_EQ(truncation(counterexample_spec(), 5), expected);
}

TEST(Truncation, SizeOneIsMainDiagonalEntry) {
    std::mt19937_64 rng(31);
    const auto spec = random_spec(rng, 3, 2);
    EXPECT_EQ(truncation(spec, 1)(0, 0), spec.coefficient(0, 0));
}

TEST(Truncation, TridiagonalPeriodThreeWindow) {
    std::mt19937_64 rng(32);
    const auto spec = random_spec(rng, 3, 1);
    const auto t = truncation(spec, 7);
    for (std::size_t j = 0; j < 7; ++j)
        for (std::size_t k = 0; k < 7; ++k) {
            const long long r = static_cast<long long>(k) - static_cast<long long>(j);
            const Complex expected = std::llabs(r) <= 1 ? spec.diagonal(r)[j % 3] : Complex{};
            EXPECT_EQ(t(j, k), expected) << j << "," << k;
        }
}

TEST(Truncation, PeriodicAndBanded) {
    std::mt19937_64 rng(33);
    const auto spec = random_spec(rng, 3, 2);
    const auto t = truncation(spec, 20);
    for (std::size_t j = 0; j < 20; ++j)
        for (std::size_t k = 0; k < 20; ++k) {
            if (j + 3 < 20 && k + 3 < 20) {
                EXPECT_EQ(t(j, k), t(j + 3, k + 3));
            }
            if ((j > k ? j - k : k - j) > 2) {
                EXPECT_EQ(t(j, k), Complex{});
            }
        }
}

TEST(Symbol, CounterexampleClosedForm) {
    const auto spec = counterexample_spec();
    for (double theta : {0.0, 0.4, 1.7, 3.0, 5.9}) {
        const Complex e = std::polar(1.0, theta);
        const ComplexMatrix expected{{e, -1.0}, {2.0 * e, e}};
        EXPECT_LE(max_norm(symbol(spec, theta) - expected), 1e-15);
    }
}

TEST(Symbol, PeriodThreeBandTwoDisplay) {
    std::mt19937_64 rng(34);
    const auto spec = random_spec(rng, 3, 2);
    auto p = [&](int j) { return spec.diagonal(-2)[j]; };
    auto q = [&](int j) { return spec.diagonal(-1)[j]; };
    auto r = [&](int j) { return spec.diagonal(0)[j]; };
    auto s = [&](int j) { return spec.diagonal(1)[j]; };
    auto t = [&](int j) { return spec.diagonal(2)[j]; };
    const double theta = 0.83;
    const Complex em = std::polar(1.0, -theta), ep = std::polar(1.0, theta);
    const ComplexMatrix expected{{r(0), p(0) * em + s(0), q(0) * em + t(0)},
                                 {q(1) + t(1) * ep, r(1), p(1) * em + s(1)},
                                 {s(2) * ep + p(2), q(2) + t(2) * ep, r(2)}};
    EXPECT_LE(max_norm(symbol(spec, theta) - expected), 1e-14);
}

TEST(Symbol, PeriodFiveBandTwoDisplay) {
    std::mt19937_64 rng(35);
    const auto spec = random_spec(rng, 5, 2);
    auto a = [&](long long r, int j) { return spec.diagonal(r)[j]; };
    const double theta = 2.2;
    const Complex em = std::polar(1.0, -theta), ep = std::polar(1.0, theta);
    ComplexMatrix expected(5, 5);
    for (int j = 0; j < 5; ++j)
        for (long long r = -2; r <= 2; ++r) {
            const long long k = j + r;
            if (k < 0) expected(j, static_cast<std::size_t>(k + 5)) += a(r, j) * em;
            else if (k > 4) expected(j, static_cast<std::size_t>(k - 5)) += a(r, j) * ep;
            else expected(j, static_cast<std::size_t>(k)) += a(r, j);
        }
    // spot entries straight from the display
    EXPECT_EQ(expected(0, 3), a(-2, 0) * em);
    EXPECT_EQ(expected(4, 0), a(1, 4) * ep);
    EXPECT_LE(max_norm(symbol(spec, theta) - expected), 1e-14);
}

TEST(Symbol, MatchesDefinitionForSmallPeriods) {
    std::mt19937_64 rng(36);
    for (long long period : {1, 2, 3, 4})
        for (long long band : {0, 1, 2, 3, 5}) {
            const auto spec = random_spec(rng, period, band);
            for (double theta : {0.0, 1.1, 4.4})
                EXPECT_LE(max_norm(symbol(spec, theta) - symbol_by_definition(spec, theta)), 1e-13)
                    << period << " " << band;
        }
}

TEST(Symbol, ScalarSpec) {
    const auto spec = make_spec(1, 0, {{0, {Complex(0.5, 2.0)}}});
    EXPECT_EQ(symbol(spec, 1.3)(0, 0), Complex(0.5, 2.0));
}

TEST(Symbol, PeriodicInTheta) {
    std::mt19937_64 rng(37);
    const auto spec = random_spec(rng, 3, 2);
    for (double theta : {0.1, 2.5, 6.0}) EXPECT_LE(max_norm(symbol(spec, theta) - symbol(spec, theta + 2 * kPi)), 1e-14);
}

TEST(Symbol, HermitianTransfer) {
    std::mt19937_64 rng(38);
    const auto spec = random_selfadjoint_spec(rng, 3, 2);
    ASSERT_TRUE(is_selfadjoint(spec));
    EXPECT_LE(hermitian_defect(truncation(spec, 12)), 1e-15);
    for (double theta : {0.0, 0.9, 3.3}) EXPECT_LE(hermitian_defect(symbol(spec, theta)), 1e-14);
}

TEST(CMu, CounterexampleLeadingBlockAndWrap) {
    const auto spec = counterexample_spec();
    const auto c = c_mu(spec, 3);
    ASSERT_EQ(c.rows(), 6u);
    const auto t4 = truncation(spec, 4);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(c(j, k), t4(j, k));
    // row 4 reaches column 6 -> 0, row 5 reaches 6 and 7 -> 0 and 1
    EXPECT_EQ(c(4, 0), spec.entry(4, 6));
    EXPECT_EQ(c(5, 0), spec.entry(5, 6));
    EXPECT_EQ(c(5, 1), spec.entry(5, 7));
}

TEST(CMu, CompressionIsTruncation) {
    std::mt19937_64 rng(39);
    for (auto [period, band, s] : std::vector<std::array<long long, 3>>{{2, 2, 3}, {3, 2, 5}, {1, 3, 7}, {4, 1, 2}}) {
        const auto spec = random_spec(rng, period, band);
        const auto c = c_mu(spec, static_cast<std::size_t>(s));
        const std::size_t keep = static_cast<std::size_t>(s * period - band);
        const auto t = truncation(spec, keep);
        for (std::size_t j = 0; j < keep; ++j)
            for (std::size_t k = 0; k < keep; ++k) EXPECT_EQ(c(j, k), t(j, k));
    }
}

TEST(CMu, ScalarSpecGivesScaledIdentity) {
    const auto spec = make_spec(1, 0, {{0, {Complex(3.0, 1.0)}}});
    EXPECT_EQ(c_mu(spec, 4), Complex(3.0, 1.0) * ComplexMatrix::identity(4));
}

TEST(CMu, EqualsSymbolOfReperiodizedSpecAtZero) {
    std::mt19937_64 rng(40);
    const auto spec = random_spec(rng, 2, 2);
    for (std::size_t s : {3u, 4u, 6u})
        EXPECT_LE(max_norm(c_mu(spec, s) - symbol(with_period(spec, 2 * s), 0.0)), 0.0);
}

TEST(CMu, RejectsShortPeriod) {
    EXPECT_THROW(c_mu(counterexample_spec(), 2), Error);
    EXPECT_THROW(c_mu(counterexample_spec(), 1), Error);
}

TEST(FourierUnitary, TwoPoint) {
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_LE(max_norm(fourier_unitary(1, 2) - ComplexMatrix{{h, h}, {h, -h}}), 1e-15);
}

TEST(FourierUnitary, PeriodTwoColumns) {
    const double h = 1.0 / std::sqrt(2.0);
    // columns f_{0,0}, f_{1,0}, f_{0,1}, f_{1,1}
    const ComplexMatrix expected{{h, 0.0, h, 0.0}, {0.0, h, 0.0, h}, {h, 0.0, -h, 0.0}, {0.0, h, 0.0, -h}};
    EXPECT_LE(max_norm(fourier_unitary(2, 2) - expected), 1e-15);
}

TEST(FourierUnitary, IsUnitary) {
    for (std::size_t period : {1u, 2u, 3u, 5u})
        for (std::size_t s : {1u, 2u, 3u, 7u}) {
            const auto u = fourier_unitary(period, s);
            EXPECT_LE(max_norm(adjoint(u) * u - ComplexMatrix::identity(period * s)), 1e-12);
        }
}

TEST(BlockDiagonalization, Examples) {
    EXPECT_LE(block_diagonalization_residual(counterexample_spec(), 4), 1e-10);
    std::mt19937_64 rng(41);
    EXPECT_LE(block_diagonalization_residual(random_spec(rng, 3, 2), 5), 1e-10);
    EXPECT_LE(block_diagonalization_residual(make_spec(1, 0, {{0, {2.0}}}), 3), 1e-15);
}

TEST(LiftEigenvector, Layout) {
    const std::vector<Complex> v{1.0, Complex(0.0, 2.0)};
    const auto lifted = lift_eigenvector(v, 1, 4);
    ASSERT_EQ(lifted.lifted.size(), 8u);
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t p = 0; p < 2; ++p)
            EXPECT_LE(std::abs(lifted.lifted[p + 2 * u] - v[p] * std::polar(1.0, 2 * kPi * u / 4.0)), 1e-15);
}

TEST(LiftEigenvector, CounterexampleEigenvectorOfCSix) {
    const auto spec = counterexample_spec();
    // Phi(0) = [[1, -1], [2, 1]] has eigenvalues 1 +- i sqrt(2) with eigenvectors (1, -+ i sqrt(2))
    const auto c = c_mu(spec, 3);
    for (double sign : {1.0, -1.0}) {
        const Complex lambda(1.0, sign * std::sqrt(2.0));
        const std::vector<Complex> v{1.0 / std::sqrt(3.0), Complex(0.0, -sign * std::sqrt(2.0)) / std::sqrt(3.0)};
        const auto w = lift_eigenvector(v, 0, 3).lifted;
        const auto cw = c * std::span<const Complex>(w);
        for (std::size_t i = 0; i < w.size(); ++i) EXPECT_LE(std::abs(cw[i] - lambda * w[i]), 1e-9);
    }
}

TEST(LiftEigenvector, ScalarOperator) {
    const auto spec = make_spec(1, 0, {{0, {Complex(-2.0, 1.0)}}});
    const auto c = c_mu(spec, 5);
    const auto w = lift_eigenvector({1.0}, 3, 5).lifted;
    const auto cw = c * std::span<const Complex>(w);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_LE(std::abs(cw[i] - Complex(-2.0, 1.0) * w[i]), 1e-15);
}

TEST(SpectrumIdentity, CharacteristicCoefficientsAndLifting) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const long long period = 1 + trial % 4, band = trial % 4;
        const std::size_t s = std::max<std::size_t>(2, (2 * band + period) / period) + trial % 2;
        const auto spec = random_spec(rng, period, band);
        EXPECT_LE(eigenvalue_multiset_mismatch(spec, s), 1e-8);
        EXPECT_LE(lifted_eigenvector_residual(spec, s), 1e-8);
    }
}

TEST(SpectrumIdentity, SelfadjointViaEigh) {
    std::mt19937_64 rng(43);
    const auto spec = random_selfadjoint_spec(rng, 3, 2);
    const std::size_t s = 4;
    auto lhs = eigh(c_mu(spec, s)).eigenvalues;
    std::vector<double> rhs;
    for (const auto& b : symbol_blocks(spec, s))
        for (double e : eigh(b).eigenvalues) rhs.push_back(e);
    std::sort(rhs.begin(), rhs.end());
    ASSERT_EQ(lhs.size(), rhs.size());
    for (std::size_t k = 0; k < lhs.size(); ++k) EXPECT_NEAR(lhs[k], rhs[k], 1e-10);
}

TEST(TruncationExtremes, RequiresSelfadjoint) {
    EXPECT_THROW(truncation_extremes(counterexample_spec(), 10), Error);
}
