#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <disclab/errors.hpp>
#include <disclab/transforms.hpp>

using namespace disclab;

namespace {

std::vector<Complex> randomDiskPoints(int n, double rmax, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> R(0.0, rmax), A(0.0, kTwoPi);
    std::vector<Complex> z;
    for (int i = 0; i < n; ++i) z.push_back(std::polar(R(rng), A(rng)));
    return z;
}

} // namespace

TEST(Cauchy, DiracAndLebesgue) {
    auto d = cauchyCoefficients(CircleMeasure::dirac(0.0), 32);
    for (auto c : d.coeffs) EXPECT_NEAR(std::abs(c - 1.0), 0.0, 1e-14);
    auto m = cauchyCoefficients(CircleMeasure::lebesgue(), 16);
    EXPECT_NEAR(std::abs(m[0] - 1.0), 0.0, 1e-12);
    for (size_t n = 1; n < m.size(); ++n) EXPECT_NEAR(std::abs(m[n]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(cauchyTransform(CircleMeasure::dirac(0.0), 0.3) - 1.0 / 0.7), 0.0, 1e-14);
}

TEST(Cauchy, NegativeFrequencyDensity) {
    auto c = cauchyCoefficients(CircleMeasure::fromDensity(Weight::constant(1.0), -1), 16);
    for (auto v : c.coeffs) EXPECT_NEAR(std::abs(v), 0.0, 1e-12);
    auto d = cauchyCoefficients(CircleMeasure::fromDensity(Weight::constant(1.0), 1), 16);
    for (size_t n = 0; n < d.size(); ++n) EXPECT_NEAR(std::abs(d[n] - (n == 1 ? 1.0 : 0.0)), 0.0, 1e-12) << n;
}

TEST(Cauchy, CoefficientsMatchSampledTaylor) {
    auto nu = CircleMeasure::fromAtoms({{0.4, 0.3}, {2.5, 0.2}}) +
              CircleMeasure::fromDensity(Weight::power(1.0, 2.0));
    auto exact = cauchyCoefficients(nu, 64);
    auto sampled = taylorOf([&](Complex z) { return cauchyTransform(nu, z); }, 64, 0.8);
    for (size_t n = 0; n <= 64; ++n) EXPECT_NEAR(std::abs(exact[n] - sampled[n]), 0.0, 1e-8) << n;
}

TEST(Poisson, Values) {
    EXPECT_NEAR(poissonIntegral(CircleMeasure::lebesgue(), {0.3, -0.4}).real(), 1.0, 1e-12);
    EXPECT_NEAR(poissonIntegral(CircleMeasure::dirac(0.0), 0.0).real(), 1.0, 1e-14);
    EXPECT_NEAR(poissonIntegral(CircleMeasure::dirac(0.0), 0.5).real(), 3.0, 1e-13);
}

TEST(Herglotz, Values) {
    Complex z(0.2, 0.3);
    EXPECT_NEAR(std::abs(herglotzIntegral(CircleMeasure::dirac(0.0), z) - (1.0 + z) / (1.0 - z)), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(herglotzIntegral(CircleMeasure::lebesgue(), z) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(herglotzIntegral(CircleMeasure::dirac(1.0, 2.5), 0.0) - 2.5), 0.0, 1e-14);
}

TEST(SingularInner, Values) {
    auto d0 = CircleMeasure::dirac(0.0);
    EXPECT_NEAR(singularInner(d0, 0.0).real(), std::exp(-1.0), 1e-14);
    for (double r : {0.1, 0.5, 0.9}) EXPECT_NEAR(singularInner(d0, r).real(), std::exp(-(1 + r) / (1 - r)), 1e-13);
    auto halves = CircleMeasure::fromAtoms({{0.0, 0.5}, {0.0, 0.5}});
    for (auto z : randomDiskPoints(20, 0.95, 3))
        EXPECT_NEAR(std::abs(singularInner(halves, z) - singularInner(d0, z)), 0.0, 1e-12);
}

TEST(SingularInner, UnimodularRadialLimitOffSupport) {
    double t = 1.0 - 1e-6;
    EXPECT_GE(std::abs(singularInner(CircleMeasure::dirac(0.0), std::polar(t, kPi))), 1.0 - 1e-6);
}

TEST(SingularInner, RejectsDensity) {
    EXPECT_THROW(singularInner(CircleMeasure::lebesgue(), 0.1), Error);
}

TEST(Outer, Constants) {
    EXPECT_NEAR(std::abs(outerFromLogModulus(LogModulus::constant(0.0), {0.3, 0.1}) - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(outerFromLogModulus(LogModulus::constant(std::log(2.0)), {0.3, 0.1}) - 2.0), 0.0, 1e-13);
    auto phi = LogModulus::logOf(Weight::power(0.0, 2.0));
    EXPECT_NEAR(outerFromLogModulus(phi, 0.0).real(), std::exp(phi.mean()), 1e-10);
}

TEST(Blaschke, Values) {
    Complex z(0.2, -0.4);
    EXPECT_NEAR(std::abs(blaschke({0.0}, z) - z), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(blaschke({0.5}, 0.5)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(blaschke({0.5, -0.5}, 0.0)), 0.25, 1e-15);
    for (double th : {0.1, 1.0, 3.0}) EXPECT_NEAR(std::abs(blaschke({{0.3, 0.2}, 0.7}, std::polar(1.0 - 1e-12, th))), 1.0, 1e-9);
}

TEST(Clark, DiracGivesIdentity) {
    auto d0 = CircleMeasure::dirac(0.0);
    for (auto z : randomDiskPoints(100, 0.99, 5)) EXPECT_NEAR(std::abs(clarkToB(d0, z) - z), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(clarkToB(CircleMeasure::lebesgue(), {0.4, 0.4})), 0.0, 1e-12);
    auto nu = CircleMeasure::fromAtoms({{1.0, 0.25}, {4.0, 0.75}});
    EXPECT_NEAR(std::abs(clarkToB(nu, 0.0)), 0.0, 1e-14);
}

TEST(Clark, MassMustBeOne) {
    EXPECT_THROW(clarkToB(CircleMeasure::dirac(0.0, 2.0), 0.1), Error);
}

TEST(Taylor, SimpleFunctions) {
    auto g = taylorOf([](Complex z) { return 1.0 / (1.0 - z); }, 16, 0.5);
    for (auto c : g.coeffs) EXPECT_NEAR(std::abs(c - 1.0), 0.0, 1e-9);
    auto c3 = taylorOf([](Complex z) { return z * z * z; }, 8, 0.9);
    for (size_t n = 0; n <= 8; ++n) EXPECT_NEAR(std::abs(c3[n] - (n == 3 ? 1.0 : 0.0)), 0.0, 1e-12);
    EXPECT_THROW(taylorOf([](Complex z) { return z; }, 512, 0.9), Error);
}

TEST(Taylor, InnerCoefficientsStableAcrossRadii) {
    auto d0 = CircleMeasure::dirac(0.0);
    auto S = [&](Complex z) { return singularInner(d0, z); };
    auto a = taylorOf(S, 256, 0.95), b = taylorOf(S, 256, 0.97);
    for (size_t n = 0; n <= 256; ++n) {
        EXPECT_LE(std::abs(a[n]), 1.0 + 1e-9);
        EXPECT_NEAR(std::abs(a[n] - b[n]), 0.0, 1e-6) << n;
    }
}

TEST(DiskPoint, RejectsBoundary) {
    EXPECT_THROW(diskPoint(1.0), Error);
    EXPECT_NO_THROW(diskPoint(1.0 - 1e-11));
}
