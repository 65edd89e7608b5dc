#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include <disclab/moments.hpp>
#include <disclab/seqspace.hpp>
#include <disclab/transforms.hpp>

using namespace disclab;

namespace {

TaylorSeries monomial(size_t k, Complex c = 1.0) {
    std::vector<Complex> v(k + 1, 0.0);
    v[k] = c;
    return TaylorSeries(v);
}

TaylorSeries randomPoly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 16);
    std::normal_distribution<double> N(0.0, 1.0);
    std::vector<Complex> c(deg(rng) + 1);
    for (auto& x : c) x = {N(rng), N(rng)};
    return TaylorSeries(c);
}

// int_D |f|^2 G(1 - |z|) dA/pi with |f|^2 averaged exactly over angles by Parseval per radius
// replaced here by an explicit angular trapezoid rule, radial part by Gauss-Kronrod.
double areaOracle(const RadialWeight& G, const TaylorSeries& f) {
    const int K = 4 * static_cast<int>(f.size()) + 8;
    auto radial = [&](double r) {
        double s = 0.0;
        for (int j = 0; j < K; ++j) s += std::norm(f.evaluate(std::polar(r, kTwoPi * j / K)));
        return 2.0 * r * G(1.0 - r) * s / K;
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(radial, 0.0, 1.0, 25, 1e-14);
}

} // namespace

TEST(Norms, Monomials) {
    auto M = momentsOfG(RadialWeight::linear(), 20);
    for (size_t k : {0u, 3u, 7u}) {
        auto f = monomial(k);
        EXPECT_NEAR(h2Norm(M, f), std::sqrt(M[k]), 1e-14);
        EXPECT_NEAR(h2StarNorm(M, f), 1.0 / std::sqrt(M[k]), 1e-10);
        EXPECT_NEAR(h1StarNorm(M, f), 1.0 / M[k], 1e-10);
    }
    EXPECT_EQ(h2Norm(M, TaylorSeries(std::vector<Complex>{0.0})), 0.0);
    EXPECT_NEAR(h2Norm(M, TaylorSeries({1.0, 1.0})), std::sqrt(1.0 / 3.0 + 1.0 / 10.0), 1e-15);
}

TEST(Norms, MomentsAsCoefficients) {
    auto M = momentsOfG(RadialWeight::t1(1.0, 1.0), 300);
    std::vector<Complex> c;
    double sum = 0.0;
    for (size_t n = 0; n < M.size(); ++n) {
        c.push_back(M[n]);
        sum += M[n];
    }
    TaylorSeries f(c);
    EXPECT_NEAR(h1StarNorm(M, f), 1.0, 1e-12);
    EXPECT_NEAR(h2StarNorm(M, f) * h2StarNorm(M, f), sum, 1e-12 * sum);
}

TEST(Pairing, Basics) {
    EXPECT_NEAR(std::abs(pairing(monomial(0), monomial(0)) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(pairing(monomial(1), monomial(0))), 0.0, 1e-15);
}

TEST(Toeplitz, Examples) {
    TaylorSeries f({1.0, 2.0, Complex(0.5, 1.0)});
    auto id = toeplitzCoanalytic(monomial(0), f, 3);
    for (size_t n = 0; n < f.size(); ++n) EXPECT_NEAR(std::abs(id.series[n] - f[n]), 0.0, 1e-15);
    auto shift = toeplitzCoanalytic(monomial(1), TaylorSeries({1.0, 2.0}), 1);
    EXPECT_NEAR(std::abs(shift.series[0] - 2.0), 0.0, 1e-15);
    auto ones = cauchyCoefficients(CircleMeasure::dirac(0.0), 64);
    auto s = toeplitzCoanalytic(monomial(1), ones, 32);
    for (size_t n = 0; n <= 32; ++n) EXPECT_NEAR(std::abs(s.series[n] - 1.0), 0.0, 1e-14);
}

TEST(Rsd, ModelsAndInnerFunction) {
    std::vector<Complex> e, poly;
    for (int n = 0; n <= 256; ++n) {
        e.push_back(std::exp(-2.0 * std::sqrt(static_cast<double>(n))));
        poly.push_back(1.0 / ((n + 1.0) * (n + 1.0)));
    }
    RsdOptions w;
    w.window = IndexRange{64, 256};
    auto a = rsdClassify(TaylorSeries(e), w);
    EXPECT_EQ(a.verdict, RsdVerdict::Kind::Rsd);
    EXPECT_NEAR(a.fittedC, 2.0, 0.05);
    EXPECT_EQ(rsdClassify(TaylorSeries(poly), w).verdict, RsdVerdict::Kind::NotRsd);

    auto d0 = CircleMeasure::dirac(0.0);
    auto S = taylorOf([&](Complex z) { return singularInner(d0, z); }, 512, 0.97);
    RsdOptions w2;
    w2.window = IndexRange{128, 512};
    EXPECT_EQ(rsdClassify(S, w2).verdict, RsdVerdict::Kind::NotRsd);
}

TEST(Rsd, ShortWindowInconclusive) {
    RsdOptions o;
    o.window = IndexRange{10, 12};
    EXPECT_EQ(rsdClassify(TaylorSeries(std::vector<Complex>(20, 1.0)), o).verdict, RsdVerdict::Kind::Inconclusive);
}

TEST(NormIdentity, ClosedFormCases) {
    EXPECT_LE(normIdentityCheck(RadialWeight::linear(), monomial(0)), 1e-9);
    for (size_t k : {1u, 4u, 9u}) EXPECT_LE(normIdentityCheck(RadialWeight::t1(1.0, 1.0), monomial(k)), 1e-6);
    TaylorSeries f({1.0, 0.0, 3.0, 0.0, 0.0, 1.0});
    EXPECT_LE(normIdentityCheck(RadialWeight::t1(1.0, 1.0), f), 1e-6);
}

TEST(NormIdentity, RandomPolynomials) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 20; ++i) {
        auto f = randomPoly(rng);
        EXPECT_LE(normIdentityCheck(RadialWeight::t1(1.0, 1.0), f), 1e-6);
        EXPECT_LE(normIdentityCheck(RadialWeight::linear(), f), 1e-6);
    }
}

TEST(NormIdentity, AgainstIndependentAreaQuadrature) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 3; ++i) {
        auto f = randomPoly(rng);
        for (const auto& G : {RadialWeight::t1(1.0, 1.0), RadialWeight::linear()}) {
            auto M = momentsOfG(G, f.degree());
            double lhs = std::pow(h2Norm(M, f), 2);
            EXPECT_NEAR(lhs / areaOracle(G, f), 1.0, 1e-8) << G.describe();
        }
    }
}

TEST(Embedding, RandomSequences) {
    auto M = momentsOfG(RadialWeight::t1(1.0, 1.0), 200);
    auto r = embeddingCheck(M, 1.0, 100, 5);
    EXPECT_TRUE(r.supported);
    EXPECT_TRUE(r.holds);
    EXPECT_LE(r.maxRatioFirst, 1.0);
    EXPECT_LE(r.maxRatioSecond, 1.0 + 1e-12);
    EXPECT_FALSE(embeddingCheck(M, 0.5, 10).supported);
}

TEST(Embedding, UnitVectorsAttainSecondBound) {
    auto M = momentsOfG(RadialWeight::t1(1.0, 1.0), 50);
    for (size_t k : {0u, 5u, 20u}) {
        auto f = monomial(k);
        double second = h1StarNorm(M.pow(0.5), f) / h2StarNorm(M, f);
        EXPECT_NEAR(second, 1.0, 1e-12);
    }
}
