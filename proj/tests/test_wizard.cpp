#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include <disclab/errors.hpp>
#include <disclab/wizard.hpp>

using namespace disclab;

namespace {

const WizardProfile& inverseProfile() {
    static const WizardProfile W = buildProfile(Majorant::inversePower(1.0), 0.5);
    return W;
}

WalkOptions quick(size_t walks, std::uint64_t seed = 42, int workers = 1) {
    WalkOptions o;
    o.walks = walks;
    o.seed = seed;
    o.workers = workers;
    return o;
}

} // namespace

TEST(ChooseN0, InversePower) {
    N0Certificate c;
    EXPECT_EQ(chooseN0(Majorant::inversePower(1.0), 0.5, &c), 3);
    // sum_{m > 3} m 2^{-m} log 2 = 5 * 2^{-3} log 2
    EXPECT_NEAR(c.head + c.tailBound, 5.0 / 8.0 * std::log(2.0), 1e-12);
    auto F = Majorant::inversePower(1.0);
    double atTwo = 0.0;
    for (int n = 1; n <= 200; ++n) atTwo += std::ldexp(1.0, -n - 2) * F.logF(std::ldexp(1.0, -n - 2));
    EXPECT_NEAR(atTwo, std::log(2.0), 1e-12);
}

TEST(ChooseN0, RejectsBoundedF) {
    EXPECT_THROW(chooseN0(Majorant::constant(std::exp(1.0)), 0.5), Error);
}

TEST(ChooseN0, FromRadialWeight) {
    auto F = majorantFromG(RadialWeight::t1(1.0, 1.0));
    N0Certificate c;
    int n0 = chooseN0(F, 0.5, &c);
    EXPECT_GE(n0, 1);
    double direct = 0.0;
    for (int n = 1; n <= 900; ++n) {
        double a = std::ldexp(1.0, -n - n0);
        direct += a * F.logF(a);
    }
    EXPECT_NEAR(c.head + c.tailBound, direct, 1e-10);
    EXPECT_LT(direct, 0.5);
}

TEST(Profile, Bookkeeping) {
    const auto& W = inverseProfile();
    EXPECT_EQ(W.n0, 3);
    EXPECT_LE(W.sumDeltaError(), 1e-12);
    EXPECT_LE(W.exponentIdentityError(40), 1e-12);
    EXPECT_DOUBLE_EQ(W.t(1), 1.0);
    EXPECT_DOUBLE_EQ(W.p(W.t(1)), 0.0625);
    for (int n = 1; n < 200; ++n) EXPECT_NEAR(W.t(n) - W.t(n + 1), W.deltaT(n), 1e-15);
}

TEST(Profile, IncreasingAndPositive) {
    // below the last knot p is about 2^-1000 and underflows
    const auto& W = inverseProfile();
    const auto& p = W.p;
    double prev = 0.0;
    for (int i = 1; i <= 2000; ++i) {
        double x = W.knots.back() + (2.0 - W.knots.back()) * i / 2000.0;
        double v = p(x);
        EXPECT_GT(v, prev);
        prev = v;
    }
    EXPECT_EQ(p(0.0), 0.0);
}

TEST(Profile, ExponentIdentityForOtherMajorant) {
    auto W = buildProfile(majorantFromG(RadialWeight::t1(1.0, 1.0)), 0.5);
    EXPECT_LE(W.sumDeltaError(), 1e-12);
    EXPECT_LE(W.exponentIdentityError(40), 1e-12);
}

TEST(HatIntegral, SeriesConverges) {
    auto F = Majorant::inversePower(1.0);
    const auto& W = inverseProfile();
    auto hb = hatBoundaryIntegralBound(W, F);
    EXPECT_TRUE(hb.finite);
    ASSERT_GE(hb.terms.size(), 9u);
    EXPECT_LE(hb.terms[8], std::exp(-(W.A * kPi / 2.0) * std::ldexp(1.0, 14) / 100.0) * (1.0 + 1e-12));
    EXPECT_LE(hb.maxRawMismatch, 1e-12);
    for (size_t i = 1; i < hb.partialSums.size(); ++i) EXPECT_GE(hb.partialSums[i], hb.partialSums[i - 1]);
    int from = hb.monotoneFrom;
    for (size_t i = from - 1; i < hb.terms.size(); ++i) EXPECT_LE(hb.terms[i], hb.terms[i - 1]);
}

TEST(HatIntegral, GuardRejectsLargeGammaSum) {
    EXPECT_THROW(buildProfile(Majorant::inversePower(1.0), 5.0), Error);
}

TEST(AhlforsBound, Limits) {
    auto p = Profile::power(2.0);
    EXPECT_NEAR(beurlingAhlforsBound(p, 0.0, 1.0 - 1e-12, {1.0, 0.5}), 8.0 / kPi, 1e-9);
    EXPECT_LT(beurlingAhlforsBound(p, 0.0, 1e-4, {1.0, 0.5}), 1e-100);
    EXPECT_THROW(beurlingAhlforsBound(p, 0.0, 1.0, {1.0, 0.5}), Error);
    // int_{0.5}^{1} dx / x^2 = 1
    EXPECT_NEAR(beurlingAhlforsBound(p, 0.0, 0.5, {1.0, 0.5}), 8.0 / kPi * std::exp(-2.0 * kPi), 1e-14);
    EXPECT_NEAR(fullWidthAhlforsBound(p, 0.0, 0.5, {1.0, 0.5}), 8.0 / kPi * std::exp(-kPi / 2.0), 1e-14);
}

TEST(Walks, SymmetryControls) {
    DiskDomain disk;
    auto e = harmonicMeasureMC(disk, 0.0, [](const BoundaryHit& h) { return h.point.imag() > 0.0; }, quick(100000));
    EXPECT_NEAR(e.value, 0.5, 3.0 * e.stdError + 1e-3);
    RectangleDomain sq(0.0, 1.0, 0.0, 1.0);
    auto s = harmonicMeasureMC(sq, {0.5, 0.5}, [](const BoundaryHit& h) { return h.part == 0; }, quick(100000));
    EXPECT_NEAR(s.value, 0.25, 3.0 * s.stdError + 1e-3);
}

TEST(Walks, PartitionSumsToOne) {
    RectangleDomain R(0.0, 2.0, 0.0, 1.0);
    auto sample = runWalks(R, {0.7, 0.3}, quick(50000, 9));
    double total = 0.0, var = 0.0;
    for (int part = 0; part < 4; ++part) {
        auto e = estimateFrom(sample, [part](const BoundaryHit& h) { return h.part == part; });
        total += e.value;
        var += e.stdError * e.stdError;
    }
    EXPECT_NEAR(total, 1.0, 4.0 * std::sqrt(var) + 1e-12);
}

TEST(Walks, RectangleSeriesAgrees) {
    RectangleDomain R(0.0, 1.0, 0.0, 1.0);
    EXPECT_NEAR(rectangleLeftSideSeries(R, {0.5, 0.5}), 0.25, 1e-12);
    RectangleDomain W(0.0, 2.0, 0.0, 1.0);
    Complex z0(0.6, 0.4);
    auto e = harmonicMeasureMC(W, z0, [](const BoundaryHit& h) { return h.part == 0; }, quick(100000, 3));
    EXPECT_NEAR(e.value, rectangleLeftSideSeries(W, z0), 3.0 * e.stdError + 2e-3);
    RectangleDomain thin(0.0, 2.0, 0.0, 0.2);
    double v = rectangleLeftSideSeries(thin, {1.0, 0.1});
    EXPECT_NEAR(v, 4.0 / kPi * std::exp(-5.0 * kPi), 1e-3 * v);
}

TEST(Walks, DeterministicForFixedSeedAndWorkers) {
    RectangleDomain R(0.0, 1.0, 0.0, 1.0);
    auto a = runWalks(R, {0.3, 0.6}, quick(5000, 17, 3)), b = runWalks(R, {0.3, 0.6}, quick(5000, 17, 3));
    ASSERT_EQ(a.hits.size(), b.hits.size());
    for (size_t i = 0; i < a.hits.size(); ++i) {
        EXPECT_EQ(a.hits[i].point, b.hits[i].point);
        EXPECT_EQ(a.hits[i].part, b.hits[i].part);
    }
}

TEST(Walks, HatGeometry) {
    HatDomain H(Profile::power(2.0), 0.0, 2.0);
    EXPECT_TRUE(H.contains({1.0, 0.5}));
    EXPECT_FALSE(H.contains({1.0, 1.5}));
    EXPECT_FALSE(H.contains({0.5, 0.3}));
    EXPECT_NEAR(H.distance({1.0, 0.1}), 0.1, 1e-12);
    // nearest point on y = x^2 from (0.5, 0.3) by brute force
    double best = INFINITY;
    for (int i = 0; i <= 200000; ++i) {
        double x = i * 1e-5;
        best = std::min(best, std::hypot(x - 0.5, x * x - 0.3));
    }
    EXPECT_NEAR(H.distance({0.5, 0.3}), best, 1e-6);
    EXPECT_EQ(H.nearest({1.0, 0.999}).part, 1);
}

TEST(BtTable, RowsAndPreconditions) {
    auto T = verifyBtBound(Profile::power(2.0), 0.0, 2.0, {0.9}, {1.0, 0.5}, quick(20000));
    ASSERT_EQ(T.rows.size(), 1u);
    EXPECT_TRUE(T.rows[0].pass);
    EXPECT_GT(T.rows[0].estimate, 0.3);
    EXPECT_THROW(verifyBtBound(Profile::power(2.0), 0.0, 2.0, {1.0}, {1.0, 0.5}, quick(10)), Error);
}
