#include <cmath>

#include <gtest/gtest.h>

#include <disclab/core_set.hpp>

using namespace disclab;

namespace {

const int K = 12;

std::vector<Weight> presets() {
    return {Weight::constant(2.0),
            Weight::power(1.0, 3.0),
            Weight::expDist(ClosedSet::point(0.0)),
            Weight::expDist(ClosedSet::points({0.0, 2.0}), 2.0),
            Weight::indicator(ClosedSet::arc(Arc(1.0, 2.0))),
            Weight::expDist(ClosedSet::arc(Arc(4.0, 0.5)))};
}

bool sameSet(const ArcSet& a, const ArcSet& b, double tol = 1e-12) {
    return a.minus(b).length() <= tol && b.minus(a).length() <= tol;
}

} // namespace

TEST(CoreSet, ExampleWeightRemovesOneCell) {
    auto r = coreSet(Weight::expDist(ClosedSet::point(0.0)), 14);
    EXPECT_NEAR(r.core.complement().length(), kTwoPi * std::ldexp(1.0, -14), 1e-12);
    EXPECT_FALSE(r.core.contains(0.0));
    EXPECT_TRUE(r.core.contains(kPi));
    ASSERT_EQ(r.singularPoints.size(), 1u);
    EXPECT_NEAR(std::remainder(r.singularPoints[0], kTwoPi), 0.0, 1e-12);
    EXPECT_TRUE(r.inconclusive.empty());
}

TEST(CoreSet, ConstantWeightHasFullCore) {
    auto r = coreSet(Weight::constant(1.0), K);
    EXPECT_TRUE(r.core.isFull());
    EXPECT_TRUE(r.singularPoints.empty());
}

TEST(CoreSet, IndicatorOfArcGivesInterior) {
    Arc E(1.0, 2.0);
    auto r = coreSet(Weight::indicator(ClosedSet::arc(E)), K);
    double h = kTwoPi * std::ldexp(1.0, -K);
    EXPECT_LE(r.core.minus(ArcSet({E})).length(), 1e-12);
    EXPECT_GE(r.core.length(), E.length - 2.0 * h);
}

TEST(CoreSet, ZeroWeightAndFatCantorHaveEmptyCore) {
    EXPECT_TRUE(coreSet(Weight::constant(0.0), K).core.empty());
    auto rr = residualSet(Weight::constant(0.0), K);
    EXPECT_TRUE(rr.residual.empty());
    auto fc = residualSet(Weight::indicator(ClosedSet::fatCantor(FatCantor())), K);
    EXPECT_TRUE(fc.core.core.empty());
}

TEST(CoreSet, InvariantUnderPowersAndScaling) {
    for (const auto& w : presets()) {
        auto base = coreSet(w, K).core;
        for (double p : {0.5, 2.0, 3.0}) EXPECT_TRUE(sameSet(coreSet(w.pow(p), K).core, base)) << w.describe();
        for (double c : {0.1, 10.0}) EXPECT_TRUE(sameSet(coreSet(w.scaled(c), K).core, base)) << w.describe();
    }
}

TEST(CoreSet, MonotoneInTheWeight) {
    // exp(-1/dist(., {0, 2})) <= exp(-1/dist(., {0})) pointwise
    auto small = Weight::expDist(ClosedSet::points({0.0, 2.0}));
    auto big = Weight::expDist(ClosedSet::point(0.0));
    EXPECT_TRUE(coreSet(small, K).core.minus(coreSet(big, K).core).empty());
    // 1_E w <= w
    auto masked = big * Weight::indicator(ClosedSet::arc(Arc(2.0, 3.0)));
    EXPECT_TRUE(coreSet(masked, K).core.minus(coreSet(big, K).core).empty());
}

TEST(CoreSet, ResidualDisjointFromCore) {
    for (const auto& w : presets()) {
        auto r = residualSet(w, K);
        EXPECT_NEAR(r.residual.intersect(r.core.core).length(), 0.0, 1e-12) << w.describe();
    }
}

TEST(CoreSet, RefinementOnlyShrinksExcludedNeighbourhoods) {
    for (const auto& w : presets()) {
        for (int k = 8; k < 12; ++k) {
            auto coarse = coreSet(w, k).core, fine = coreSet(w, k + 1).core;
            double h = kTwoPi * std::ldexp(1.0, -k);
            // whatever the coarse level kept, the fine level keeps too, up to boundary cells
            double lost = coarse.minus(fine).length();
            EXPECT_LE(lost, 2.0 * h * (coarse.arcs().size() + 1)) << w.describe();
        }
    }
}

TEST(Carrier, Examples) {
    EXPECT_EQ(isCoreCarrier(Weight::expDist(ClosedSet::point(0.0)), 14, 1e-8).verdict, Verdict::Yes);
    EXPECT_EQ(isCoreCarrier(Weight::constant(1.0), K, 1e-8).verdict, Verdict::Yes);
    auto fc = isCoreCarrier(Weight::indicator(ClosedSet::fatCantor(FatCantor())), K, 1e-8);
    EXPECT_EQ(fc.verdict, Verdict::No);
    EXPECT_NEAR(fc.offCore.value, 0.5, 1e-6);
}
