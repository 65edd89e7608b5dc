#include <cmath>

#include <gtest/gtest.h>

#include <disclab/errors.hpp>
#include <disclab/oracle.hpp>

using namespace disclab;

namespace {

const Weight& exampleWeight() {
    static const Weight w = Weight::expDist(ClosedSet::point(0.0));
    return w;
}

BSymbol symbol(CircleMeasure nu, Weight delta, std::vector<Complex> zeros = {}) {
    BSymbol b;
    b.zeros = std::move(zeros);
    b.singular = std::move(nu);
    b.delta = std::move(delta);
    return b;
}

} // namespace

TEST(Cyclicity, ExampleVerdicts) {
    EXPECT_EQ(isCyclic(CircleMeasure::dirac(0.0), exampleWeight(), 14, 1e-8).verdict, Verdict::Yes);
    EXPECT_EQ(isCyclic(CircleMeasure::dirac(kPi), exampleWeight(), 14, 1e-8).verdict, Verdict::No);
    EXPECT_EQ(isCyclic(CircleMeasure(), exampleWeight(), 14).verdict, Verdict::Yes);
}

TEST(Cyclicity, AtomOnCoreBoundaryIsWithheld) {
    double edge = kPi * std::ldexp(1.0, -14);
    auto v = isCyclic(CircleMeasure::dirac(edge), exampleWeight(), 14);
    EXPECT_EQ(v.verdict, Verdict::Inconclusive);
}

TEST(Cyclicity, RejectsDensities) {
    EXPECT_THROW(isCyclic(CircleMeasure::lebesgue(), exampleWeight(), 10), Error);
}

TEST(Permanence, ExampleVerdicts) {
    EXPECT_EQ(hasPermanence(CircleMeasure::dirac(kPi), exampleWeight(), 14).verdict, Verdict::Yes);
    EXPECT_EQ(hasPermanence(CircleMeasure::dirac(0.0), exampleWeight(), 14).verdict, Verdict::No);
    auto split = hasPermanence(CircleMeasure::fromAtoms({{0.0, 0.5}, {kPi, 0.5}}), exampleWeight(), 14);
    EXPECT_EQ(split.verdict, Verdict::No);
    EXPECT_NEAR(split.massOnCore.value, 0.5, 1e-12);
}

TEST(Permanence, ComplementsCyclicityForAtoms) {
    for (double a : {0.0, 0.5, 1.0, kPi, 5.0}) {
        auto nu = CircleMeasure::dirac(a);
        auto c = isCyclic(nu, exampleWeight(), 12).verdict, p = hasPermanence(nu, exampleWeight(), 12).verdict;
        EXPECT_NE(c, p) << a;
    }
}

TEST(Classify, RestrictionToCore) {
    auto r = classifyInvariantSubspace({}, CircleMeasure::fromAtoms({{0.0, 1.0}, {kPi, 1.0}}), exampleWeight(), 14);
    ASSERT_EQ(r.restricted.atoms().size(), 1u);
    EXPECT_NEAR(r.restricted.atoms()[0].angle, kPi, 1e-12);
    EXPECT_NEAR(r.restrictedMass.value, 1.0, 1e-12);
    auto off = classifyInvariantSubspace({}, CircleMeasure::dirac(0.0), exampleWeight(), 14);
    EXPECT_TRUE(off.restricted.isZero());
    auto z = classifyInvariantSubspace({0.3}, CircleMeasure(), Weight::constant(1.0), 10);
    EXPECT_TRUE(z.restricted.isZero());
    EXPECT_EQ(z.zeroCount, 1u);
}

TEST(HbExistence, Examples) {
    auto outer = symbol(CircleMeasure(), exampleWeight().scaled(0.5));
    auto e = hbExistence(outer, 14);
    EXPECT_EQ(e.verdict, Verdict::Yes);
    ASSERT_TRUE(e.witness.has_value());
    EXPECT_FALSE(e.witness->contains(0.0));
    EXPECT_EQ(hbExistence(symbol(CircleMeasure::dirac(0.0), Weight::constant(0.0)), 14).verdict, Verdict::No);
    EXPECT_EQ(hbExistence(symbol(CircleMeasure(), Weight::constant(0.0), {0.3}), 14).verdict, Verdict::Yes);
}

TEST(HbDensity, Examples) {
    auto b0 = exampleWeight().scaled(0.5);
    EXPECT_EQ(hbDensity(symbol(CircleMeasure::dirac(0.0), b0, {0.2}), 14).verdict, Verdict::No);
    EXPECT_EQ(hbDensity(symbol(CircleMeasure::dirac(kPi), b0, {0.2}), 14).verdict, Verdict::Yes);
    EXPECT_EQ(hbDensity(symbol(CircleMeasure(), Weight::constant(0.5)), 14).verdict, Verdict::Yes);
    EXPECT_EQ(hbDensity(symbol(CircleMeasure(), Weight::constant(0.0)), 14).verdict, Verdict::Inconclusive);
}

TEST(RsdCarrierConsistency, Corpus) {
    auto fat = theoremCCheck(CircleMeasure::fromDensity(Weight::indicator(ClosedSet::fatCantor(FatCantor()))), 512, 12);
    EXPECT_EQ(fat.status, TheoremCReport::Status::Consistent);
    EXPECT_EQ(fat.rsd.verdict, RsdVerdict::Kind::NotRsd);
    EXPECT_EQ(fat.carrier.verdict, Verdict::No);
    EXPECT_EQ(theoremCCheck(CircleMeasure::lebesgue(), 128, 12).status, TheoremCReport::Status::Consistent);
    auto ex = theoremCCheck(CircleMeasure::fromDensity(exampleWeight(), 1), 256, 14);
    EXPECT_EQ(ex.status, TheoremCReport::Status::Consistent);
    EXPECT_EQ(ex.carrier.verdict, Verdict::Yes);
}
