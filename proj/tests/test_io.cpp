#include <cstdio>
#include <fstream>

#include <gtest/gtest.h>

#include <disclab/errors.hpp>
#include <disclab/io.hpp>

using namespace disclab;

namespace {

std::string tempPath(const std::string& name) { return ::testing::TempDir() + name; }

void writeFile(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

} // namespace

TEST(WeightJson, RoundTrip) {
    std::vector<Weight> ws = {Weight::constant(2.5), Weight::power(1.0, 0.5),
                              Weight::expDist(ClosedSet::points({0.0, 2.0}), 0.5, 0.7),
                              Weight::indicator(ClosedSet::fatCantor(FatCantor(0.5, 3.0, 12))),
                              Weight::expDist(ClosedSet::point(0.0)) * Weight::power(kPi, 2.0),
                              Weight::grid({1.0, 0.5, 0.25, 0.5, 0.75, 1.5, 2.0, 1.25}, {1.0})};
    for (const auto& w : ws) {
        auto back = io::weightFromJson(io::toJson(w));
        for (double t : {0.1, 1.3, 2.9, 4.4, 6.0}) EXPECT_DOUBLE_EQ(back.value(t), w.value(t)) << w.describe();
        EXPECT_EQ(io::toJson(back), io::toJson(w));
    }
}

TEST(MeasureJson, RoundTrip) {
    SelfSimilar s;
    s.base = Arc(0.5, 1.0);
    s.mass = 0.3;
    auto nu = CircleMeasure::fromAtoms({{0.2, 0.5}, {3.0, 0.1}}) + CircleMeasure::selfSimilar(s) +
              CircleMeasure::fromDensity(Weight::power(0.0, 2.0), 1);
    auto back = io::measureFromJson(io::toJson(nu));
    EXPECT_EQ(io::toJson(back), io::toJson(nu));
    EXPECT_NEAR(back.totalMass(), nu.totalMass(), 1e-15);
}

TEST(OtherJson, RoundTrips) {
    for (const auto& G : {RadialWeight::t1(1.0, 2.0), RadialWeight::t2(0.5, 1.0), RadialWeight::linear()})
        EXPECT_EQ(io::toJson(io::radialFromJson(io::toJson(G))), io::toJson(G));
    auto F = Majorant::inversePower(1.0, 2.0, 0.5);
    EXPECT_EQ(io::toJson(io::majorantFromJson(io::toJson(F))), io::toJson(F));
    auto P = Profile::knots({1.0, 0.5, 0.25}, {0.1, 0.01, 0.001});
    auto Pb = io::profileFromJson(io::toJson(P));
    for (double x : {0.1, 0.3, 0.7, 1.5}) EXPECT_DOUBLE_EQ(Pb(x), P(x));
    auto k = EnvelopeFunction::piecewiseLinear({1.0, 3.0}, {0.0, 1.0}, EnvelopeFunction::Shape::IncreasingConcave,
                                               EnvelopeFunction::Tail::Sqrt);
    EXPECT_EQ(io::toJson(io::envelopeFromJson(io::toJson(k))), io::toJson(k));
}

TEST(SchemaErrors, AreInputErrors) {
    auto expectInput = [](auto fn) {
        try {
            fn();
            FAIL() << "no error";
        } catch (const Error& e) {
            EXPECT_EQ(e.errorClass(), ErrorClass::Input);
        }
    };
    expectInput([] { io::weightFromJson(io::Json::parse(R"({"family":"nope"})")); });
    expectInput([] { io::weightFromJson(io::Json::parse(R"({"schema_version":7,"family":"constant","params":{"c":1}})")); });
    expectInput([] { io::measureFromJson(io::Json::parse(R"({})")); });
    expectInput([] { io::radialFromJson(io::Json::parse(R"({"family":"t1","params":{"beta":1}})")); });
    expectInput([] { io::readJsonFile("/nonexistent/file.json"); });
}

TEST(Csv, CoefficientsRoundTrip) {
    TaylorSeries f({{1.0, 0.0}, {0.5, -0.25}, {1e-300, 3.0}});
    auto path = tempPath("coeffs.csv");
    writeFile(path, "# a comment\n" + io::coefficientsCsv(f));
    auto back = io::readCoefficientsCsv(path);
    ASSERT_EQ(back.size(), f.size());
    for (size_t n = 0; n < f.size(); ++n) EXPECT_EQ(back[n], f[n]);
}

TEST(Csv, MissingIndicesAreZeroAndBadRowsFail) {
    auto path = tempPath("sparse.csv");
    writeFile(path, "0,1,0\n3,2,1\n");
    auto s = io::readCoefficientsCsv(path);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[1], Complex(0.0));
    EXPECT_EQ(s[3], Complex(2.0, 1.0));
    writeFile(path, "0,1,0\nx,y,z\n");
    EXPECT_THROW(io::readCoefficientsCsv(path), Error);
    writeFile(path, "-1,1,0\n");
    EXPECT_THROW(io::readCoefficientsCsv(path), Error);
}

TEST(Csv, FormatDoubleRoundTrips) {
    for (double x : {0.1, 1.0 / 3.0, 1e-300, -2.5e17}) EXPECT_EQ(std::stod(io::formatDouble(x)), x);
}
