// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <disclab/circle.hpp>
#include <disclab/core_set.hpp>
#include <disclab/io.hpp>
#include <disclab/legendre.hpp>
#include <disclab/measure.hpp>
#include <disclab/moments.hpp>
#include <disclab/obstacle.hpp>
#include <disclab/oracle.hpp>
#include <disclab/radial.hpp>
#include <disclab/seqspace.hpp>
#include <disclab/transforms.hpp>
#include <disclab/walk.hpp>
#include <disclab/wizard.hpp>

#include "cli.hpp"

using namespace disclab;

namespace {

const std::string kData = DISCLAB_DATA_DIR;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int runCli(std::vector<std::string> args) {
    args.insert(args.begin(), "disclab");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

Weight example15() { return Weight::expDist(ClosedSet::point(0.0)); }

} // namespace

int main() {
    criterion(1, "cyclicity verdicts for w = exp(-1/dist(x, {0}))", [] {
        auto t0 = std::chrono::steady_clock::now();
        auto a = isCyclic(CircleMeasure::dirac(0.0), example15(), 14, 1e-8);
        auto b = isCyclic(CircleMeasure::dirac(kPi), example15(), 14, 1e-8);
        double s = since(t0);
        bool ok = a.verdict == Verdict::Yes && b.verdict == Verdict::No && s < 10.0;
        return Outcome{ok, std::string("delta_0 ") + toString(a.verdict) + ", delta_pi " + toString(b.verdict)};
    });

    criterion(2, "T1(1,1) moment sandwich, n in [50, 500]", [] {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<double> rel;
        auto M = momentsOfG(RadialWeight::t1(1.0, 1.0), 500, &rel);
        double d = dBetaC(1.0, 1.0), worstRel = 0.0;
        size_t bad = 0;
        for (size_t n = 50; n <= 500; ++n) {
            double x = static_cast<double>(n);
            double lo = -std::log(2.0) + d * std::sqrt(4 * x + 2) + std::log(8 * x + 4);  // log 1/lower
            double hi = -std::log(2.0) + d * std::sqrt(2 * x + 1);                       // log 1/upper
            if (!(M.logInv(n) <= lo && M.logInv(n) >= hi)) ++bad;
            worstRel = std::max(worstRel, rel[n]);
        }
        double s = since(t0);
        return Outcome{bad == 0 && worstRel <= 1e-6 && s < 60.0 && std::fabs(d - 2.0) < 1e-15,
                       fmt("%.0f violations, max quadrature rel. error %.2e", static_cast<double>(bad), worstRel)};
    });

    criterion(3, "Legendre inversion on knot grids", [] {
        double worst = inversionCheck(EnvelopeFunction::sqrtScale(2.0), {0.25, 0.5, 1.0, 2.0, 4.0, 9.0, 16.0});
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> C(0.5, 2.0), P(1.5, 3.0);
        for (int i = 0; i < 10; ++i) {
            auto M = MomentSequence::logPowerFamily(C(rng), P(rng), 2000);
            auto k = admissibleToG(M).k;
            worst = std::max(worst, inversionCheck(k, k.xs()));
        }
        return Outcome{worst <= 1e-9, fmt("max error %.2e over 2 sqrt(x) and 10 datasets", worst)};
    });

    criterion(4, "G(t) = t closed-form moments, n <= 100", [] {
        auto M = momentsOfG(RadialWeight::linear(), 100);
        double worst = 0.0;
        for (size_t n = 0; n <= 100; ++n) {
            double exact = 1.0 / ((n + 1.0) * (2.0 * n + 3.0));
            worst = std::max(worst, std::fabs(M[n] - exact) / exact);
        }
        return Outcome{worst <= 1e-10, fmt("max relative error %.2e", worst)};
    });

    criterion(5, "admissibility dichotomy", [] {
        bool p2 = isAdmissible(MomentSequence::logPowerFamily(1.0, 2.0, 2000)).admissible;
        bool p1 = isAdmissible(MomentSequence::logPowerFamily(1.0, 1.0, 2000)).admissible;
        std::vector<double> li;
        for (int n = 0; n <= 2000; ++n) li.push_back(n);
        bool p0 = isAdmissible(MomentSequence::explicitLogInv(li)).admissible;
        return Outcome{p2 && !p1 && !p0, std::string("p=2 ") + (p2 ? "yes" : "no") + ", p=1 " + (p1 ? "yes" : "no") +
                                             ", exp(-n) " + (p0 ? "yes" : "no")};
    });

    criterion(6, "norm identity on 20 random polynomials", [] {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<int> deg(0, 16);
        std::normal_distribution<double> N(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            std::vector<Complex> c(deg(rng) + 1);
            for (auto& x : c) x = {N(rng), N(rng)};
            TaylorSeries f(c);
            worst = std::max(worst, normIdentityCheck(RadialWeight::t1(1.0, 1.0), f));
            worst = std::max(worst, normIdentityCheck(RadialWeight::linear(), f));
        }
        return Outcome{worst <= 1e-6, fmt("max relative gap %.2e (T1(1,1) and G = t)", worst)};
    });

    criterion(7, "obstacle suite, levels 4..14", [] {
        auto t0 = std::chrono::steady_clock::now();
        auto nu = CircleMeasure::dirac(0.0);
        auto w = example15();
        auto core = coreSet(w, 14);
        std::vector<ObstacleFunction> seq;
        double massErr = 0.0;
        size_t violations = 0;
        for (int L = 4; L <= 14; ++L) {
            seq.push_back(buildObstacleSequence(nu, w, L, core));
            for (const auto& c : seq.back().cells) massErr = std::max(massErr, std::fabs(c.achieved - c.target));
            violations += seq.back().checkObstacle(10000, static_cast<std::uint64_t>(L)).violations;
        }
        double ws = weakStarError(seq, nu, 8).back().maxError;
        double wit = 0.0;
        for (const auto& r : cyclicWitness(nu, w, {14}, {0.0, 0.5, Complex(0.0, 0.5)})) wit = std::max(wit, r.error);
        double s = since(t0);
        bool ok = massErr <= 1e-10 && violations == 0 && ws <= 1e-2 && wit <= 1e-3 && s < 120.0;
        return Outcome{ok, fmt("mass error %.1e, %.0f violations, weak-star %.2e, witness %.2e", massErr,
                               static_cast<double>(violations), ws, wit)};
    });

    criterion(8, "Beurling-Ahlfors bound by walk-on-spheres, 1e6 walks", [] {
        auto t0 = std::chrono::steady_clock::now();
        WalkOptions opt;
        opt.walks = 1000000;
        opt.seed = 42;
        std::string detail;
        bool ok = true;

        auto T = verifyBtBound(Profile::power(2.0, 1.0), 0.0, 2.0, {0.5, 0.9}, Complex(1.0, 0.5), opt);
        for (const auto& r : T.rows) {
            ok = ok && r.pass;
            detail += fmt("hat t=%.1f %.5f+-%.1e vs %.5f; ", r.t, r.estimate, r.stdError, r.bound);
        }

        RectangleDomain thin(0.0, 2.0, 0.0, 0.2);
        auto left = harmonicMeasureMC(thin, {1.0, 0.1}, [](const BoundaryHit& h) { return h.part == 0; }, opt);
        double rb = (8.0 / kPi) * std::exp(-2.0 * kPi * 1.0 / 0.2);
        bool rectPass = left.value - 3.0 * left.stdError <= rb;
        ok = ok && rectPass;
        detail += fmt("thin rectangle %.1e vs %.1e (series %.2e); ", left.value, rb,
                      rectangleLeftSideSeries(thin, {1.0, 0.1}));

        DiskDomain disk;
        auto upper = harmonicMeasureMC(disk, 0.0, [](const BoundaryHit& h) { return h.point.imag() > 0.0; }, opt);
        RectangleDomain sq(0.0, 1.0, 0.0, 1.0);
        auto side = harmonicMeasureMC(sq, {0.5, 0.5}, [](const BoundaryHit& h) { return h.part == 0; }, opt);
        bool controls = std::fabs(upper.value - 0.5) <= 3.0 * upper.stdError &&
                        std::fabs(side.value - 0.25) <= 3.0 * side.stdError;
        ok = ok && controls && since(t0) < 300.0;
        detail += fmt("disk %.4f, square %.4f", upper.value, side.value);
        return Outcome{ok, detail};
    });

    criterion(9, "profile bookkeeping for F(t) = 1/t", [] {
        auto F = Majorant::inversePower(1.0, 1.0);
        int n0 = chooseN0(F, 0.5);
        auto W = buildProfile(F, 0.5);
        double sd = W.sumDeltaError(), ex = W.exponentIdentityError(40);
        return Outcome{n0 == 3 && sd <= 1e-12 && ex <= 1e-12,
                       fmt("n0 = %.0f, sum error %.1e, exponent identity %.1e", n0, sd, ex)};
    });

    criterion(10, "H(b) oracle table and exit codes", [] {
        const std::string s = kData + "/symbols/";
        std::string out = "/tmp/disclab_acceptance_hb.json";
        int e1 = runCli({"oracle", "hb-dense", "--b", s + "outer_atom_0.json", "--out", out});
        auto d1 = hbDensity(io::bSymbolFromJson(io::readJsonFile(s + "outer_atom_0.json")), 14);
        int e2 = runCli({"oracle", "hb-dense", "--b", s + "outer_atom_pi.json", "--out", out});
        auto d2 = hbDensity(io::bSymbolFromJson(io::readJsonFile(s + "outer_atom_pi.json")), 14);
        int e3 = runCli({"oracle", "hb-exist", "--b", s + "outer.json", "--out", out});
        auto d3 = hbExistence(io::bSymbolFromJson(io::readJsonFile(s + "outer.json")), 14);
        int e4 = runCli({"oracle", "hb-dense", "--b", s + "unimodular_constant.json", "--out", out});
        bool ok = d1.verdict == Verdict::No && d2.verdict == Verdict::Yes && d3.verdict == Verdict::Yes && e1 == 0 &&
                  e2 == 0 && e3 == 0 && e4 == 3;
        return Outcome{ok, std::string("atom at excluded point ") + toString(d1.verdict) + ", moved off " + toString(d2.verdict) +
                               ", non-extreme " + toString(d3.verdict) +
                               fmt(", exit codes %.0f/%.0f/%.0f, undecided %.0f", e1, e2, e3, e4)};
    });

    criterion(11, "rsd versus carrier consistency on the corpus", [] {
        auto fat = theoremCCheck(CircleMeasure::fromDensity(Weight::indicator(ClosedSet::fatCantor(FatCantor()))), 512,
                                 14);
        auto one = theoremCCheck(CircleMeasure::lebesgue(), 512, 14);
        auto ex = theoremCCheck(CircleMeasure::fromDensity(example15()), 512, 14);
        using S = TheoremCReport::Status;
        bool ok = fat.status == S::Consistent && one.status == S::Consistent && ex.status == S::Consistent &&
                  fat.rsd.verdict == RsdVerdict::Kind::NotRsd;
        return Outcome{ok, "fat Cantor " + toString(fat.status) + " (" + toString(fat.rsd.verdict) + "), g = 1 " +
                               toString(one.status) + ", exp(-1/dist) modulus " + toString(ex.status)};
    });

    criterion(12, "RSD stack", [] {
        auto nu = CircleMeasure::dirac(0.0);
        auto s = taylorOf([&](Complex z) { return singularInner(nu, z); }, 512, 0.97);
        auto a = rsdClassify(s);
        std::vector<Complex> c;
        for (int n = 0; n <= 512; ++n) c.push_back(std::exp(-2.0 * std::sqrt(static_cast<double>(n))));
        auto b = rsdClassify(TaylorSeries(c));
        bool ok = a.verdict == RsdVerdict::Kind::NotRsd && b.verdict == RsdVerdict::Kind::Rsd && b.fittedC >= 1.8 &&
                  b.fittedC <= 2.2;
        return Outcome{ok, "S_delta0 " + toString(a.verdict) + ", exp(-2 sqrt n) " + toString(b.verdict) +
                               fmt(" with c = %.4f", b.fittedC)};
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures;
}
