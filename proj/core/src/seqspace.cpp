#include "disclab/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "disclab/circle.hpp"
#include "disclab/errors.hpp"
#include "numeric.hpp"

namespace disclab {

namespace {

void checkDegree(const MomentSequence& M, const TaylorSeries& f) {
    if (f.size() > M.size())
        throw inputError("DegreeMismatch", "series degree " + std::to_string(f.degree()) + " exceeds moment length " +
                                               std::to_string(M.size()));
}

} // namespace

double h2Norm(const MomentSequence& M, const TaylorSeries& f) {
    checkDegree(M, f);
    double s = 0.0;
    for (size_t n = 0; n < f.size(); ++n) s += M[n] * std::norm(f[n]);
    return std::sqrt(s);
}

double h2StarNorm(const MomentSequence& M, const TaylorSeries& f) {
    checkDegree(M, f);
    double s = 0.0;
    for (size_t n = 0; n < f.size(); ++n) {
        double a = std::norm(f[n]);
        if (a > 0.0) s += std::exp(std::log(a) + M.logInv(n));
    }
    return std::sqrt(s);
}

double h1StarNorm(const MomentSequence& M, const TaylorSeries& f) {
    checkDegree(M, f);
    double s = 0.0;
    for (size_t n = 0; n < f.size(); ++n) {
        double a = std::abs(f[n]);
        if (a > 0.0) s = std::max(s, std::exp(std::log(a) + M.logInv(n)));
    }
    return s;
}

Complex pairing(const TaylorSeries& f, const TaylorSeries& g) {
    Complex s = 0.0;
    size_t n = std::min(f.size(), g.size());
    for (size_t i = 0; i < n; ++i) s += f[i] * std::conj(g[i]);
    return s;
}

ToeplitzResult toeplitzCoanalytic(const TaylorSeries& h, const TaylorSeries& f, size_t nOut) {
    ToeplitzResult r;
    r.series.coeffs.assign(nOut + 1, Complex{});
    r.series.conditionEstimate = f.conditionEstimate;
    for (size_t n = 0; n <= nOut; ++n) {
        Complex s = 0.0;
        for (size_t k = 0; k < h.size() && n + k < f.size(); ++k) s += std::conj(h[k]) * f[n + k];
        r.series.coeffs[n] = s;
    }
    if (h.size() > 0 && f.size() > 0 && nOut + h.degree() >= f.size()) {
        double hl1 = 0.0;
        for (const auto& c : h.coeffs) hl1 += std::abs(c);
        double last = 0.0;
        size_t from = f.size() > h.size() ? f.size() - h.size() : 0;
        for (size_t m = from; m < f.size(); ++m) last = std::max(last, std::abs(f[m]));
        r.truncationBound = hl1 * last;
    }
    return r;
}

std::string toString(RsdVerdict::Kind k) {
    switch (k) {
    case RsdVerdict::Kind::Rsd: return "rsd";
    case RsdVerdict::Kind::NotRsd: return "notRsd";
    case RsdVerdict::Kind::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

RsdVerdict rsdClassify(const TaylorSeries& f, const RsdOptions& opt) {
    RsdVerdict v;
    if (f.size() == 0) throw inputError("EmptySeries", "no coefficients");
    size_t N = f.degree();
    IndexRange w = opt.window.value_or(IndexRange{N / 2, N});
    if (w.hi > N) w.hi = N;
    if (w.lo > w.hi) throw inputError("BadWindow", "window is empty or outside the degree range");
    v.tailWindow = w;
    double scale = 0.0;
    for (const auto& c : f.coeffs) scale = std::max(scale, std::abs(c));
    v.noiseFloor = opt.noiseFloor + 8.0 * f.conditionEstimate * scale;
    if (w.hi - w.lo + 1 < opt.minWindow) return v;

    // The running maximum near the right end of the window has no later peak to lean
    // on and dips with any oscillation, so the last quarter only feeds the maximum.
    size_t stop = w.hi - (w.hi - w.lo) / 4;
    std::vector<double> ns, env;
    double run = 0.0;
    bool any = false;
    for (size_t n = w.hi + 1; n-- > w.lo;) {
        double a = std::abs(f[n]);
        if (!(a > v.noiseFloor) || n == 0) continue;
        any = true;
        run = std::max(run, a);
        if (n > stop) continue;
        ns.push_back(static_cast<double>(n));
        env.push_back(run);
    }
    v.usedPoints = ns.size();
    if (!any) {
        v.verdict = RsdVerdict::Kind::Rsd;
        v.fittedC = std::numeric_limits<double>::infinity();
        v.cLower = v.fittedC;
        return v;
    }
    if (ns.size() < std::max<size_t>(opt.minWindow, 4)) return v;

    Eigen::MatrixXd A(ns.size(), 3);
    Eigen::VectorXd y(ns.size());
    for (size_t i = 0; i < ns.size(); ++i) {
        A(i, 0) = 1.0;
        A(i, 1) = std::sqrt(ns[i]);
        A(i, 2) = std::log(ns[i]);
        y(i) = -std::log(env[i]);
    }
    auto qr = A.colPivHouseholderQr();
    Eigen::Vector3d x = qr.solve(y);
    double sigma2 = (A * x - y).squaredNorm() / static_cast<double>(ns.size() - 3);
    Eigen::Matrix3d cov = (A.transpose() * A).inverse();
    double se = std::sqrt(std::max(0.0, sigma2 * cov(1, 1)));
    v.fittedC = std::max(0.0, x(1));
    v.fittedP = x(2);
    v.cLower = x(1) - opt.confidence * se;
    v.verdict = v.cLower >= opt.cMin ? RsdVerdict::Kind::Rsd : RsdVerdict::Kind::NotRsd;
    return v;
}

double normIdentityCheck(const RadialWeight& G, const TaylorSeries& f) {
    if (f.size() == 0) throw inputError("EmptySeries", "no coefficients");
    auto M = momentsOfG(G, f.degree());
    double sum = 0.0;
    for (size_t n = 0; n < f.size(); ++n) sum += M[n] * std::norm(f[n]);

    // |f|^2 on a circle is a trigonometric polynomial of degree <= deg f, so the
    // equispaced rule with more nodes than 2 deg f + 1 is exact.
    int K = 2 * static_cast<int>(f.degree()) + 2;
    std::vector<Complex> unit(K);
    for (int j = 0; j < K; ++j) unit[j] = std::polar(1.0, kTwoPi * j / K);
    auto angularMean = [&](double r) {
        double s = 0.0;
        for (int j = 0; j < K; ++j) s += std::norm(f.evaluate(r * unit[j]));
        return s / K;
    };
    auto integrand = [&](double u) {
        double g = G(u);
        if (!(g > 0.0)) return 0.0;
        double r = 1.0 - u;
        return 2.0 * g * r * angularMean(r);
    };
    double area = detail::geometricGauss(integrand, 1e-12, 1.1, 30);
    if (sum == 0.0) return std::fabs(area);
    return std::fabs(area - sum) / sum;
}

EmbeddingReport embeddingCheck(const MomentSequence& M, double p, size_t samples, std::uint64_t seed) {
    EmbeddingReport r;
    r.samples = samples;
    if (!(p > 0.5)) {
        r.supported = false;
        r.note = "p <= 1/2 is outside the embedding range";
        return r;
    }
    size_t N = M.size();
    double b2 = 0.0;
    for (size_t n = 0; n < N; ++n) b2 += std::exp(-(2.0 * p - 1.0) * M.logInv(n));
    r.bound = std::sqrt(b2);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    auto Mp = M.pow(p);
    auto Mh = M.pow(0.5);
    for (size_t s = 0; s < samples; ++s) {
        TaylorSeries f;
        f.coeffs.resize(N);
        for (size_t n = 0; n < N; ++n) f.coeffs[n] = std::polar(Mp[n] * U(rng), kTwoPi * U(rng));
        double h1 = h1StarNorm(Mp, f);
        if (!(h1 > 0.0)) continue;
        for (auto& c : f.coeffs) c /= h1;
        double h2s = h2StarNorm(M, f);
        r.maxRatioFirst = std::max(r.maxRatioFirst, h2s / r.bound);
        r.maxRatioSecond = std::max(r.maxRatioSecond, h1StarNorm(Mh, f) / h2s);
    }
    r.holds = r.maxRatioFirst <= 1.0 + 1e-12 && r.maxRatioSecond <= 1.0 + 1e-12;
    return r;
}

} // namespace disclab
