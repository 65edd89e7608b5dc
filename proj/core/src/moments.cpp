#include "disclab/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "disclab/errors.hpp"
#include "disclab/parallel.hpp"
#include "numeric.hpp"

namespace disclab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kUMin = 1e-12;

double logAddExp(double a, double b) {
    double m = std::max(a, b);
    if (std::isinf(m)) return m;
    return m + std::log1p(std::exp(-std::fabs(a - b)));
}

// Contributions of f over dyadic levels [2^{-j-1} s, 2^{-j} s], j = 0..levels-1.
std::vector<double> dyadicContributions(const std::function<double(double)>& f, double s, int levels) {
    std::vector<double> c(levels);
    for (int j = 0; j < levels; ++j) {
        double hi = s * std::ldexp(1.0, -j), lo = 0.5 * hi;
        c[j] = detail::gauss20(f, lo, hi);
    }
    return c;
}

// Max ratio of consecutive contributions over the deepest levels.
double deepRatio(const std::vector<double>& c, int from) {
    double r = 0.0;
    for (size_t j = from; j + 1 < c.size(); ++j) {
        if (c[j] == 0.0) continue;
        r = std::max(r, std::fabs(c[j + 1] / c[j]));
    }
    return r;
}

} // namespace

Quad momentFunction(const RadialWeight& G, double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw domainError("moment function needs finite x >= 0");
    std::function<double(double)> f = [&](double u) {
        double l = G.logInv(u);
        if (std::isinf(l)) return 0.0;
        double e = -l + x * std::log1p(-u);
        return e < -745.0 ? 0.0 : std::exp(e);
    };
    double v30 = detail::geometricGauss(f, kUMin, 1.1, 30);
    double v20 = detail::geometricGauss(f, kUMin, 1.1, 20);
    // the piece (0, umin) is bounded by umin * G(umin)
    return {v30, std::fabs(v30 - v20) + kUMin * G(kUMin)};
}

// ---------------------------------------------------------------- MomentSequence

void MomentSequence::validate(const std::vector<double>& li) {
    if (li.empty()) throw domainError("moment sequence is empty");
    for (size_t n = 0; n < li.size(); ++n) {
        if (!std::isfinite(li[n])) throw domainError("moment sequence entries must be positive and finite");
        if (n && li[n] < li[n - 1] - 1e-13 * (1.0 + std::fabs(li[n - 1])))
            throw domainError("moment sequence must be decreasing (index " + std::to_string(n) + ")");
    }
}

MomentSequence MomentSequence::explicitValues(const std::vector<double>& values) {
    std::vector<double> li;
    for (double v : values) {
        if (!(v > 0.0)) throw domainError("moment sequence entries must be strictly positive");
        li.push_back(-std::log(v));
    }
    return explicitLogInv(std::move(li));
}

MomentSequence MomentSequence::explicitLogInv(std::vector<double> logInv) {
    validate(logInv);
    MomentSequence m;
    m.li_ = std::move(logInv);
    return m;
}

MomentSequence MomentSequence::fromG(std::vector<double> logInv, const RadialWeight& G) {
    validate(logInv);
    MomentSequence m;
    m.li_ = std::move(logInv);
    m.prov_ = Provenance::FromG;
    m.source_ = G;
    return m;
}

MomentSequence MomentSequence::logPowerFamily(double c, double p, size_t N) {
    if (!(c > 0.0) || !(p >= 0.0)) throw domainError("family needs c > 0 and p >= 0");
    std::vector<double> li(N + 1, 0.0);
    for (size_t n = 1; n <= N; ++n) {
        double v = c * n / std::pow(std::log(static_cast<double>(n)) + 1.0, p);
        li[n] = std::max(v, li[n - 1]);
    }
    return explicitLogInv(std::move(li));
}

double MomentSequence::operator[](size_t n) const { return std::exp(-li_.at(n)); }

std::vector<double> MomentSequence::values() const {
    std::vector<double> v(li_.size());
    for (size_t n = 0; n < v.size(); ++n) v[n] = std::exp(-li_[n]);
    return v;
}

MomentSequence MomentSequence::pow(double p) const {
    if (!(p > 0.0)) throw domainError("moment power needs p > 0");
    MomentSequence m = *this;
    for (double& l : m.li_) l *= p;
    return m;
}

MomentSequence momentsOfG(const RadialWeight& G, size_t N, std::vector<double>* relErrors) {
    std::vector<double> li(N + 1), err(N + 1);
    parallelFor(N + 1, [&](size_t n) {
        Quad q = momentFunction(G, 2.0 * n + 1.0);
        if (!(q.value > 0.0)) throw numericalFailure("MomentUnderflow", "moment M_" + std::to_string(n) + " underflows");
        li[n] = -std::log(2.0 * q.value);
        err[n] = q.error / q.value;
    });
    if (relErrors) *relErrors = err;
    return MomentSequence::fromG(std::move(li), G);
}

// ---------------------------------------------------------------- admissibility

AdmissibilityReport isAdmissible(const MomentSequence& M, double dMin) {
    AdmissibilityReport r;
    const auto& L = M.logInvs();
    size_t N = L.size() - 1;
    r.upToN = N;
    if (N < 20) {
        r.note = "fewer than 21 terms; no tail verdict";
        return r;
    }
    // (i) log-convexity of M is concavity of L
    size_t from = N;
    for (size_t n = N - 1; n >= 1; --n) {
        double slack = 1e-12 * (1.0 + std::fabs(L[n]));
        if (2.0 * L[n] + slack < L[n + 1] + L[n - 1]) break;
        from = n;
    }
    r.convexFrom = from;
    r.logConvexTail = from <= N / 2;

    // (ii)
    r.fittedD = kInf;
    for (size_t n = std::max<size_t>(1, N / 2); n <= N; ++n)
        r.fittedD = std::min(r.fittedD, L[n] / std::sqrt(static_cast<double>(n)));
    r.sqrtDecay = r.fittedD >= dMin;

    // (iii) fit h_n = L_n/n ~ C (1 + log n)^{-q} on the tail half
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (size_t n = std::max<size_t>(2, N / 2); n <= N; ++n) {
        if (!(L[n] > 0.0)) continue;
        double X = std::log1p(std::log(static_cast<double>(n)));
        double Y = std::log(L[n] / n);
        sx += X, sy += Y, sxx += X * X, sxy += X * Y, ++cnt;
    }
    double partial = 0.0;
    for (size_t n = 0; n <= N; ++n) partial += std::max(0.0, L[n]) / (1.0 + double(n) * n);
    if (cnt >= 3 && sxx * cnt - sx * sx > 0.0) {
        double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
        r.fittedQ = -slope;
        double logN1 = std::log1p(std::log(static_cast<double>(N)));
        double C = L[N] / N * std::exp(r.fittedQ * logN1);
        r.tailEstimate = r.fittedQ > 1.0 ? partial + C * std::exp((1.0 - r.fittedQ) * logN1) / (r.fittedQ - 1.0) : kInf;
        r.tailSum = r.fittedQ > 1.05;
    } else {
        r.tailEstimate = kInf;
    }
    if (M.provenance() == MomentSequence::Provenance::FromG && M.source() && M.source()->isPreset()) {
        // log(1/M_n) grows like sqrt(n) (T1, T2) or like log n (linear): summable either way
        r.analytic = true;
        r.tailSum = true;
        if (!std::isfinite(r.tailEstimate)) r.tailEstimate = partial;
    }
    r.admissible = r.logConvexTail && r.sqrtDecay && r.tailSum;
    r.note = r.analytic ? "condition (iii) from the generating preset; (i), (ii) on data up to N"
                        : "all conditions on data up to N";
    return r;
}

AdmissibleToGResult admissibleToG(const MomentSequence& M, bool override, size_t tableStride) {
    auto rep = isAdmissible(M);
    if (!rep.admissible && !override) throw inputError("NotAdmissible", "sequence is not admissible up to N: " + rep.note);
    const auto& L = M.logInvs();
    size_t N = L.size() - 1;
    size_t s = rep.convexFrom > 0 ? rep.convexFrom - 1 : 0;
    while (s + 1 <= N && (L[s] <= 0.0 || L[s + 1] <= L[s])) ++s;
    if (s + 2 > N) throw inputError("NotAdmissible", "fewer than three usable terms after the convexity index");
    std::vector<double> xs, ys;
    for (size_t n = s; n <= N; ++n) {
        xs.push_back(2.0 * n + 1.0);
        ys.push_back(L[n]);
    }
    EnvelopeFunction k = [&] {
        try {
            return EnvelopeFunction::piecewiseLinear(xs, ys, EnvelopeFunction::Shape::IncreasingConcave,
                                                     EnvelopeFunction::Tail::Sqrt);
        } catch (const Error& e) {
            throw inputError("NotAdmissible", std::string("interpolant is not concave increasing: ") + e.what());
        }
    }();
    AdmissibleToGResult out{RadialWeight::conjugate(k), k};
    out.firstIndex = s;

    std::vector<size_t> idx;
    for (size_t n = s; n <= N; n += std::max<size_t>(1, tableStride)) idx.push_back(n);
    if (idx.back() != N) idx.push_back(N);
    out.table.resize(idx.size());
    parallelFor(idx.size(), [&](size_t i) {
        size_t n = idx[i];
        Quad q = momentFunction(out.G, 2.0 * n + 1.0);
        double m = M[n];
        out.table[i] = {n, q.value, q.error, m, q.value <= m * (1.0 + 1e-10)};
    });
    for (size_t i = out.table.size(); i-- > 0;) {
        if (!out.table[i].ok) break;
        out.threshold = out.table[i].n;
    }

    out.d = kInf;
    for (size_t i = 0; i < xs.size(); ++i) out.d = std::min(out.d, ys[i] / std::sqrt(xs[i]));
    // on the sqrt tail k/sqrt(x) tends to B from above when A >= 0
    if (k.tailA() >= 0.0) out.d = std::min(out.d, k.tailB());
    double xmax = std::min(1.0, out.d / (2.0 * std::sqrt(xs[0])));
    out.expDecProxy = kInf;
    for (int j = 0; j <= 40; ++j) {
        double x = xmax * std::ldexp(1.0, -j);
        out.expDecProxy = std::min(out.expDecProxy, x * out.G.logInv(x));
    }
    out.expDecHolds = out.expDecProxy >= 0.25 * out.d * out.d * (1.0 - 1e-12);
    return out;
}

// ---------------------------------------------------------------- growth classes

GrowthFlags growthClass(const RadialWeight& G) {
    GrowthFlags g;
    switch (G.kind()) {
    case RadialWeight::Kind::T1:
    case RadialWeight::Kind::T2:
        g.expDec = true, g.logLogInt = true, g.logInt = false, g.analytic = true;
        g.qualifier = "analytic";
        return g;
    case RadialWeight::Kind::Linear:
        g.expDec = false, g.logLogInt = true, g.logInt = true, g.analytic = true;
        g.qualifier = "analytic";
        return g;
    default: break;
    }
    // proxies over dyadic levels x = 2^{-j}, j = 0..60
    const int levels = 60;
    double v40 = std::ldexp(1.0, -40) * G.logInv(std::ldexp(1.0, -40));
    double v60 = std::ldexp(1.0, -60) * G.logInv(std::ldexp(1.0, -60));
    double vmin = kInf;
    for (int j = 40; j <= 60; ++j) vmin = std::min(vmin, std::ldexp(1.0, -j) * G.logInv(std::ldexp(1.0, -j)));
    g.expDec = vmin > 0.0 && v60 >= 0.5 * v40;
    auto ll = dyadicContributions([&](double t) { return std::max(0.0, G.logLogInv(t)); }, 1.0, levels);
    g.logLogInt = deepRatio(ll, 40) <= 0.75;
    auto l1 = dyadicContributions([&](double t) { return std::max(0.0, G.logInv(t)); }, 1.0, levels);
    g.logInt = deepRatio(l1, 40) <= 0.75;
    g.qualifier = "numeric proxy at dyadic resolution 2^-60";
    return g;
}

// ---------------------------------------------------------------- majorants

Majorant Majorant::inversePower(double q, double scale, double d) {
    if (!(q > 0.0) || !(scale > 0.0) || !(d > 0.0)) throw domainError("F = scale/t^q needs q, scale, d > 0");
    Majorant m;
    m.kind_ = Kind::InversePower;
    m.q_ = q, m.scale_ = scale, m.d_ = d;
    return m;
}

Majorant Majorant::constant(double value, double d) {
    if (!(value > 0.0) || !(d > 0.0)) throw domainError("constant F needs value > 0");
    Majorant m;
    m.kind_ = Kind::Constant;
    m.scale_ = value, m.d_ = d;
    return m;
}

Majorant Majorant::fromG(const RadialWeight& G) {
    Majorant m;
    m.kind_ = Kind::FromG;
    m.G_ = G;
    m.d_ = 1.0;
    return m;
}

double Majorant::logF(double t) const {
    if (!(t > 0.0)) return kInf;
    switch (kind_) {
    case Kind::InversePower: return std::log(scale_) - q_ * std::log(t);
    case Kind::Constant: return std::log(scale_);
    case Kind::FromG: {
        double a = std::log(8.0) - 3.0 * std::log(t);
        double li = G_->logInv(0.5 * t);
        if (std::isfinite(li) && li < 1e300) {
            double v = a + 0.5 * li;
            return v > 0.0 ? std::log(v) : -kInf;
        }
        return logAddExp(std::log(a), std::log(0.5) + G_->logLogInv(0.5 * t));
    }
    }
    return kInf;
}

double Majorant::operator()(double t) const { return std::exp(logF(t)); }

Majorant::Certificate Majorant::certify() const {
    Certificate c;
    const int levels = 60;
    std::vector<double> lf(levels + 1);
    for (int j = 0; j <= levels; ++j) lf[j] = logF(d_ * std::ldexp(1.0, -j));
    c.decreasing = true;
    for (int j = 0; j < levels; ++j)
        if (lf[j + 1] < lf[j] - 1e-12 * (1.0 + std::fabs(lf[j]))) c.decreasing = false;
    c.blowsUp = lf[levels] > lf[1] + 1.0 && lf[levels] > lf[40];
    auto contrib = dyadicContributions([&](double t) { return logF(t); }, d_, levels);
    double r = deepRatio(contrib, 40);
    c.logIntegrable = r <= 0.75;
    double sum = 0.0;
    for (double v : contrib) sum += v;
    c.logIntegral = c.logIntegrable ? sum + std::fabs(contrib.back()) * r / (1.0 - r) : kInf;
    return c;
}

std::string Majorant::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::InversePower: os << scale_ << "/t^" << q_; break;
    case Kind::Constant: os << "constant " << scale_; break;
    case Kind::FromG: os << "log(8/t^3) + log(1/G(t/2))/2, G = " << G_->describe(); break;
    }
    return os.str();
}

Majorant majorantFromG(const RadialWeight& G) {
    auto flags = growthClass(G);
    if (!flags.logLogInt) throw inputError("NotAMajorant", "G fails LogLogInt (" + flags.qualifier + ")");
    Majorant m = Majorant::fromG(G);
    if (!m.certify().ok()) throw inputError("NotAMajorant", "majorant certificate failed for " + G.describe());
    return m;
}

} // namespace disclab
