#include "disclab/wizard.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/trigamma.hpp>

#include "disclab/circle.hpp"
#include "disclab/errors.hpp"
#include "numeric.hpp"

namespace disclab {

namespace {

constexpr double kPiOver2 = 0.5 * kPi;
constexpr int kHeadTerms = 200;
constexpr int kMaxN0 = 64;

// sum_{n >= 2} 1/n^2
const double kZeta2Minus1 = kPi * kPi / 6.0 - 1.0;

double gammaAt(const Majorant& F, int n, int n0) {
    double a = std::ldexp(1.0, -n - n0);
    return a * F.logF(a);
}

} // namespace

// ---------------------------------------------------------------- profile

Profile Profile::power(double q, double scale) {
    if (!(q > 0.0) || !(scale > 0.0)) throw domainError("power profile needs q > 0 and scale > 0");
    Profile p;
    p.kind_ = Kind::Power;
    p.q_ = q;
    p.scale_ = scale;
    return p;
}

Profile Profile::knots(std::vector<double> ts, std::vector<double> ps) {
    if (ts.size() < 2 || ts.size() != ps.size()) throw inputError("BadProfile", "need at least two matching knots");
    for (size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i] > 0.0) || !(ps[i] > 0.0)) throw inputError("BadProfile", "knots must be positive");
        if (i > 0 && !(ts[i] < ts[i - 1] && ps[i] < ps[i - 1]))
            throw inputError("BadProfile", "knots must decrease strictly in both t and p");
    }
    Profile p;
    p.kind_ = Kind::Knots;
    p.ts_ = std::move(ts);
    p.ps_ = std::move(ps);
    return p;
}

double Profile::operator()(double x) const {
    if (!(x > 0.0)) return 0.0;
    if (kind_ == Kind::Power) return scale_ * std::pow(x, q_);
    auto segment = [&](size_t i, double x) {
        // log-log line through knots i and i + 1
        double s = std::log(ps_[i] / ps_[i + 1]) / std::log(ts_[i] / ts_[i + 1]);
        return ps_[i + 1] * std::pow(x / ts_[i + 1], s);
    };
    const size_t n = ts_.size();
    if (x >= ts_[0]) return segment(0, x);
    if (x <= ts_[n - 1]) return segment(n - 2, x);
    // ts_ is decreasing: find i with ts_[i+1] <= x < ts_[i]
    auto it = std::lower_bound(ts_.begin(), ts_.end(), x, std::greater<double>());
    size_t i = static_cast<size_t>(it - ts_.begin()) - 1;
    if (ts_[i + 1] == x) return ps_[i + 1];
    return segment(i, x);
}

// ---------------------------------------------------------------- n0 and profile

int chooseN0(const Majorant& F, double eps, N0Certificate* cert) {
    if (!(eps > 0.0)) throw domainError("eps must be positive");
    auto c = F.certify();
    if (!c.ok()) throw inputError("NotAMajorant", "F fails the majorant certificate: " + F.describe());
    for (int n0 = 1; n0 <= kMaxN0; ++n0) {
        double a1 = std::ldexp(1.0, -1 - n0);
        if (!(a1 < F.d()) || !(F.logF(a1) > 0.0)) continue;
        double head = 0.0;
        for (int n = 1; n <= kHeadTerms; ++n) head += gammaAt(F, n, n0);
        double aTail = std::ldexp(1.0, -kHeadTerms - 1 - n0);
        double tail = 2.0 * detail::tanhSinh([&](double t) { return F.logF(t); }, 0.0, aTail).value;
        if (head + tail < eps) {
            if (cert) *cert = {n0, head, tail, kHeadTerms};
            return n0;
        }
    }
    throw inputError("NotAMajorant", "no n0 up to " + std::to_string(kMaxN0) + " brings sum gamma_n below eps");
}

WizardProfile buildProfile(const Majorant& F, double eps) {
    WizardProfile W;
    W.n0 = chooseN0(F, eps, &W.certificate);
    const int nmax = 1000 - W.n0;
    std::vector<double> g(nmax + 3, 0.0);   // g[n] = gamma_n, n >= 1
    for (int n = 1; n <= nmax + 2; ++n) g[n] = gammaAt(F, n, W.n0);
    std::vector<double> tail(nmax + 4, 0.0);  // tail[j] = sum_{i >= j} gamma_i
    for (int j = nmax + 2; j >= 1; --j) tail[j] = tail[j + 1] + g[j];
    W.gammaSum = tail[1];
    if (!(W.gammaSum < 0.5)) throw inputError("BadProfile", "sum gamma_n must stay below 1/2");
    W.A = (1.0 - (2.0 / kPi) * tail[3]) / kZeta2Minus1;
    if (!(W.A > 0.0)) throw inputError("BadProfile", "A must be positive");

    for (int n = 1; n <= nmax; ++n) {
        W.alphas.push_back(std::ldexp(1.0, -n - W.n0));
        W.gammas.push_back(g[n]);
        W.deltas.push_back(W.A / ((n + 1.0) * (n + 1.0)) + (2.0 / kPi) * g[n + 2]);
        double t = n == 1 ? 1.0 : W.A * boost::math::trigamma(n + 1.0) + (2.0 / kPi) * tail[n + 2];
        W.knots.push_back(t);
    }
    W.gammas.push_back(g[nmax + 1]);
    W.gammas.push_back(g[nmax + 2]);
    W.p = Profile::knots(W.knots, W.alphas);
    return W;
}

double WizardProfile::sumDeltaError() const {
    const int M = static_cast<int>(deltas.size());
    double s = 0.0, c = 0.0;
    for (double d : deltas) {
        double y = d - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double rest = A * boost::math::trigamma(M + 2.0);
    for (size_t j = static_cast<size_t>(M) + 2; j < gammas.size(); ++j) rest += (2.0 / kPi) * gammas[j];
    return std::fabs(s + rest - 1.0);
}

double WizardProfile::exponentIdentityError(int nmax) const {
    double worst = 0.0;
    for (int n = 2; n <= nmax && n + 1 <= static_cast<int>(gammas.size()); ++n) {
        double e = gamma(n + 1) - kPiOver2 * deltaT(n - 1) + (A * kPiOver2) / (static_cast<double>(n) * n);
        worst = std::max(worst, std::fabs(e));
    }
    return worst;
}

HatIntegralBound hatBoundaryIntegralBound(const WizardProfile& W, const Majorant& F) {
    HatIntegralBound r;
    double sum = 0.0;
    const int nmax = static_cast<int>(W.deltas.size()) - 1;
    for (int n = 2; n <= nmax; ++n) {
        double e = -(W.A * kPiOver2) * std::ldexp(1.0, n + 1 + W.n0) / (static_cast<double>(n) * n);
        double raw = F.logF(W.alpha(n + 1)) - 2.0 * kPi * W.deltaT(n - 1) / W.alpha(n - 1);
        r.maxRawMismatch = std::max(r.maxRawMismatch, std::fabs(raw - e) / std::fabs(e));
        double term = std::exp(e);
        r.terms.push_back(term);
        r.rawTerms.push_back(std::exp(raw));
        sum += term;
        r.partialSums.push_back((8.0 / kPi) * sum);
        if (term == 0.0) break;
    }
    int last = static_cast<int>(r.terms.size()) - 1;
    r.monotoneFrom = 2;
    for (int i = last; i > 0; --i)
        if (!(r.terms[i] <= r.terms[i - 1])) {
            r.monotoneFrom = i + 2;
            break;
        }
    // The exponent grows like 2^n / n^2, so once consecutive ratios are below 1/2 the
    // rest is bounded by a geometric series.
    double tb = 0.0;
    if (last >= 1 && r.terms[last] > 0.0) {
        double ratio = r.terms[last] / r.terms[last - 1];
        tb = ratio < 1.0 ? (8.0 / kPi) * r.terms[last] * ratio / (1.0 - ratio) : std::numeric_limits<double>::infinity();
    }
    r.tailBound = tb;
    r.total = (8.0 / kPi) * sum;
    r.finite = std::isfinite(r.total) && std::isfinite(r.tailBound);
    return r;
}

// ---------------------------------------------------------------- Beurling-Ahlfors

namespace {

double inverseProfileIntegral(const Profile& p, double a, double t, Complex z0) {
    double x0 = z0.real();
    if (!(a < t && t < x0)) throw domainError("need a < t < Re z0");
    std::vector<double> cuts{t, x0};
    for (double k : p.breakpoints())
        if (a + k > t && a + k < x0) cuts.push_back(a + k);
    std::sort(cuts.begin(), cuts.end());
    double s = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        s += detail::tanhSinh([&](double x) { return 1.0 / p(x - a); }, cuts[i], cuts[i + 1], 1e-13).value;
    return s;
}

} // namespace

double beurlingAhlforsBound(const Profile& p, double a, double t, Complex z0) {
    return (8.0 / kPi) * std::exp(-2.0 * kPi * inverseProfileIntegral(p, a, t, z0));
}

double fullWidthAhlforsBound(const Profile& p, double a, double t, Complex z0) {
    return (8.0 / kPi) * std::exp(-kPiOver2 * inverseProfileIntegral(p, a, t, z0));
}

BtTable verifyBtBound(const Profile& p, double a, double b, const std::vector<double>& ts, Complex z0,
                      const WalkOptions& opt) {
    HatDomain D(p, a, b);
    if (!D.contains(z0)) throw domainError("z0 must lie inside the hat");
    for (double t : ts)
        if (!(a < t && t < z0.real())) throw domainError("every t must satisfy a < t < Re z0");
    auto sample = runWalks(D, z0, opt);
    BtTable table;
    table.walks = sample.walks;
    table.nonConverged = sample.nonConverged;
    table.stepRule = sample.stepRule;
    table.allPass = true;
    for (double t : ts) {
        auto est = estimateFrom(sample, [&](const BoundaryHit& h) {
            return h.part == 1 && h.point.real() > a && h.point.real() < t;
        });
        BtRow row;
        row.t = t;
        row.estimate = est.value;
        row.stdError = est.stdError;
        row.bound = beurlingAhlforsBound(p, a, t, z0);
        row.fullWidthBound = fullWidthAhlforsBound(p, a, t, z0);
        row.pass = row.estimate - 3.0 * row.stdError <= row.bound;
        table.allPass = table.allPass && row.pass;
        table.rows.push_back(row);
    }
    return table;
}

} // namespace disclab
