#include "disclab/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "disclab/errors.hpp"
#include "disclab/parallel.hpp"
#include "numeric.hpp"

namespace disclab {

namespace {

enum class Kernel { Cauchy, Poisson, Herglotz };

Complex kernelAt(Kernel k, double theta, Complex z) {
    Complex x = std::polar(1.0, theta);
    switch (k) {
    case Kernel::Cauchy: return 1.0 / (1.0 - std::conj(x) * z);
    case Kernel::Poisson: return (1.0 - std::norm(z)) / std::norm(x - z);
    case Kernel::Herglotz: return (x + z) / (x - z);
    }
    return {};
}

// Cut points that isolate the kernel peak at arg z: arg z and arg z +- delta 4^j.
std::vector<double> peakCuts(Complex z) {
    std::vector<double> cuts;
    double r = std::abs(z);
    if (r < 0.5) return cuts;
    double a = std::arg(z), delta = 1.0 - r;
    cuts.push_back(a);
    for (double s = delta; s < kPi; s *= 4.0) {
        cuts.push_back(a + s);
        cuts.push_back(a - s);
    }
    return cuts;
}

// Integrate f(theta) dtheta/2pi over the open set, splitting at the given angles.
template <class F>
Complex integrateOver(F f, const ArcSet& support, std::vector<double> cuts) {
    for (double& c : cuts) c = normalizeAngle(c);
    std::sort(cuts.begin(), cuts.end());
    Complex total = 0.0;
    for (const auto& seg : support.segments()) {
        std::vector<double> pts{seg.first, seg.second};
        for (double c : cuts)
            if (c > seg.first && c < seg.second) pts.push_back(c);
        std::sort(pts.begin(), pts.end());
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            if (!(pts[i + 1] > pts[i])) continue;
            total += detail::tanhSinhComplex(f, pts[i], pts[i + 1], 1e-12).value;
        }
    }
    return total / kTwoPi;
}

void rejectNearSupport(const CircleMeasure& nu, Complex z) {
    double r = std::abs(z);
    for (const auto& a : nu.atoms())
        if (std::abs(z - std::polar(1.0, a.angle)) < kSupportExclusion)
            throw domainError("z lies within 1e-8 of an atom of the singular support");
    for (const auto& p : nu.selfSimilarParts()) {
        Arc base(p.base.start, p.base.length, true);
        double d = base.contains(std::arg(z)) ? 1.0 - r
                                             : std::min(std::abs(z - std::polar(1.0, base.start)),
                                                        std::abs(z - std::polar(1.0, base.end())));
        if (d < kSupportExclusion) throw domainError("z lies within 1e-8 of the self-similar support");
    }
}

Complex selfSimilarKernel(const SelfSimilar& p, Kernel k, Complex z) {
    Complex total = 0.0;
    auto offset = [&](int j) { return j * (1.0 - p.ratio) / (p.arity - 1); };
    std::function<void(double, double, double, int, bool)> rec = [&](double lo, double len, double mass, int level,
                                                                    bool inside) {
        double frac = 1.0;
        if (!inside && p.window) {
            double covered = ArcSet(std::vector<Arc>{Arc(lo, len)}).intersect(*p.window).length() / len;
            if (covered <= 1e-13) return;
            if (covered >= 1.0 - 1e-13) inside = true;
            else frac = covered;
        }
        double mid = lo + 0.5 * len;
        double dist = std::abs(std::polar(1.0, mid) - z);
        if ((inside || !p.window) && len < 3e-5 * dist) {
            total += mass * kernelAt(k, mid, z);
            return;
        }
        if (level >= 40) {
            total += frac * mass * kernelAt(k, mid, z);
            return;
        }
        for (int j = 0; j < p.arity; ++j)
            rec(lo + len * offset(j), len * p.ratio, mass / p.arity, level + 1, inside || !p.window);
    };
    rec(p.base.start, p.base.length, p.mass, 0, !p.window);
    return total;
}

Complex densityKernel(const Density& d, Kernel k, Complex z) {
    if (d.modulus) {
        const Weight& w = *d.modulus;
        if (w.identicallyZero()) return 0.0;
        bool pureConstant = w.kind() == Weight::Kind::Preset &&
                            std::all_of(w.factors().begin(), w.factors().end(), [](const auto& f) {
                                return f.type == Weight::Factor::Type::Constant;
                            });
        if (pureConstant && d.phase == 0) return w.value(0.0);  // every kernel has mean 1
        if (const FatCantor* c = w.cantorFactor()) {
            Complex total = 0.0;
            for (const auto& cell : c->cells(std::min(c->depth(), 14))) {
                double mid = 0.5 * (cell.lo + cell.hi);
                total += cell.mass / kTwoPi * w.smoothFactorsValue(mid) * std::polar(1.0, d.phase * mid) *
                         kernelAt(k, mid, z);
            }
            return total;
        }
        ArcSet support = w.zeroSetIn(Arc::full()).complement();
        auto cuts = peakCuts(z);
        auto bps = w.breakpoints();
        cuts.insert(cuts.end(), bps.begin(), bps.end());
        return integrateOver([&](double t) { return kernelAt(k, t, z) * d.value(t); }, support, cuts);
    }
    size_t n = d.grid.size();
    std::vector<double> cuts = peakCuts(z);
    for (size_t j = 0; j < n; ++j) cuts.push_back(kTwoPi * j / n);
    return integrateOver([&](double t) { return kernelAt(k, t, z) * d.value(t); }, ArcSet::full(), cuts);
}

Complex integrateKernel(const CircleMeasure& nu, Kernel k, Complex z) {
    diskPoint(z);
    rejectNearSupport(nu, z);
    Complex total = 0.0;
    for (const auto& a : nu.atoms()) total += a.mass * kernelAt(k, a.angle, z);
    for (const auto& p : nu.selfSimilarParts()) total += selfSimilarKernel(p, k, z);
    if (nu.density()) total += densityKernel(*nu.density(), k, z);
    return total;
}

} // namespace

Complex diskPoint(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > 1.0 - kDiskMargin)
        throw domainError("point must satisfy |z| <= 1 - 1e-12");
    return z;
}

Complex cauchyTransform(const CircleMeasure& nu, Complex z) { return integrateKernel(nu, Kernel::Cauchy, z); }
Complex poissonIntegral(const CircleMeasure& nu, Complex z) { return integrateKernel(nu, Kernel::Poisson, z); }
Complex herglotzIntegral(const CircleMeasure& nu, Complex z) { return integrateKernel(nu, Kernel::Herglotz, z); }

TaylorSeries cauchyCoefficients(const CircleMeasure& nu, int N) {
    if (N < 0) throw domainError("coefficient count must be >= 0");
    return TaylorSeries(nu.fourier(0, N));
}

Complex herglotzOfFunction(const std::function<double(double)>& f, const std::vector<double>& breakpoints, Complex z,
                           const ArcSet& support) {
    diskPoint(z);
    auto cuts = peakCuts(z);
    cuts.insert(cuts.end(), breakpoints.begin(), breakpoints.end());
    return integrateOver([&](double t) { return kernelAt(Kernel::Herglotz, t, z) * f(t); }, support, cuts);
}

Complex singularInner(const CircleMeasure& nu, Complex z) {
    if (nu.hasDensity()) throw inputError("RejectDensity", "singular inner functions take measures without density");
    return std::exp(-herglotzIntegral(nu, z));
}

// ---------------------------------------------------------------- log-modulus and outer functions

LogModulus LogModulus::constant(double c) {
    if (!std::isfinite(c)) throw domainError("constant log-modulus must be finite");
    LogModulus m;
    m.c_ = c;
    return m;
}

LogModulus LogModulus::logOf(const Weight& w, double s) {
    LogModulus m;
    m.kind_ = Kind::LogOfWeight;
    m.w_ = w;
    m.s_ = s;
    return m;
}

LogModulus LogModulus::fromDelta(const Weight& delta) {
    LogModulus m;
    m.kind_ = Kind::FromDelta;
    m.w_ = delta;
    return m;
}

double LogModulus::operator()(double theta) const {
    switch (kind_) {
    case Kind::Constant: return c_;
    case Kind::LogOfWeight: return s_ * w_->logValue(theta);
    case Kind::FromDelta: {
        double d = w_->value(theta);
        return 0.5 * std::log1p(-d * d);
    }
    }
    return 0.0;
}

std::vector<double> LogModulus::breakpoints() const { return w_ ? w_->breakpoints() : std::vector<double>{}; }

double LogModulus::mean() const {
    switch (kind_) {
    case Kind::Constant: return c_;
    case Kind::LogOfWeight: {
        auto li = w_->logIntegral(Arc::full());
        if (!li.finite()) throw inputError("DivergentLogModulus", "int log w dm is not finite: " + li.note);
        return s_ * li.value;
    }
    case Kind::FromDelta: {
        if (w_->identicallyZero()) return 0.0;
        double v = integrateOver([&](double t) { return Complex((*this)(t), 0.0); }, ArcSet::full(), breakpoints()).real();
        if (!std::isfinite(v)) throw inputError("DivergentLogModulus", "int log(1 - Delta^2) dm diverges");
        return v;
    }
    }
    return 0.0;
}

Complex outerFromLogModulus(const LogModulus& phi, Complex z) {
    diskPoint(z);
    double m = phi.mean();
    if (phi.kind() == LogModulus::Kind::Constant) return std::exp(m);
    return std::exp(herglotzOfFunction([&](double t) { return phi(t); }, phi.breakpoints(), z));
}

Complex blaschke(const std::vector<Complex>& zeros, Complex z) {
    Complex b = 1.0;
    for (Complex a : zeros) {
        diskPoint(a);
        if (a == 0.0) b *= z;
        else b *= (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
    }
    return b;
}

Complex clarkToB(const CircleMeasure& nu, Complex z) {
    if (!nu.isPositive()) throw domainError("Clark measures are positive");
    double mass = nu.totalMass();
    if (std::fabs(mass - 1.0) > 1e-10)
        throw inputError("MassNotOne", "Clark correspondence needs nu(T) = 1, got " + std::to_string(mass));
    Complex H = herglotzIntegral(nu, z);
    return (H - 1.0) / (H + 1.0);
}

TaylorSeries taylorOf(const std::function<Complex(Complex)>& f, int N, double r) {
    if (N < 0) throw domainError("taylorOf needs N >= 0");
    if (!(r > 0.0 && r < 1.0)) throw domainError("taylorOf needs r in (0, 1)");
    double cond = std::pow(r, -static_cast<double>(N));
    if (cond > 1e12)
        throw numericalFailure("IllConditioned", "r^{-N} = " + std::to_string(cond) + " exceeds 1e12; raise r or lower N");
    size_t M = 8;
    while (M < 8 * static_cast<size_t>(std::max(N, 1))) M *= 2;
    std::vector<Complex> samples(M);
    parallelFor(M, [&](size_t j) { samples[j] = f(std::polar(r, kTwoPi * j / M)); });
    auto F = detail::dft(samples);
    std::vector<Complex> c(N + 1);
    double rn = 1.0;
    for (int n = 0; n <= N; ++n) {
        c[n] = F[n] / (static_cast<double>(M) * rn);
        rn *= r;
    }
    return TaylorSeries(std::move(c), cond * 2.2e-16);
}

Complex BSymbol::operator()(Complex z) const {
    Complex v = blaschke(zeros, z);
    if (!singular.isZero()) v *= singularInner(singular, z);
    if (!delta.identicallyZero()) v *= outerFromLogModulus(logModulus(), z);
    return v;
}

void BSymbol::validate() const {
    if (singular.hasDensity()) throw inputError("RejectDensity", "the singular part of b cannot carry a density");
    for (const auto& a : singular.atoms())
        if (!(a.mass > 0.0)) throw domainError("singular measure must be positive");
    for (Complex a : zeros) diskPoint(a);
    for (int j = 0; j < 4096; ++j) {
        double d = delta.value(kTwoPi * j / 4096.0);
        if (d > 1.0 + 1e-12) throw domainError("Delta_b must not exceed 1");
    }
}

} // namespace disclab
