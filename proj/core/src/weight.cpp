#include "disclab/weight.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/special_functions/zeta.hpp>

#include "disclab/errors.hpp"
#include "numeric.hpp"

namespace disclab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Positive-length overlap of [a, b] with [c, d].
double overlap(double a, double b, double c, double d) { return std::min(b, d) - std::max(a, c); }

// Candidates p + 2pi m lying in [lo - pad, hi + pad].
std::vector<double> liftsNear(double p, double lo, double hi, double pad) {
    std::vector<double> out;
    for (int m = -1; m <= 1; ++m) {
        double q = p + m * kTwoPi;
        if (q >= lo - pad && q <= hi + pad) out.push_back(q);
    }
    return out;
}

// Local windows of a global segment relative to a Cantor set's start.
std::vector<Segment> localWindows(const FatCantor& c, const Segment& seg) {
    double l0 = c.local(seg.first);
    double len = seg.second - seg.first;
    if (len >= kTwoPi) return {{0.0, kTwoPi}};
    if (l0 + len <= kTwoPi) return {{l0, l0 + len}};
    return {{l0, kTwoPi}, {0.0, l0 + len - kTwoPi}};
}

// Mean of log over a linear segment from va to vb (both > 0).
double meanLogLinear(double va, double vb) {
    double d = vb - va;
    if (std::fabs(d) < 1e-7 * std::max(va, vb)) {
        double m = 0.5 * (va + vb);
        double r = d / m;
        return std::log(m) - r * r / 24.0;
    }
    return (vb * std::log(vb) - va * std::log(va)) / d - 1.0;
}

} // namespace

double clausen2(double theta) {
    static const std::array<double, 40> coef = [] {
        std::array<double, 40> c{};
        for (int k = 1; k <= 40; ++k) {
            c[k - 1] = boost::math::zeta(2.0 * k) /
                       (k * (2.0 * k + 1.0) * std::pow(kTwoPi, 2.0 * k));
        }
        return c;
    }();
    double t = theta - kTwoPi * std::round(theta / kTwoPi);
    if (t == 0.0) return 0.0;
    double sign = t < 0.0 ? -1.0 : 1.0;
    double x = std::fabs(t);
    double x2 = x * x;
    double pw = x * x2;
    double sum = x - x * std::log(x);
    for (double c : coef) {
        double term = c * pw;
        sum += term;
        if (term < 1e-18 * std::fabs(sum)) break;
        pw *= x2;
    }
    return sign * sum;
}

// ---------------------------------------------------------------- FatCantor

FatCantor::FatCantor(double start, double length, int depth)
    : start_(normalizeAngle(start)), length_(std::clamp(length, 0.0, kTwoPi)), depth_(depth) {
    if (depth < 1 || depth > 40) throw domainError("fat Cantor depth must lie in [1, 40]");
    if (!(length_ > 0.0)) throw domainError("fat Cantor base arc must have positive length");
    ell_.assign(depth + 1, 0.0);
    gap_.assign(depth + 1, 0.0);
    ell_[0] = length_;
    for (int j = 1; j <= depth; ++j) {
        gap_[j] = length_ * std::pow(4.0, -j);
        ell_[j] = 0.5 * (ell_[j - 1] - gap_[j]);
    }
}

double FatCantor::measure() const { return std::ldexp(ell_[depth_], depth_) / kTwoPi; }

bool FatCantor::contains(double theta) const {
    double u = local(theta);
    if (u > length_) return false;
    double x = 0.0;
    for (int j = 1; j <= depth_; ++j) {
        if (u <= x + ell_[j]) continue;
        double right = x + ell_[j] + gap_[j];
        if (u >= right) {
            x = right;
            continue;
        }
        return false;
    }
    return true;
}

double FatCantor::lengthInRec(double x, int j, double lo, double hi) const {
    double a = x, b = x + ell_[j];
    if (hi <= a || lo >= b) return 0.0;
    if (lo <= a && hi >= b) return std::ldexp(ell_[depth_], depth_ - j);
    if (j == depth_) return std::min(hi, b) - std::max(lo, a);
    return lengthInRec(x, j + 1, lo, hi) + lengthInRec(x + ell_[j + 1] + gap_[j + 1], j + 1, lo, hi);
}

double FatCantor::lengthIn(double lo, double hi) const {
    if (!(hi > lo)) return 0.0;
    return lengthInRec(0.0, 0, lo, hi);
}

bool FatCantor::complementRec(double x, int j, double lo, double hi) const {
    double a = x, b = x + ell_[j];
    if (overlap(a, b, lo, hi) <= 0.0) return false;
    if (j == depth_) return false;
    double g0 = x + ell_[j + 1], g1 = g0 + gap_[j + 1];
    if (overlap(g0, g1, lo, hi) > 0.0) return true;
    return complementRec(x, j + 1, lo, hi) || complementRec(g1, j + 1, lo, hi);
}

bool FatCantor::complementOverlaps(double lo, double hi) const {
    if (!(hi > lo)) return false;
    if (overlap(length_, kTwoPi, lo, hi) > 0.0) return true;
    return complementRec(0.0, 0, lo, hi);
}

std::complex<double> FatCantor::fourier(int k) const {
    double leaf = ell_[depth_];
    if (k == 0) return {measure(), 0.0};
    std::complex<double> prod = std::polar(1.0, -k * start_);
    for (int j = 1; j <= depth_; ++j) prod *= 1.0 + std::polar(1.0, -k * (ell_[j] + gap_[j]));
    std::complex<double> I = std::complex<double>(0.0, 1.0) * (std::polar(1.0, -k * leaf) - 1.0) /
                             (kTwoPi * static_cast<double>(k));
    return prod * I;
}

void FatCantor::gapsRec(double x, int j, double lo, double hi, int maxStep, std::vector<Segment>& out) const {
    if (j >= std::min(depth_, maxStep)) return;
    if (overlap(x, x + ell_[j], lo, hi) <= 0.0) return;
    double g0 = x + ell_[j + 1], g1 = g0 + gap_[j + 1];
    if (overlap(g0, g1, lo, hi) > 0.0) out.push_back({std::max(g0, lo), std::min(g1, hi)});
    gapsRec(x, j + 1, lo, hi, maxStep, out);
    gapsRec(g1, j + 1, lo, hi, maxStep, out);
}

std::vector<Segment> FatCantor::gapsIn(double lo, double hi, int maxStep) const {
    std::vector<Segment> localGaps;
    for (auto w : localWindows(*this, {lo, hi})) {
        gapsRec(0.0, 0, w.first, w.second, maxStep, localGaps);
        if (overlap(length_, kTwoPi, w.first, w.second) > 0.0)
            localGaps.push_back({std::max(length_, w.first), std::min(kTwoPi, w.second)});
    }
    std::vector<Segment> out;
    for (auto g : localGaps) {
        for (auto s : toSegments(Arc(start_ + g.first, g.second - g.first))) out.push_back(s);
    }
    return out;
}

std::vector<FatCantor::Cell> FatCantor::cells(int level) const {
    level = std::clamp(level, 0, depth_);
    std::vector<Cell> out;
    std::vector<double> xs{0.0};
    for (int j = 1; j <= level; ++j) {
        std::vector<double> next;
        next.reserve(xs.size() * 2);
        for (double x : xs) {
            next.push_back(x);
            next.push_back(x + ell_[j] + gap_[j]);
        }
        xs.swap(next);
    }
    double mass = std::ldexp(ell_[depth_], depth_ - level);
    for (double x : xs) out.push_back({start_ + x, start_ + x + ell_[level], mass});
    return out;
}

// ---------------------------------------------------------------- ClosedSet

ClosedSet ClosedSet::points(const std::vector<double>& thetas) {
    ClosedSet s;
    for (double t : thetas) s.arcs.emplace_back(t, 0.0, true);
    return s;
}

bool ClosedSet::contains(double theta) const {
    for (const auto& a : arcs) {
        if (a.length == 0.0 ? normalizeAngle(theta) == a.start : Arc(a.start, a.length, true).contains(theta))
            return true;
    }
    return cantor && cantor->contains(theta);
}

double ClosedSet::distance(double theta) const {
    double best = kInf;
    for (const auto& a : arcs) {
        if (a.length > 0.0 && Arc(a.start, a.length, true).contains(theta)) return 0.0;
        best = std::min({best, chord(theta, a.start), chord(theta, a.end())});
    }
    return best;
}

ArcSet ClosedSet::interior() const {
    std::vector<Arc> open;
    for (const auto& a : arcs)
        if (a.length > 0.0) open.emplace_back(a.start, a.length);
    return ArcSet(open);
}

std::vector<double> ClosedSet::contactPoints() const {
    std::vector<double> pts;
    for (const auto& a : arcs) {
        pts.push_back(a.start);
        if (a.length > 0.0) pts.push_back(normalizeAngle(a.end()));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// ---------------------------------------------------------------- Weight construction

Weight Weight::constant(double c) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw domainError("constant weight must be finite and >= 0");
    Weight w;
    Factor f;
    f.type = Factor::Type::Constant;
    f.c = c;
    w.factors_.push_back(f);
    return w;
}

Weight Weight::power(double a, double gamma) {
    if (!(gamma > -1.0)) throw domainError("power weight |x - e^{ia}|^gamma needs gamma > -1 to be integrable");
    Weight w;
    Factor f;
    f.type = Factor::Type::Power;
    f.a = normalizeAngle(a);
    f.gamma = gamma;
    w.factors_.push_back(f);
    return w;
}

Weight Weight::expDist(const ClosedSet& E, double s, double gamma) {
    if (E.cantor) throw domainError("exp(-s/dist^gamma) supports finite arc unions only");
    if (E.arcs.empty()) throw domainError("exp(-s/dist^gamma) needs a nonempty set E");
    if (!(s > 0.0) || !(gamma > 0.0)) throw domainError("exp(-s/dist^gamma) needs s > 0 and gamma > 0");
    Weight w;
    Factor f;
    f.type = Factor::Type::ExpDist;
    f.s = s;
    f.gamma = gamma;
    f.set = E;
    w.factors_.push_back(f);
    return w;
}

Weight Weight::indicator(const ClosedSet& E) {
    Weight w;
    Factor f;
    f.type = Factor::Type::Indicator;
    f.set = E;
    w.factors_.push_back(f);
    return w;
}

Weight Weight::grid(std::vector<double> samples, std::vector<double> singularPoints, double floor) {
    if (samples.size() < 8) throw domainError("grid weight needs at least 8 samples");
    for (double& v : samples) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw domainError("grid weight samples must be finite and >= 0");
        if (v <= floor) v = 0.0;
    }
    Weight w;
    w.kind_ = Kind::Grid;
    w.samples_ = std::move(samples);
    for (double& p : singularPoints) p = normalizeAngle(p);
    w.singular_ = std::move(singularPoints);
    w.floor_ = floor;
    return w;
}

Weight Weight::operator*(const Weight& other) const {
    if (kind_ == Kind::Grid || other.kind_ == Kind::Grid) {
        if (kind_ != other.kind_ || samples_.size() != other.samples_.size())
            throw domainError("grid weights multiply only with grids of equal size");
        std::vector<double> s(samples_.size());
        for (size_t i = 0; i < s.size(); ++i) s[i] = samples_[i] * other.samples_[i];
        auto sing = singular_;
        sing.insert(sing.end(), other.singular_.begin(), other.singular_.end());
        return grid(std::move(s), std::move(sing), std::max(floor_, other.floor_));
    }
    Weight w = *this;
    w.factors_.insert(w.factors_.end(), other.factors_.begin(), other.factors_.end());
    return w;
}

Weight Weight::pow(double p) const {
    if (!(p > 0.0)) throw domainError("weight power needs p > 0");
    if (kind_ == Kind::Grid) {
        std::vector<double> s(samples_.size());
        for (size_t i = 0; i < s.size(); ++i) s[i] = std::pow(samples_[i], p);
        return grid(std::move(s), singular_, std::pow(floor_, p));
    }
    Weight w = *this;
    for (auto& f : w.factors_) {
        switch (f.type) {
        case Factor::Type::Constant: f.c = std::pow(f.c, p); break;
        case Factor::Type::Power: f.gamma *= p; break;
        case Factor::Type::ExpDist: f.s *= p; break;
        case Factor::Type::Indicator: break;
        }
    }
    return w;
}

Weight Weight::scaled(double c) const {
    if (kind_ == Kind::Grid) {
        std::vector<double> s(samples_);
        for (double& v : s) v *= c;
        return grid(std::move(s), singular_, floor_ * c);
    }
    return *this * constant(c);
}

// ---------------------------------------------------------------- pointwise

double Weight::gridValue(double theta) const {
    size_t n = samples_.size();
    double u = normalizeAngle(theta) / kTwoPi * static_cast<double>(n);
    size_t j = static_cast<size_t>(u) % n;
    double f = u - std::floor(u);
    return (1.0 - f) * samples_[j] + f * samples_[(j + 1) % n];
}

double Weight::value(double theta) const {
    if (kind_ == Kind::Grid) return gridValue(theta);
    double v = 1.0;
    for (const auto& f : factors_) {
        switch (f.type) {
        case Factor::Type::Constant: v *= f.c; break;
        case Factor::Type::Power: {
            double d = chord(theta, f.a);
            v *= d == 0.0 ? (f.gamma > 0.0 ? 0.0 : (f.gamma == 0.0 ? 1.0 : kInf)) : std::pow(d, f.gamma);
            break;
        }
        case Factor::Type::ExpDist: {
            double d = f.set.distance(theta);
            v *= d == 0.0 ? 0.0 : std::exp(-f.s / std::pow(d, f.gamma));
            break;
        }
        case Factor::Type::Indicator: v *= f.set.contains(theta) ? 1.0 : 0.0; break;
        }
    }
    return v;
}

double Weight::logValue(double theta) const {
    if (kind_ == Kind::Grid) {
        double v = gridValue(theta);
        return v > 0.0 ? std::log(v) : -kInf;
    }
    double l = 0.0;
    for (const auto& f : factors_) {
        switch (f.type) {
        case Factor::Type::Constant: l += f.c > 0.0 ? std::log(f.c) : -kInf; break;
        case Factor::Type::Power: {
            double d = chord(theta, f.a);
            if (f.gamma != 0.0) l += d == 0.0 ? (f.gamma > 0.0 ? -kInf : kInf) : f.gamma * std::log(d);
            break;
        }
        case Factor::Type::ExpDist: {
            double d = f.set.distance(theta);
            l += d == 0.0 ? -kInf : -f.s / std::pow(d, f.gamma);
            break;
        }
        case Factor::Type::Indicator: l += f.set.contains(theta) ? 0.0 : -kInf; break;
        }
    }
    return l;
}

double Weight::logInvPlus(double theta) const { return std::max(0.0, -logValue(theta)); }

bool Weight::identicallyZero() const {
    if (kind_ == Kind::Grid)
        return std::all_of(samples_.begin(), samples_.end(), [](double v) { return v == 0.0; });
    for (const auto& f : factors_) {
        if (f.type == Factor::Type::Constant && f.c == 0.0) return true;
        if (f.type == Factor::Type::Indicator && !f.set.cantor && f.set.interior().empty()) return true;
    }
    return false;
}

double Weight::smoothFactorsValue(double theta) const {
    double v = 1.0;
    for (const auto& f : factors_) {
        if (f.type == Factor::Type::Indicator && f.set.cantor) continue;
        Weight single;
        single.factors_ = {f};
        v *= single.value(theta);
    }
    return v;
}

const FatCantor* Weight::cantorFactor() const {
    for (const auto& f : factors_)
        if (f.type == Factor::Type::Indicator && f.set.cantor) return &*f.set.cantor;
    return nullptr;
}

std::vector<double> Weight::breakpoints() const {
    std::vector<double> pts;
    if (kind_ == Kind::Grid) return singular_;
    for (const auto& f : factors_) {
        if (f.type == Factor::Type::Power) pts.push_back(f.a);
        if (f.type == Factor::Type::ExpDist || f.type == Factor::Type::Indicator) {
            auto c = f.set.contactPoints();
            pts.insert(pts.end(), c.begin(), c.end());
            if (f.set.cantor) {
                pts.push_back(f.set.cantor->start());
                pts.push_back(normalizeAngle(f.set.cantor->start() + f.set.cantor->length()));
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// ---------------------------------------------------------------- log integral

LogIntegral Weight::logIntegral(const Arc& I, const LogIntegralOptions& opt) const {
    if (!(I.length > 0.0)) throw domainError("logIntegral needs a nonempty arc");
    LogIntegral total;
    for (const auto& seg : toSegments(I)) {
        LogIntegral part = kind_ == Kind::Grid ? gridLogIntegral(seg, opt) : presetLogIntegral(seg, opt);
        if (part.divergent()) return part;
        if (part.inconclusive()) total.status = LogIntegral::Status::Inconclusive, total.note = part.note;
        total.value += part.value;
        total.error += part.error;
        total.depth = std::max(total.depth, part.depth);
    }
    return total;
}

LogIntegral Weight::presetLogIntegral(const Segment& seg, const LogIntegralOptions& opt) const {
    const double lo = seg.first, hi = seg.second, len = hi - lo;
    LogIntegral out;
    auto divergent = [&](const std::string& why) {
        LogIntegral d;
        d.status = LogIntegral::Status::Divergent;
        d.value = -kInf;
        d.note = why;
        return d;
    };
    for (const auto& f : factors_) {
        switch (f.type) {
        case Factor::Type::Constant:
            if (f.c <= 0.0) return divergent("weight vanishes identically");
            out.value += std::log(f.c) * len / kTwoPi;
            break;
        case Factor::Type::Power:
            out.value += f.gamma * (clausen2(lo - f.a) - clausen2(hi - f.a)) / kTwoPi;
            out.error += 1e-15 * std::fabs(f.gamma) * len;
            break;
        case Factor::Type::ExpDist: {
            ArcSet here = ArcSet::fromSegments({seg});
            if (here.intersect(f.set.interior()).length() > 0.0)
                return divergent("weight vanishes on a subarc of E");
            std::vector<double> cuts{lo, hi};
            auto contacts = f.set.contactPoints();
            bool touches = false;
            for (double p : contacts) {
                for (double q : liftsNear(p, lo, hi, 0.0)) {
                    touches = true;
                    cuts.push_back(q);
                }
            }
            if (touches && f.gamma >= 1.0) return divergent("interval touches E where log w ~ -s/dist^gamma, gamma >= 1");
            if (opt.statusOnly) break;
            // nearest-point switches between consecutive contact points
            if (contacts.size() > 1) {
                for (size_t i = 0; i < contacts.size(); ++i) {
                    double a = contacts[i];
                    double b = i + 1 < contacts.size() ? contacts[i + 1] : contacts[0] + kTwoPi;
                    for (double q : liftsNear(0.5 * (a + b), lo, hi, 0.0)) cuts.push_back(q);
                }
            }
            std::sort(cuts.begin(), cuts.end());
            auto integrand = [&](double t) { return -f.s / std::pow(f.set.distance(t), f.gamma); };
            for (size_t i = 0; i + 1 < cuts.size(); ++i) {
                if (!(cuts[i + 1] > cuts[i])) continue;
                Quad q = detail::tanhSinh(integrand, cuts[i], cuts[i + 1], opt.tol);
                out.value += q.value / kTwoPi;
                out.error += q.error / kTwoPi;
            }
            break;
        }
        case Factor::Type::Indicator: {
            ArcSet here = ArcSet::fromSegments({seg});
            ArcSet uncovered = here.minus(f.set.interior());
            if (!f.set.cantor) {
                if (uncovered.length() > 1e-14) return divergent("interval leaves the support of the indicator");
                break;
            }
            for (const auto& piece : uncovered.segments()) {
                for (auto w : localWindows(*f.set.cantor, piece)) {
                    if (f.set.cantor->complementOverlaps(w.first, w.second))
                        return divergent("interval meets a gap of the Cantor support");
                }
            }
            break;
        }
        }
    }
    return out;
}

LogIntegral Weight::gridLogIntegral(const Segment& seg, const LogIntegralOptions& opt) const {
    const double lo = seg.first, hi = seg.second;
    const size_t n = samples_.size();
    const double h = kTwoPi / static_cast<double>(n);
    const double win = 2.0 * h;
    LogIntegral out;

    std::vector<Segment> excised;
    std::vector<double> centers;
    for (double p : singular_) {
        for (double q : liftsNear(p, lo, hi, win)) {
            centers.push_back(q);
            excised.push_back({std::max(lo, q - win), std::min(hi, q + win)});
        }
    }
    ArcSet ex = ArcSet::fromSegments(excised);
    ArcSet regular = ArcSet::fromSegments({seg}).minus(ex);

    auto sampleAt = [&](long j) { return samples_[static_cast<size_t>(((j % static_cast<long>(n)) + n) % n)]; };

    // exact integral of log of the interpolant on the regular part
    for (const auto& piece : regular.segments()) {
        long j0 = static_cast<long>(std::floor(piece.first / h));
        for (long j = j0;; ++j) {
            double c0 = j * h, c1 = (j + 1) * h;
            double x0 = std::max(piece.first, c0), x1 = std::min(piece.second, c1);
            if (x0 >= piece.second) break;
            if (!(x1 > x0)) continue;
            double s0 = sampleAt(j), s1 = sampleAt(j + 1);
            double va = s0 + (s1 - s0) * (x0 - c0) / h;
            double vb = s0 + (s1 - s0) * (x1 - c0) / h;
            if (s0 == 0.0 && s1 == 0.0) {
                out.status = LogIntegral::Status::Divergent;
                out.value = -kInf;
                out.note = "grid weight vanishes on a full cell";
                return out;
            }
            if (va <= 0.0 || vb <= 0.0) {
                out.status = LogIntegral::Status::Inconclusive;
                out.note = "undeclared zero sample";
                out.depth = opt.maxDepth;
                continue;
            }
            out.value += (x1 - x0) * meanLogLinear(va, vb) / kTwoPi;
        }
    }

    // model the excised windows from the two nearest samples outside each window
    for (double q : centers) {
        for (int side : {-1, 1}) {
            double wa = side > 0 ? q : q - win, wb = side > 0 ? q + win : q;
            double a = std::max(lo, wa), b = std::min(hi, wb);
            if (!(b > a)) continue;
            double ta = side > 0 ? a - q : q - b;
            double tb = side > 0 ? b - q : q - a;
            double w1 = gridValue(q + side * 2.0 * h), w2 = gridValue(q + side * 3.0 * h);
            if (w1 == 0.0 || w2 == 0.0) {
                out.status = LogIntegral::Status::Inconclusive;
                out.note = "zero samples next to a declared singular point";
                out.depth = opt.maxDepth;
                continue;
            }
            double L1 = -std::log(w1), L2 = -std::log(w2);
            if (L1 <= 0.0 || L2 <= 0.0 || L1 <= L2) {
                // benign: w does not decay toward the point at grid resolution
                double va = std::max(gridValue(a), 1e-300), vb = std::max(gridValue(b), 1e-300);
                double v = (b - a) * meanLogLinear(va, vb) / kTwoPi;
                out.value += v;
                out.error += 0.05 * std::fabs(v);
                continue;
            }
            double gamma = std::log(L1 / L2) / std::log(1.5);
            double C = L1 * std::pow(2.0 * h, gamma);
            auto piece = [&](double t0, double t1) {
                if (std::fabs(gamma - 1.0) < 1e-12) return C * std::log(t1 / t0);
                return C * (std::pow(t1, 1.0 - gamma) - std::pow(t0, 1.0 - gamma)) / (1.0 - gamma);
            };
            if (ta > 0.0) {
                double v = piece(ta, tb) / kTwoPi;
                out.value -= v;
                out.error += 0.05 * v;
                continue;
            }
            double running = 0.0;
            int level = 0;
            for (; level < opt.maxDepth; ++level) {
                running += piece(tb * std::ldexp(1.0, -level - 1), tb * std::ldexp(1.0, -level)) / kTwoPi;
                if (running > opt.divergenceThreshold) {
                    LogIntegral d;
                    d.status = LogIntegral::Status::Divergent;
                    d.value = -kInf;
                    d.depth = level + 1;
                    d.note = "running integral below -T_div near a declared singular point";
                    return d;
                }
            }
            out.depth = std::max(out.depth, level);
            if (gamma < 1.0 - 1e-9) {
                double tail = C * std::pow(tb * std::ldexp(1.0, -opt.maxDepth), 1.0 - gamma) / (1.0 - gamma) / kTwoPi;
                out.value -= running + tail;
                out.error += tail + 0.05 * (running + tail);
            } else {
                out.status = LogIntegral::Status::Inconclusive;
                out.note = "no convergence certificate and no divergence at maximum depth";
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- integrals of w

Quad Weight::integrateSegment(const Segment& seg) const {
    Quad out;
    if (identicallyZero()) return out;
    if (kind_ == Kind::Grid) {
        const size_t n = samples_.size();
        const double h = kTwoPi / static_cast<double>(n);
        long j0 = static_cast<long>(std::floor(seg.first / h));
        for (long j = j0;; ++j) {
            double c0 = j * h;
            double x0 = std::max(seg.first, c0), x1 = std::min(seg.second, c0 + h);
            if (x0 >= seg.second) break;
            if (!(x1 > x0)) continue;
            out.value += (x1 - x0) * 0.5 * (gridValue(x0) + gridValue(x1)) / kTwoPi;
        }
        return out;
    }
    // support pieces from arc-type indicators and expdist arcs
    ArcSet support = ArcSet::fromSegments({seg});
    const FatCantor* cantor = nullptr;
    for (const auto& f : factors_) {
        if (f.type == Factor::Type::Indicator) {
            if (f.set.cantor) {
                cantor = &*f.set.cantor;
            } else {
                support = support.intersect(f.set.interior());
            }
        }
        if (f.type == Factor::Type::ExpDist) support = support.minus(f.set.interior());
    }
    auto bps = breakpoints();
    for (const auto& piece : support.segments()) {
        if (cantor) {
            for (const auto& cell : cantor->cells(std::min(cantor->depth(), 14))) {
                for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
                    double a = std::max(piece.first, cell.lo + shift), b = std::min(piece.second, cell.hi + shift);
                    if (!(b > a)) continue;
                    double la = cantor->local(a);
                    double mass = cantor->lengthIn(la, la + (b - a));
                    double g0 = smoothFactorsValue(a), g1 = smoothFactorsValue(b);
                    double gm = smoothFactorsValue(0.5 * (a + b));
                    out.value += mass * gm / kTwoPi;
                    out.error += mass * std::fabs(g1 - g0) / kTwoPi;
                }
            }
            continue;
        }
        std::vector<double> cuts{piece.first, piece.second};
        for (double p : bps)
            for (double q : liftsNear(p, piece.first, piece.second, 0.0)) cuts.push_back(q);
        std::sort(cuts.begin(), cuts.end());
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            Quad q = detail::tanhSinh([&](double t) { return value(t); }, cuts[i], cuts[i + 1], 1e-12);
            out.value += q.value / kTwoPi;
            out.error += q.error / kTwoPi;
        }
    }
    return out;
}

Quad Weight::integrate(const Arc& I) const {
    Quad total;
    for (const auto& seg : toSegments(I)) {
        Quad q = integrateSegment(seg);
        total.value += q.value;
        total.error += q.error;
    }
    return total;
}

Quad Weight::integrate(const ArcSet& set) const {
    Quad total;
    for (const auto& seg : set.segments()) {
        Quad q = integrateSegment(seg);
        total.value += q.value;
        total.error += q.error;
    }
    return total;
}

ArcSet Weight::zeroSetIn(const Arc& I) const {
    ArcSet here(std::vector<Arc>{I});
    if (identicallyZero()) return here;
    if (kind_ == Kind::Grid) {
        const size_t n = samples_.size();
        std::vector<Arc> zeros;
        for (size_t j = 0; j < n; ++j)
            if (samples_[j] == 0.0 && samples_[(j + 1) % n] == 0.0)
                zeros.emplace_back(kTwoPi * j / n, kTwoPi / n);
        return here.intersect(ArcSet(zeros));
    }
    ArcSet zero;
    for (const auto& f : factors_) {
        if (f.type == Factor::Type::ExpDist) zero = zero.unite(here.intersect(f.set.interior()));
        if (f.type == Factor::Type::Indicator) {
            ArcSet outside = here.minus(f.set.interior());
            if (!f.set.cantor) {
                zero = zero.unite(outside);
                continue;
            }
            std::vector<Segment> gaps;
            for (const auto& seg : outside.segments()) {
                auto g = f.set.cantor->gapsIn(seg.first, seg.second, 16);
                gaps.insert(gaps.end(), g.begin(), g.end());
            }
            zero = zero.unite(ArcSet::fromSegments(gaps).intersect(outside));
        }
    }
    return zero;
}

// ---------------------------------------------------------------- Fourier coefficients

std::vector<std::complex<double>> Weight::fourier(int kmin, int kmax) const {
    if (kmax < kmin) throw domainError("fourier: empty index range");
    std::vector<std::complex<double>> out(kmax - kmin + 1);
    if (identicallyZero()) return out;
    if (kind_ == Kind::Grid) {
        const size_t n = samples_.size();
        std::vector<std::complex<double>> in(samples_.begin(), samples_.end());
        auto F = detail::dft(in);
        for (int k = kmin; k <= kmax; ++k) {
            long idx = ((k % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
            out[k - kmin] = F[idx] / static_cast<double>(n);
        }
        return out;
    }
    double cst = 1.0;
    int smooth = 0;
    std::vector<const Factor*> indicators;
    for (const auto& f : factors_) {
        if (f.type == Factor::Type::Constant) cst *= f.c;
        else if (f.type == Factor::Type::Indicator) indicators.push_back(&f);
        else ++smooth;
    }
    if (smooth == 0 && indicators.size() <= 1) {
        if (indicators.empty()) {
            if (kmin <= 0 && kmax >= 0) out[-kmin] = cst;
            return out;
        }
        const ClosedSet& E = indicators[0]->set;
        if (E.cantor && E.arcs.empty()) {
            for (int k = kmin; k <= kmax; ++k) out[k - kmin] = cst * E.cantor->fourier(k);
            return out;
        }
        if (!E.cantor) {
            for (const auto& s : E.interior().segments()) {
                for (int k = kmin; k <= kmax; ++k) {
                    std::complex<double> v;
                    if (k == 0) v = (s.second - s.first) / kTwoPi;
                    else
                        v = (std::polar(1.0, -k * s.first) - std::polar(1.0, -k * s.second)) /
                            (std::complex<double>(0.0, kTwoPi * k));
                    out[k - kmin] += cst * v;
                }
            }
            return out;
        }
    }
    // general case: Gauss-Legendre panels over the support, graded at power singularities
    ArcSet support = ArcSet::full();
    const FatCantor* cantor = nullptr;
    for (const auto* f : indicators) {
        if (f->set.cantor) cantor = &*f->set.cantor;
        else support = support.intersect(f->set.interior());
    }
    for (const auto& f : factors_)
        if (f.type == Factor::Type::ExpDist) support = support.minus(f.set.interior());
    std::vector<double> powerPts;
    for (const auto& f : factors_)
        if (f.type == Factor::Type::Power && f.gamma != std::round(f.gamma)) powerPts.push_back(f.a);
    auto bps = breakpoints();
    auto isPower = [&](double x) {
        for (double p : powerPts)
            if (chord(x, p) < 1e-14) return true;
        return false;
    };
    if (cantor) {
        for (const auto& cell : cantor->cells(std::min(cantor->depth(), 12))) {
            double mid = 0.5 * (cell.lo + cell.hi);
            if (!support.contains(mid)) continue;
            double g = smoothFactorsValue(mid) * cst;
            for (int k = kmin; k <= kmax; ++k) {
                std::complex<double> v = k == 0 ? std::complex<double>(cell.hi - cell.lo, 0.0)
                                                : (std::polar(1.0, -k * cell.lo) - std::polar(1.0, -k * cell.hi)) /
                                                      std::complex<double>(0.0, static_cast<double>(k));
                out[k - kmin] += g * (cell.mass / (cell.hi - cell.lo)) * v / kTwoPi;
            }
        }
        return out;
    }
    auto f = [&](double t) { return value(t); };
    for (const auto& piece : support.segments()) {
        std::vector<double> cuts{piece.first, piece.second};
        for (double p : bps)
            for (double q : liftsNear(p, piece.first, piece.second, 0.0)) cuts.push_back(q);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            detail::accumulateFourier(f, cuts[i], cuts[i + 1], kmin, kmax, out, isPower(cuts[i]), isPower(cuts[i + 1]));
    }
    return out;
}

std::string Weight::describe() const {
    std::ostringstream os;
    if (kind_ == Kind::Grid) {
        os << "grid(" << samples_.size() << " samples, " << singular_.size() << " singular points)";
        return os.str();
    }
    for (size_t i = 0; i < factors_.size(); ++i) {
        const auto& f = factors_[i];
        if (i) os << " * ";
        switch (f.type) {
        case Factor::Type::Constant: os << f.c; break;
        case Factor::Type::Power: os << "|x-e^{i" << f.a << "}|^" << f.gamma; break;
        case Factor::Type::ExpDist: os << "exp(-" << f.s << "/dist(x,E)^" << f.gamma << ")"; break;
        case Factor::Type::Indicator: os << (f.set.cantor ? "1_{fat Cantor}" : "1_E"); break;
        }
    }
    return os.str();
}

} // namespace disclab
