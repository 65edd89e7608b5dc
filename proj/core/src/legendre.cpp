#include "disclab/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "disclab/errors.hpp"

namespace disclab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void checkKnots(const std::vector<double>& xs, const std::vector<double>& ys, EnvelopeFunction::Shape shape) {
    if (xs.size() != ys.size() || xs.size() < 2) throw domainError("envelope needs at least two (x, y) knots");
    for (size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) throw domainError("envelope knots must be finite");
        if (!(xs[i] > 0.0)) throw domainError("envelope knots must lie in (0, inf)");
        if (i && !(xs[i] > xs[i - 1])) throw domainError("envelope knots must be strictly increasing in x");
    }
    double prev = 0.0;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        double s = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        double slack = 1e-12 * (1.0 + std::fabs(s));
        if (shape == EnvelopeFunction::Shape::IncreasingConcave) {
            if (!(s > 0.0)) throw domainError("increasing envelope data must have positive slopes");
            if (i && s > prev + slack) throw domainError("concave envelope data must have decreasing slopes");
        } else {
            if (s > 0.0) throw domainError("decreasing envelope data must have non-positive slopes");
            if (i && s < prev - slack) throw domainError("convex envelope data must have increasing slopes");
        }
        prev = s;
    }
}

} // namespace

EnvelopeFunction EnvelopeFunction::powerInv(double c, double beta) {
    if (!(c > 0.0) || !(beta > 0.0)) throw domainError("c/x^beta needs c > 0 and beta > 0");
    EnvelopeFunction f;
    f.kind_ = Kind::PowerInv;
    f.shape_ = Shape::DecreasingConvex;
    f.c_ = c;
    f.beta_ = beta;
    return f;
}

EnvelopeFunction EnvelopeFunction::sqrtScale(double d) {
    if (!(d > 0.0) || !std::isfinite(d)) throw domainError("d sqrt(x) needs d > 0 to increase to infinity");
    EnvelopeFunction f;
    f.kind_ = Kind::SqrtScale;
    f.shape_ = Shape::IncreasingConcave;
    f.c_ = d;
    return f;
}

EnvelopeFunction EnvelopeFunction::constant(double m0) {
    if (!std::isfinite(m0)) throw domainError("constant envelope must be finite");
    EnvelopeFunction f;
    f.kind_ = Kind::Constant;
    f.c_ = m0;
    return f;
}

EnvelopeFunction EnvelopeFunction::piecewiseLinear(std::vector<double> xs, std::vector<double> ys, Shape shape,
                                                   Tail tail) {
    checkKnots(xs, ys, shape);
    EnvelopeFunction f;
    f.kind_ = Kind::PiecewiseLinear;
    f.shape_ = shape;
    f.tail_ = tail;
    f.xs_ = std::move(xs);
    f.ys_ = std::move(ys);
    return f;
}

EnvelopeFunction EnvelopeFunction::tabulated(std::vector<double> xs, std::vector<double> ys, Shape shape, Tail tail) {
    return piecewiseLinear(std::move(xs), std::move(ys), shape, tail);
}

double EnvelopeFunction::tailB() const {
    double sN = slope(xs_.size() - 2);
    return 2.0 * sN * std::sqrt(xs_.back());
}

double EnvelopeFunction::tailA() const { return ys_.back() - tailB() * std::sqrt(xs_.back()); }

double EnvelopeFunction::operator()(double x) const {
    switch (kind_) {
    case Kind::PowerInv: return x > 0.0 ? c_ / std::pow(x, beta_) : kInf;
    case Kind::SqrtScale: return x >= 0.0 ? c_ * std::sqrt(x) : kInf;
    case Kind::Constant: return c_;
    case Kind::PiecewiseLinear: {
        size_t n = xs_.size();
        if (shape_ == Shape::DecreasingConvex) {
            if (x < xs_[0]) return kInf;
            if (x >= xs_[n - 1]) return ys_[n - 1];
        } else {
            if (x < xs_[0]) return ys_[0] + slope(0) * (x - xs_[0]);
            if (x > xs_[n - 1]) {
                if (tail_ == Tail::Linear) return ys_[n - 1] + slope(n - 2) * (x - xs_[n - 1]);
                return tailA() + tailB() * std::sqrt(x);
            }
        }
        size_t i = std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin();
        i = std::clamp<size_t>(i, 1, n - 1);
        double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
        return ys_[i - 1] + t * (ys_[i] - ys_[i - 1]);
    }
    case Kind::Conjugate: {
        // sup over the concave source: the maximizing knot is where the slopes bracket x
        size_t n = xs_.size();
        if (x > slope(0)) return leftLimit();
        double last = slope(n - 2);
        if (x < last) {
            if (tail_ == Tail::Linear) return kInf;
            double b = tailB();
            return tailA() + b * b / (4.0 * x);
        }
        // first segment whose slope is <= x; knot i maximizes y_i - x x_i
        size_t lo = 0, hi = n - 2;
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            if (slope(mid) <= x) hi = mid;
            else lo = mid + 1;
        }
        return ys_[lo] - x * xs_[lo];
    }
    }
    return kInf;
}

std::string EnvelopeFunction::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::PowerInv: os << c_ << "/x^" << beta_; break;
    case Kind::SqrtScale: os << c_ << "*sqrt(x)"; break;
    case Kind::Constant: os << "constant " << c_; break;
    case Kind::PiecewiseLinear: os << "piecewise-linear (" << xs_.size() << " knots)"; break;
    case Kind::Conjugate: os << "conjugate of piecewise-linear (" << xs_.size() << " knots)"; break;
    }
    return os.str();
}

EnvelopeFunction conjugateOf(const EnvelopeFunction& k) {
    using K = EnvelopeFunction::Kind;
    if (k.kind() == K::SqrtScale) return EnvelopeFunction::powerInv(k.c() * k.c() / 4.0, 1.0);
    if (k.kind() == K::PiecewiseLinear && k.shape() == EnvelopeFunction::Shape::IncreasingConcave) {
        EnvelopeFunction f = k;
        f.kind_ = K::Conjugate;
        f.shape_ = EnvelopeFunction::Shape::DecreasingConvex;
        return f;
    }
    throw domainError("upper envelope needs k declared increasing and concave");
}

std::vector<EnvelopeValue> upperEnvelope(const EnvelopeFunction& k, const std::vector<double>& xs) {
    EnvelopeFunction conj = conjugateOf(k);
    std::vector<EnvelopeValue> out;
    out.reserve(xs.size());
    for (double x : xs) {
        if (!(x > 0.0)) {
            out.push_back({kInf, true});
            continue;
        }
        double v = conj(x);
        out.push_back({v, std::isinf(v)});
    }
    return out;
}

std::vector<EnvelopeValue> lowerEnvelope(const EnvelopeFunction& m, const std::vector<double>& xs) {
    using K = EnvelopeFunction::Kind;
    for (double x : xs)
        if (!(x >= 0.0)) throw domainError("lower envelope is evaluated at x >= 0");
    std::vector<EnvelopeValue> out(xs.size());
    switch (m.kind()) {
    case K::PowerInv: {
        double d = dBetaC(m.beta(), m.c());
        for (size_t i = 0; i < xs.size(); ++i) out[i] = {d * std::pow(xs[i], m.beta() / (m.beta() + 1.0)), false};
        return out;
    }
    case K::Constant:
        for (auto& v : out) v = {m.c(), false};
        return out;
    case K::SqrtScale: throw domainError("lower envelope needs m declared decreasing");
    case K::PiecewiseLinear: {
        if (m.shape() != EnvelopeFunction::Shape::DecreasingConvex)
            throw domainError("lower envelope needs m declared decreasing");
        // monotone marching: the minimizing knot moves left as x grows
        const auto &kx = m.xs(), &ky = m.ys();
        std::vector<size_t> order(xs.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return xs[a] < xs[b]; });
        size_t j = kx.size() - 1;
        for (size_t idx : order) {
            double x = xs[idx];
            while (j > 0 && ky[j - 1] + x * kx[j - 1] <= ky[j] + x * kx[j]) --j;
            out[idx] = {ky[j] + x * kx[j], false};
        }
        return out;
    }
    case K::Conjugate: {
        // k^* is convex in x: affine between the slopes, A + B^2/(4x) on the sqrt tail,
        // constant beyond the first slope. The infimum sits at a break or at the tail's
        // stationary point.
        size_t n = m.xs().size();
        std::vector<double> breaks;
        for (size_t i = 0; i + 1 < n; ++i) breaks.push_back(m.slope(i));
        double last = m.slope(n - 2);
        for (size_t q = 0; q < xs.size(); ++q) {
            double y = xs[q];
            double best = m.leftLimit() + m.slope(0) * y;
            for (double s : breaks) best = std::min(best, m(s) + s * y);
            if (m.tail() == EnvelopeFunction::Tail::Sqrt && y > 0.0) {
                double b = m.tailB();
                double xs0 = b / (2.0 * std::sqrt(y));
                if (xs0 <= last) best = std::min(best, m.tailA() + b * std::sqrt(y));
            }
            out[q] = {best, false};
        }
        return out;
    }
    }
    return out;
}

double inversionCheck(const EnvelopeFunction& k, const std::vector<double>& grid) {
    auto back = lowerEnvelope(conjugateOf(k), grid);
    double err = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) err = std::max(err, std::fabs(back[i].value - k(grid[i])));
    return err;
}

double dBetaC(double beta, double c) {
    if (!(beta > 0.0) || !(c > 0.0)) throw domainError("d(beta, c) needs beta > 0 and c > 0");
    double e = 1.0 / (beta + 1.0);
    return std::pow(c, e) * (std::pow(beta, -beta * e) + std::pow(beta, e));
}

} // namespace disclab
