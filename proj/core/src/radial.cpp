#include "disclab/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "disclab/errors.hpp"

namespace disclab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

RadialWeight RadialWeight::t1(double beta, double c) {
    if (!(beta >= 1.0) || !(c > 0.0)) throw domainError("T1 needs beta >= 1 and c > 0");
    RadialWeight g;
    g.kind_ = Kind::T1;
    g.p_ = beta;
    g.c_ = c;
    return g;
}

RadialWeight RadialWeight::t2(double alpha, double c) {
    if (!(alpha > 0.0 && alpha < 1.0) || !(c > 0.0)) throw domainError("T2 needs alpha in (0, 1) and c > 0");
    RadialWeight g;
    g.kind_ = Kind::T2;
    g.p_ = alpha;
    g.c_ = c;
    return g;
}

RadialWeight RadialWeight::linear() { return RadialWeight{}; }

RadialWeight RadialWeight::tabulated(std::vector<double> ts, std::vector<double> Gs) {
    if (ts.size() != Gs.size() || ts.size() < 2) throw domainError("tabulated G needs at least two samples");
    RadialWeight g;
    g.kind_ = Kind::Tabulated;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i] > 0.0 && ts[i] <= 1.0)) throw domainError("tabulated G samples must lie in (0, 1]");
        if (i && !(ts[i] > ts[i - 1])) throw domainError("tabulated G abscissae must increase");
        if (!(Gs[i] > 0.0)) throw domainError("tabulated G must be positive on (0, 1]");
        if (i && !(Gs[i] >= Gs[i - 1])) throw domainError("tabulated G must be increasing");
        g.li_.push_back(-std::log(Gs[i]));
    }
    g.ts_ = std::move(ts);
    return g;
}

RadialWeight RadialWeight::conjugate(const EnvelopeFunction& k) {
    if (k.kind() != EnvelopeFunction::Kind::PiecewiseLinear ||
        k.shape() != EnvelopeFunction::Shape::IncreasingConcave || k.tail() != EnvelopeFunction::Tail::Sqrt)
        throw domainError("G = exp(-k^*) needs concave piecewise-linear k with a sqrt tail");
    RadialWeight g;
    g.kind_ = Kind::Conjugate;
    g.k_ = conjugateOf(k);
    return g;
}

double RadialWeight::logInv(double t) const {
    if (!(t > 0.0)) return kInf;
    switch (kind_) {
    case Kind::T1: return c_ / std::pow(t, p_);
    case Kind::T2: return c_ * std::exp(std::pow(t, -p_));
    case Kind::Linear: return -std::log(t);
    case Kind::Tabulated: {
        if (t <= ts_[0]) return li_[0] + std::log(ts_[0] / t);
        if (t >= ts_.back()) return li_.back();
        size_t i = std::upper_bound(ts_.begin(), ts_.end(), t) - ts_.begin();
        double u = (t - ts_[i - 1]) / (ts_[i] - ts_[i - 1]);
        return li_[i - 1] + u * (li_[i] - li_[i - 1]);
    }
    case Kind::Conjugate: return (*k_)(t);
    }
    return kInf;
}

double RadialWeight::logLogInv(double t) const {
    if (!(t > 0.0)) return kInf;
    if (kind_ == Kind::T2) return std::log(c_) + std::pow(t, -p_);
    if (kind_ == Kind::T1) return std::log(c_) - p_ * std::log(t);
    double l = logInv(t);
    return l > 0.0 ? std::log(l) : -kInf;
}

double RadialWeight::operator()(double t) const {
    if (!(t > 0.0)) return 0.0;
    double l = logInv(t);
    return std::isinf(l) ? 0.0 : std::exp(-l);
}

std::string RadialWeight::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::T1: os << "T1(beta=" << p_ << ", c=" << c_ << ")"; break;
    case Kind::T2: os << "T2(alpha=" << p_ << ", c=" << c_ << ")"; break;
    case Kind::Linear: os << "linear"; break;
    case Kind::Tabulated: os << "tabulated(" << ts_.size() << " samples)"; break;
    case Kind::Conjugate: os << "exp(-k^*), " << k_->describe(); break;
    }
    return os.str();
}

} // namespace disclab
