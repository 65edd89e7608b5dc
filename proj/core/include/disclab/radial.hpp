#pragma once

#include <optional>
#include <string>
#include <vector>

#include "disclab/legendre.hpp"

namespace disclab {

// Increasing G on [0, 1] with G(0) = 0, stored through log(1/G) for stability.
//   T1: G = exp(-c / t^beta)          T2: G = exp(-c exp(t^{-alpha}))
//   Linear: G = t                     Tabulated: log(1/G) linear in t between samples,
//                                     G linear to 0 below the first sample
//   Conjugate: G = exp(-k^*(t)) for an increasing concave envelope k
class RadialWeight {
public:
    enum class Kind { T1, T2, Linear, Tabulated, Conjugate };

    static RadialWeight t1(double beta, double c);
    static RadialWeight t2(double alpha, double c);
    static RadialWeight linear();
    static RadialWeight tabulated(std::vector<double> ts, std::vector<double> Gs);
    static RadialWeight conjugate(const EnvelopeFunction& k);

    Kind kind() const { return kind_; }
    bool isPreset() const { return kind_ == Kind::T1 || kind_ == Kind::T2 || kind_ == Kind::Linear; }
    double beta() const { return p_; }
    double alpha() const { return p_; }
    double c() const { return c_; }
    const std::vector<double>& ts() const { return ts_; }
    const std::vector<double>& logInvs() const { return li_; }
    const std::optional<EnvelopeFunction>& envelope() const { return k_; }

    double operator()(double t) const;
    // log(1/G(t)); +inf at t <= 0.
    double logInv(double t) const;
    // log log(1/G(t)), computed without forming log(1/G) when it would overflow.
    double logLogInv(double t) const;

    std::string describe() const;

private:
    Kind kind_ = Kind::Linear;
    double p_ = 1.0, c_ = 1.0;
    std::vector<double> ts_, li_;
    std::optional<EnvelopeFunction> k_;
};

} // namespace disclab
