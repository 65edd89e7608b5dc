#pragma once

#include <functional>
#include <vector>

#include "disclab/measure.hpp"
#include "disclab/series.hpp"
#include "disclab/weight.hpp"

namespace disclab {

inline constexpr double kDiskMargin = 1e-12;      // |z| <= 1 - margin
inline constexpr double kSupportExclusion = 1e-8; // reject z this close to a singular support

// Throws DomainError unless |z| <= 1 - 1e-12.
Complex diskPoint(Complex z);

// int K(x, z) dnu(x) over the measure; the kernels below.
Complex cauchyTransform(const CircleMeasure& nu, Complex z);     // 1/(1 - conj(x) z)
Complex poissonIntegral(const CircleMeasure& nu, Complex z);     // (1-|z|^2)/|x-z|^2
Complex herglotzIntegral(const CircleMeasure& nu, Complex z);    // (x+z)/(x-z)

// nu_n = int e^{-in theta} dnu, n = 0..N.
TaylorSeries cauchyCoefficients(const CircleMeasure& nu, int N);

// Herglotz integral of f dm for a real function given by samples; breakpoints are
// angles where f may be singular or discontinuous, support restricts the integral.
Complex herglotzOfFunction(const std::function<double(double)>& f, const std::vector<double>& breakpoints, Complex z,
                           const ArcSet& support = ArcSet::full());

// exp(-H_nu(z)) for nu positive with no absolutely continuous part (RejectDensity otherwise).
Complex singularInner(const CircleMeasure& nu, Complex z);

// Real boundary function phi used as a log-modulus.
class LogModulus {
public:
    enum class Kind { Constant, LogOfWeight, FromDelta };

    static LogModulus constant(double c);
    // phi = s log w
    static LogModulus logOf(const Weight& w, double s = 1.0);
    // phi = (1/2) log(1 - Delta^2)
    static LogModulus fromDelta(const Weight& delta);

    Kind kind() const { return kind_; }
    double operator()(double theta) const;
    std::vector<double> breakpoints() const;
    // int phi dm, or DivergentLogModulus.
    double mean() const;

private:
    Kind kind_ = Kind::Constant;
    double c_ = 0.0, s_ = 1.0;
    std::optional<Weight> w_;
};

// exp(int (x+z)/(x-z) phi dm).
Complex outerFromLogModulus(const LogModulus& phi, Complex z);

// prod (|a|/a)(a - z)/(1 - conj(a) z), with z for a = 0.
Complex blaschke(const std::vector<Complex>& zeros, Complex z);

// b = (H - 1)/(H + 1) for a positive probability measure nu (MassNotOne otherwise).
Complex clarkToB(const CircleMeasure& nu, Complex z);

// f_n from 2^q >= 8N samples on |z| = r; IllConditioned if r^{-N} > 1e12.
TaylorSeries taylorOf(const std::function<Complex(Complex)>& f, int N, double r);

// b = B S_nu U with |b| = 1 on the declared set, Delta_b = sqrt(1 - |b|^2) stored as a weight.
struct BSymbol {
    std::vector<Complex> zeros;
    CircleMeasure singular;
    Weight delta = Weight::constant(0.0);
    ArcSet unimodular;

    LogModulus logModulus() const { return LogModulus::fromDelta(delta); }
    Complex operator()(Complex z) const;
    void validate() const;
};

} // namespace disclab
