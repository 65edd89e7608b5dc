#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "disclab/weight.hpp"

namespace disclab::detail {

// Handles integrable endpoint singularities; f must be finite inside (a, b).
template <class F>
Quad tanhSinh(F f, double a, double b, double tol = 1e-12) {
    if (!(b > a)) return {};
    static thread_local boost::math::quadrature::tanh_sinh<double> ts(12);
    double err = 0.0, l1 = 0.0;
    auto guarded = [&](double x) {
        double v = f(x);
        return std::isfinite(v) ? v : 0.0;
    };
    if (b - a < 1e-13 * std::max({1.0, std::fabs(a), std::fabs(b)})) return {guarded(0.5 * (a + b)) * (b - a), 0.0};
    double c = 0.5 * (a + b), r = 0.5 * (b - a);
    auto unit = [&](double t) { return r * guarded(c + r * t); };
    double v = ts.integrate(unit, -1.0, 1.0, tol, &err, &l1);
    return {v, std::fabs(err) * std::max(1.0, l1) + 1e-15 * l1};
}

template <class F>
auto gaussKronrod(F f, double a, double b, double tol = 1e-12, unsigned depth = 18, double* err = nullptr) {
    double e = 0.0;
    auto v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, depth, tol, &e);
    if (err) *err = e;
    return v;
}

// Fixed 20-point Gauss-Legendre on [a, b].
template <class F>
auto gauss20(F f, double a, double b) {
    return boost::math::quadrature::gauss<double, 20>::integrate(f, a, b);
}

// Accumulate int_a^b f(theta) e^{-ik theta} dtheta/(2pi) for k in [kmin, kmax] into out
// using composite 20-point Gauss-Legendre; panels are refined geometrically toward
// endpoints flagged as singular.
void accumulateFourier(const std::function<double(double)>& f, double a, double b, int kmin, int kmax,
                       std::vector<std::complex<double>>& out, bool gradeLeft, bool gradeRight);

// Discrete Fourier transform, forward sign e^{-2 pi i jk/N}, unnormalized.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in);

// Composite Gauss-Legendre over geometric panels in u on (umin, 1]; used for radial integrals.
double geometricGauss(const std::function<double(double)>& f, double umin, double ratio, int order);

} // namespace disclab::detail

namespace disclab::detail {

struct ComplexQuad {
    std::complex<double> value;
    double error = 0.0;
};

template <class F>
ComplexQuad tanhSinhComplex(F f, double a, double b, double tol = 1e-12) {
    if (!(b > a)) return {};
    static thread_local boost::math::quadrature::tanh_sinh<double> ts(12);
    auto guarded = [&](double x) {
        std::complex<double> v = f(x);
        return std::isfinite(v.real()) && std::isfinite(v.imag()) ? v : std::complex<double>{};
    };
    if (b - a < 1e-13 * std::max({1.0, std::fabs(a), std::fabs(b)})) return {guarded(0.5 * (a + b)) * (b - a), 0.0};
    double err = 0.0, l1 = 0.0;
    double c = 0.5 * (a + b), r = 0.5 * (b - a);
    auto unit = [&](double t) { return r * guarded(c + r * t); };
    std::complex<double> v = ts.integrate(unit, -1.0, 1.0, tol, &err, &l1);
    return {v, std::fabs(err) * std::max(1.0, l1) + 1e-15 * l1};
}

} // namespace disclab::detail
