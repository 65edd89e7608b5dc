#pragma once

#include <complex>
#include <vector>

namespace disclab {

using Complex = std::complex<double>;

// f_0 .. f_N of an analytic function on the disk.
struct TaylorSeries {
    std::vector<Complex> coeffs;
    // Relative error amplification of the extraction (r^{-N} * eps for taylorOf, 0 if exact).
    double conditionEstimate = 0.0;

    TaylorSeries() = default;
    explicit TaylorSeries(std::vector<Complex> c, double cond = 0.0) : coeffs(std::move(c)), conditionEstimate(cond) {}

    size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    size_t size() const { return coeffs.size(); }
    Complex operator[](size_t n) const { return n < coeffs.size() ? coeffs[n] : Complex{}; }
    Complex evaluate(Complex z) const {
        Complex acc = 0.0;
        for (size_t n = coeffs.size(); n-- > 0;) acc = acc * z + coeffs[n];
        return acc;
    }
};

} // namespace disclab
