#pragma once

#include <string>
#include <vector>

namespace disclab {

// Function on (0, inf) entering a Legendre envelope.
//   PowerInv:  m(x) = c / x^beta        (decreasing, convex)
//   SqrtScale: k(x) = d sqrt(x)         (increasing, concave)
//   Constant:  m(x) = m0
//   PiecewiseLinear: knots (x_i, y_i). Decreasing convex data is +inf left of the
//     first knot and constant right of the last. Increasing concave data extends
//     its first segment toward 0+ and continues past the last knot either linearly
//     or along a sqrt tail k_N + b (sqrt x - sqrt x_N) with matching slope.
//   Conjugate: k^* of an increasing concave piecewise-linear function, kept exact.
class EnvelopeFunction {
public:
    enum class Kind { PowerInv, SqrtScale, Constant, PiecewiseLinear, Conjugate };
    enum class Shape { DecreasingConvex, IncreasingConcave };
    enum class Tail { Linear, Sqrt };

    static EnvelopeFunction powerInv(double c, double beta);
    static EnvelopeFunction sqrtScale(double d);
    static EnvelopeFunction constant(double m0);
    static EnvelopeFunction piecewiseLinear(std::vector<double> xs, std::vector<double> ys, Shape shape,
                                            Tail tail = Tail::Linear);
    // Samples on a log-spaced grid; handled as piecewise-linear data.
    static EnvelopeFunction tabulated(std::vector<double> xs, std::vector<double> ys, Shape shape,
                                      Tail tail = Tail::Linear);

    Kind kind() const { return kind_; }
    Shape shape() const { return shape_; }
    Tail tail() const { return tail_; }
    double c() const { return c_; }
    double beta() const { return beta_; }
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }

    // +inf where the function is infinite.
    double operator()(double x) const;

    // For concave piecewise-linear data: slope of segment i (i = 0 .. N-2).
    double slope(size_t i) const { return (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]); }
    // Value of the linear extension at 0+.
    double leftLimit() const { return ys_[0] - slope(0) * xs_[0]; }
    // sqrt tail coefficients: k(x) = tailA() + tailB() sqrt(x) for x >= last knot.
    double tailB() const;
    double tailA() const;

    std::string describe() const;

private:
    Kind kind_ = Kind::Constant;
    Shape shape_ = Shape::DecreasingConvex;
    Tail tail_ = Tail::Linear;
    double c_ = 0.0, beta_ = 1.0;
    std::vector<double> xs_, ys_;

    friend EnvelopeFunction conjugateOf(const EnvelopeFunction& k);
};

struct EnvelopeValue {
    double value = 0.0;
    bool unbounded = false;  // +inf
};

// m_*(x) = inf_{y>0} m(y) + x y.
std::vector<EnvelopeValue> lowerEnvelope(const EnvelopeFunction& m, const std::vector<double>& xs);
// k^*(x) = sup_{y>0} k(y) - x y.
std::vector<EnvelopeValue> upperEnvelope(const EnvelopeFunction& k, const std::vector<double>& xs);

// k^* as an envelope function, exactly: d sqrt(x) -> (d^2/4)/x; piecewise-linear -> Conjugate.
EnvelopeFunction conjugateOf(const EnvelopeFunction& k);

// sup over the grid of |(k^*)_*(x) - k(x)|.
double inversionCheck(const EnvelopeFunction& k, const std::vector<double>& grid);

// d(beta, c) = c^{1/(beta+1)} (beta^{-beta/(beta+1)} + beta^{1/(beta+1)}), so that the
// lower envelope of c/x^beta is d(beta, c) x^{beta/(beta+1)}.
double dBetaC(double beta, double c);

} // namespace disclab
