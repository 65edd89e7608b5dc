#pragma once

#include <vector>

namespace disclab {

// Increasing profile p on [0, inf) with p(0) = 0: scale * x^q, or log-log linear
// interpolation through knots (t_n, p_n) with t_n decreasing to 0.
class Profile {
public:
    enum class Kind { Power, Knots };

    static Profile power(double q, double scale = 1.0);
    static Profile knots(std::vector<double> ts, std::vector<double> ps);

    Kind kind() const { return kind_; }
    double q() const { return q_; }
    double scale() const { return scale_; }
    const std::vector<double>& ts() const { return ts_; }
    const std::vector<double>& ps() const { return ps_; }

    double operator()(double x) const;
    // Knot abscissae (empty for a power profile).
    const std::vector<double>& breakpoints() const { return ts_; }

private:
    Kind kind_ = Kind::Power;
    double q_ = 2.0, scale_ = 1.0;
    std::vector<double> ts_, ps_;
};

} // namespace disclab
