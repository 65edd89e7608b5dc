#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "disclab/circle.hpp"

namespace disclab {

// Smith-Volterra-Cantor set on a base arc: at step j remove an open middle gap of
// length L*4^{-j} from each of the 2^{j-1} remaining intervals, for j = 1..depth.
// The limit set has measure L/2; the depth-limited set is a finite union of
// 2^depth closed intervals, nowhere dense at any resolution coarser than its gaps.
class FatCantor {
public:
    FatCantor(double start = 0.0, double length = kTwoPi, int depth = 24);

    double start() const { return start_; }
    double length() const { return length_; }
    int depth() const { return depth_; }

    // Normalized measure m(E).
    double measure() const;
    bool contains(double theta) const;
    // Lebesgue length of E inside the local window [lo, hi] (0 <= lo <= hi).
    double lengthIn(double lo, double hi) const;
    // True if (lo, hi) meets the complement of E on positive length (local coords).
    bool complementOverlaps(double lo, double hi) const;
    // Exact int_E e^{-ik theta} dm via the product structure of the construction.
    std::complex<double> fourier(int k) const;
    // Gaps of E (global angles) of step <= maxStep intersecting the arc.
    std::vector<Segment> gapsIn(double lo, double hi, int maxStep) const;
    // Level-l intervals of E, global angles, as (lo, hi, length of E inside).
    struct Cell { double lo, hi, mass; };
    std::vector<Cell> cells(int level) const;

    double local(double theta) const { return normalizeAngle(theta - start_); }

private:
    double start_, length_;
    int depth_;
    std::vector<double> ell_;   // ell_[j]: interval length at step j
    std::vector<double> gap_;   // gap_[j]: gap removed at step j (gap_[0] unused)

    double lengthInRec(double x, int j, double lo, double hi) const;
    bool complementRec(double x, int j, double lo, double hi) const;
    void gapsRec(double x, int j, double lo, double hi, int maxStep, std::vector<Segment>& out) const;
};

// Closed subset of the circle: closed arcs (length 0 encodes a point), or a fat Cantor set.
struct ClosedSet {
    std::vector<Arc> arcs;
    std::optional<FatCantor> cantor;

    static ClosedSet point(double theta) { return ClosedSet{{Arc(theta, 0.0, true)}, std::nullopt}; }
    static ClosedSet points(const std::vector<double>& thetas);
    static ClosedSet arc(const Arc& a) { return ClosedSet{{Arc(a.start, a.length, true)}, std::nullopt}; }
    static ClosedSet fatCantor(const FatCantor& c) { return ClosedSet{{}, c}; }

    bool contains(double theta) const;
    // Chord distance to the arc part; +inf for a pure Cantor set.
    double distance(double theta) const;
    // Union of the positive-length arcs (as open arcs).
    ArcSet interior() const;
    // Endpoints and isolated points, the places where dist(., E) vanishes.
    std::vector<double> contactPoints() const;
};

struct LogIntegralOptions {
    double divergenceThreshold = 1e6;  // T_div in natural-log units
    int maxDepth = 40;
    double tol = 1e-12;
    // Decide finite/divergent only; preset values are not computed.
    bool statusOnly = false;
};

struct LogIntegral {
    enum class Status { Finite, Divergent, Inconclusive };
    Status status = Status::Finite;
    double value = 0.0;   // normalized by m, i.e. int_I log w dm
    double error = 0.0;
    int depth = 0;
    std::string note;

    bool finite() const { return status == Status::Finite; }
    bool divergent() const { return status == Status::Divergent; }
    bool inconclusive() const { return status == Status::Inconclusive; }
};

struct Quad {
    double value = 0.0;
    double error = 0.0;
};

class Weight {
public:
    enum class Kind { Preset, Grid };

    struct Factor {
        enum class Type { Constant, Power, ExpDist, Indicator };
        Type type = Type::Constant;
        double c = 1.0;       // constant value
        double a = 0.0;       // power: |x - e^{ia}|^gamma
        double gamma = 1.0;   // power exponent or expdist exponent
        double s = 1.0;       // expdist scale: exp(-s / dist^gamma)
        ClosedSet set;        // expdist E or indicator E
    };

    static Weight constant(double c);
    static Weight power(double a, double gamma);
    static Weight expDist(const ClosedSet& E, double s = 1.0, double gamma = 1.0);
    static Weight indicator(const ClosedSet& E);
    static Weight grid(std::vector<double> samples, std::vector<double> singularPoints, double floor = 0.0);

    Weight operator*(const Weight& other) const;
    Weight pow(double p) const;
    Weight scaled(double c) const;

    Kind kind() const { return kind_; }
    const std::vector<Factor>& factors() const { return factors_; }
    const std::vector<double>& samples() const { return samples_; }
    const std::vector<double>& singularPoints() const { return singular_; }
    double floor() const { return floor_; }

    double value(double theta) const;
    // log w(theta); -inf where w vanishes.
    double logValue(double theta) const;
    // log+(1/w)
    double logInvPlus(double theta) const;
    bool identicallyZero() const;

    LogIntegral logIntegral(const Arc& I, const LogIntegralOptions& opt = {}) const;
    Quad integrate(const Arc& I) const;
    Quad integrate(const ArcSet& set) const;

    // Part of the arc where w vanishes on positive length (zeros of measure zero are dropped).
    ArcSet zeroSetIn(const Arc& I) const;
    // Angles where w may fail to be smooth or may vanish.
    std::vector<double> breakpoints() const;

    // int w e^{-ik theta} dm for k in [kmin, kmax].
    std::vector<std::complex<double>> fourier(int kmin, int kmax) const;

    std::string describe() const;

    // Product of all factors except fat-Cantor indicators.
    double smoothFactorsValue(double theta) const;
    // The fat Cantor set of an indicator factor, if any.
    const FatCantor* cantorFactor() const;

private:
    Kind kind_ = Kind::Preset;
    std::vector<Factor> factors_;
    std::vector<double> samples_;
    std::vector<double> singular_;
    double floor_ = 0.0;

    double gridValue(double theta) const;
    LogIntegral presetLogIntegral(const Segment& seg, const LogIntegralOptions& opt) const;
    LogIntegral gridLogIntegral(const Segment& seg, const LogIntegralOptions& opt) const;
    Quad integrateSegment(const Segment& seg) const;
};

// Clausen function Cl_2.
double clausen2(double theta);

} // namespace disclab
