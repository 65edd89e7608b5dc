#pragma once

#include <numbers>
#include <utility>
#include <vector>

namespace disclab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduce to [0, 2pi).
double normalizeAngle(double theta);

// Chord distance |e^{ia} - e^{ib}|.
double chord(double a, double b);

struct Angle {
    double theta = 0.0;
    Angle() = default;
    explicit Angle(double t) : theta(normalizeAngle(t)) {}
};

// Open arc {start + s : 0 < s < length} unless closed is set.
struct Arc {
    double start = 0.0;
    double length = kTwoPi;
    bool closed = false;

    Arc() = default;
    Arc(double s, double len, bool isClosed = false);

    static Arc full() { return Arc(0.0, kTwoPi); }
    // Counter-clockwise from a to b.
    static Arc between(double a, double b, bool isClosed = false);

    double end() const { return start + length; }
    bool isFull() const { return length >= kTwoPi; }
    bool contains(double theta) const;
    double measure() const { return length / kTwoPi; }
    double midpoint() const { return normalizeAngle(start + 0.5 * length); }
};

// A segment [lo, hi] with 0 <= lo <= hi <= 2pi, the unwrapped form used internally.
using Segment = std::pair<double, double>;

// Split an arc at the cut into at most two segments.
std::vector<Segment> toSegments(const Arc& arc);

// Finite union of disjoint open arcs. Touching arcs are merged, so the
// representation is canonical up to finitely many points.
class ArcSet {
public:
    ArcSet() = default;
    explicit ArcSet(const std::vector<Arc>& arcs);
    static ArcSet full();
    static ArcSet fromSegments(std::vector<Segment> segs);

    bool empty() const { return segs_.empty(); }
    bool isFull() const;
    double length() const;
    double measure() const { return length() / kTwoPi; }
    bool contains(double theta) const;
    // Distance (in angle) from theta to the nearest endpoint of the set.
    double distanceToBoundary(double theta) const;

    ArcSet unite(const ArcSet& other) const;
    ArcSet intersect(const ArcSet& other) const;
    ArcSet complement() const;
    ArcSet minus(const ArcSet& other) const { return intersect(other.complement()); }

    // Arcs rejoined across the cut, sorted by start.
    std::vector<Arc> arcs() const;
    const std::vector<Segment>& segments() const { return segs_; }

private:
    std::vector<Segment> segs_;
};

double arcMeasure(const ArcSet& set);

} // namespace disclab
