#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "disclab/profile.hpp"
#include "disclab/series.hpp"

namespace disclab {

struct BoundaryHit {
    Complex point;
    int part = 0;
};

// Bounded planar domain for walk-on-spheres.
class Domain {
public:
    virtual ~Domain() = default;
    virtual bool contains(Complex z) const = 0;
    virtual double distance(Complex z) const = 0;
    virtual BoundaryHit nearest(Complex z) const = 0;
    virtual double diameter() const = 0;
    virtual std::string describe() const = 0;
};

// Parts: 0 = the whole circle.
class DiskDomain : public Domain {
public:
    explicit DiskDomain(Complex center = 0.0, double radius = 1.0);
    bool contains(Complex z) const override;
    double distance(Complex z) const override;
    BoundaryHit nearest(Complex z) const override;
    double diameter() const override { return 2.0 * r_; }
    std::string describe() const override;

private:
    Complex c_;
    double r_;
};

// Parts: 0 left, 1 right, 2 bottom, 3 top.
class RectangleDomain : public Domain {
public:
    RectangleDomain(double x0, double x1, double y0, double y1);
    bool contains(Complex z) const override;
    double distance(Complex z) const override;
    BoundaryHit nearest(Complex z) const override;
    double diameter() const override;
    std::string describe() const override;

    double x0() const { return x0_; }
    double x1() const { return x1_; }
    double y0() const { return y0_; }
    double y1() const { return y1_; }

private:
    double x0_, x1_, y0_, y1_;
};

// W(p, I) = {a < x < b, 0 < y < min(p(x - a), p(b - x))}. Parts: 0 the base I, 1 the
// upper curve, held as an x-monotone polyline with a bounding-box tree.
class HatDomain : public Domain {
public:
    HatDomain(const Profile& p, double a, double b, size_t uniformSegments = 8192);
    ~HatDomain() override;
    bool contains(Complex z) const override;
    double distance(Complex z) const override;
    BoundaryHit nearest(Complex z) const override;
    double diameter() const override { return b_ - a_; }
    std::string describe() const override;

    double upper(double x) const;
    size_t vertexCount() const;

private:
    struct Tree;
    Profile p_;
    double a_, b_;
    std::unique_ptr<Tree> tree_;
};

struct WalkOptions {
    size_t walks = 100000;
    std::uint64_t seed = 42;
    double captureFactor = 1e-6;   // capture layer = factor * diameter
    size_t maxSteps = 100000;
    int workers = 0;               // 0: workerCount()
};

struct WalkSample {
    std::vector<BoundaryHit> hits;   // one per converged walk
    size_t walks = 0;
    size_t nonConverged = 0;
    std::string stepRule;
};

// Walks from z0; worker i draws from mt19937_64 seeded with (seed, i). NonConvergedWalks
// if more than 0.1% of walks exhaust the step budget.
WalkSample runWalks(const Domain& D, Complex z0, const WalkOptions& opt);

struct HarmonicMeasureEstimate {
    double value = 0.0;
    double stdError = 0.0;
    size_t walks = 0;
    size_t nonConverged = 0;
    std::string stepRule;
};

HarmonicMeasureEstimate estimateFrom(const WalkSample& s, const std::function<bool(const BoundaryHit&)>& piece);
HarmonicMeasureEstimate harmonicMeasureMC(const Domain& D, Complex z0,
                                          const std::function<bool(const BoundaryHit&)>& piece,
                                          const WalkOptions& opt);

// Harmonic measure of the left side of (x0, x1) x (y0, y1) by separation of variables.
double rectangleLeftSideSeries(const RectangleDomain& R, Complex z0);

} // namespace disclab
