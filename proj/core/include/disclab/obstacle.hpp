#pragma once

#include <cstdint>
#include <vector>

#include "disclab/core_set.hpp"
#include "disclab/measure.hpp"
#include "disclab/series.hpp"
#include "disclab/weight.hpp"

namespace disclab {

struct ObstaclePiece {
    enum class Rule { Constant, LogInvW };
    Rule rule = Rule::Constant;
    double lo = 0.0, hi = 0.0;    // support [lo, hi], unwrapped inside one dyadic cell
    double value = 0.0;           // Constant
    double cap = 0.0;             // LogInvW: f = log+(1/w) where it is below cap, 0 elsewhere
    std::vector<Segment> panels;  // quadrature panels covering {f > 0}
};

struct ObstacleCell {
    int index = 0;
    double target = 0.0;       // nu(d_j)
    double targetError = 0.0;
    double achieved = 0.0;     // int over the cell of f dm
    double point = 0.0;        // the non-core point the piece is built around
};

// f_n: non-negative, bounded, 0 <= f_n <= log+(1/w), int f_n dm over each dyadic cell
// equal to nu of that cell.
struct ObstacleFunction {
    int level = 0;
    Weight w = Weight::constant(1.0);
    std::vector<ObstaclePiece> pieces;
    std::vector<ObstacleCell> cells;

    double operator()(double theta) const;
    double integral() const;
    // int e^{-ik theta} f dm for k in [kmin, kmax].
    std::vector<Complex> fourier(int kmin, int kmax) const;
    // int (x+z)/(x-z) f dm
    Complex herglotz(Complex z) const;

    struct Check {
        size_t samples = 0, violations = 0;
        double maxExcess = 0.0;   // max of f - log+(1/w), or of -f
    };
    Check checkObstacle(size_t samples, std::uint64_t seed = 1) const;
};

// Level-n dyadic construction. NoObstaclePoint if a charged cell has no non-core point
// (including when nu charges core(w)); MassMatchFailure if a cell cannot be matched
// within massTol.
ObstacleFunction buildObstacleSequence(const CircleMeasure& nu, const Weight& w, int level, int K,
                                       double massTol = 1e-10);
ObstacleFunction buildObstacleSequence(const CircleMeasure& nu, const Weight& w, int level, const CoreReport& core,
                                       double massTol = 1e-10);

struct WeakStarRow {
    int level = 0;
    double maxError = 0.0;
    int worstK = 0;
    double massError = 0.0;   // the k = 0 entry
};

// max_{|k| <= D} |int e^{-ik theta} f_n dm - int e^{-ik theta} dnu| per level.
std::vector<WeakStarRow> weakStarError(const std::vector<ObstacleFunction>& seq, const CircleMeasure& nu, int D);

struct LiftValue {
    Complex z, h;
    double bound = 0.0;   // exp(s / (1 - |z|))
    bool ok = false;
};

struct OuterLiftResult {
    double mass = 0.0;    // s = int f dm
    std::vector<LiftValue> values;
    bool interiorOk = false;
    size_t boundarySamples = 0;
    double boundaryWorst = 0.0;   // max of log|h(x)| - (1/2) log+(1/w(x)); <= 0 passes
    bool boundaryOk = false;
};

// h = exp(H_f / 2) on the given points, with both certificates.
OuterLiftResult outerLift(const ObstacleFunction& f, const std::vector<Complex>& zs, size_t boundarySamples = 4096);

struct WitnessRow {
    int level = 0;
    Complex z, h, S;
    double error = 0.0;   // |h S - 1|
};

// f_n targeting 2 nu, lifted; converges to 1/S_nu when nu does not charge core(w).
std::vector<WitnessRow> cyclicWitness(const CircleMeasure& nu, const Weight& w, const std::vector<int>& levels,
                                      const std::vector<Complex>& zs, int K = 14, double massTol = 1e-10);

} // namespace disclab
