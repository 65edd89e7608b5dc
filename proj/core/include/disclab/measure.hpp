#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "disclab/circle.hpp"
#include "disclab/weight.hpp"

namespace disclab {

struct Atom {
    double angle = 0.0;
    double mass = 1.0;
};

// Self-similar measure: the base arc splits into `arity` children of relative
// length `ratio`, equally spaced with the outer ones flush to the ends, and the
// mass splits equally. ratio 1/3, arity 2 is the middle-thirds Cantor measure.
struct SelfSimilar {
    double ratio = 1.0 / 3.0;
    int arity = 2;
    Arc base = Arc::full();
    double mass = 1.0;
    // Restriction to an open set, used for nu restricted to core(w).
    std::optional<ArcSet> window;
};

struct Mass {
    double value = 0.0;
    double error = 0.0;
};

// Absolutely continuous part g dm: g = modulus * e^{i phase theta}, or a complex grid.
struct Density {
    std::optional<Weight> modulus;
    int phase = 0;
    std::vector<std::complex<double>> grid;

    bool isGrid() const { return !modulus; }
    std::complex<double> value(double theta) const;
    double absValue(double theta) const;
};

class CircleMeasure {
public:
    CircleMeasure() = default;

    static CircleMeasure dirac(double angle, double mass = 1.0);
    static CircleMeasure fromAtoms(const std::vector<Atom>& atoms);
    static CircleMeasure lebesgue(double mass = 1.0);
    static CircleMeasure fromDensity(const Weight& modulus, int phase = 0);
    static CircleMeasure fromGrid(std::vector<std::complex<double>> samples);
    static CircleMeasure selfSimilar(const SelfSimilar& s);

    CircleMeasure operator+(const CircleMeasure& other) const;
    CircleMeasure scaled(double c) const;

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::optional<Density>& density() const { return density_; }
    const std::vector<SelfSimilar>& selfSimilarParts() const { return parts_; }

    bool hasDensity() const { return density_.has_value(); }
    bool isZero() const;
    // No absolutely continuous part.
    bool isSingular() const { return !density_; }
    bool isPositive() const;

    // Declared total mass (total variation for complex densities).
    double totalMass() const;

    // nu(set) with an explicit error bar. Self-similar parts are resolved to
    // `depth`; atoms within `boundaryEps` of the set boundary go to the error bar.
    // Complex densities contribute their total variation |g| dm.
    Mass mass(const ArcSet& set, int depth = 24, double boundaryEps = 1e-12) const;

    // int e^{-ik theta} dnu for k in [kmin, kmax].
    std::vector<std::complex<double>> fourier(int kmin, int kmax) const;

    // Restriction to an open set: atoms filtered, self-similar parts windowed.
    // Densities are restricted through an indicator factor.
    CircleMeasure restrictedTo(const ArcSet& set) const;

    // Closed support pieces of the singular part, for distance checks.
    std::vector<Arc> singularSupport() const;

private:
    std::vector<Atom> atoms_;
    std::optional<Density> density_;
    std::vector<SelfSimilar> parts_;
};

// Leaf cells of a self-similar part at the given level: (lo, length, mass), global angles.
struct SelfSimilarCell {
    double lo, length, mass;
};
std::vector<SelfSimilarCell> selfSimilarCells(const SelfSimilar& s, int level);

// Exact Fourier coefficient of an unwindowed self-similar part.
std::complex<double> selfSimilarFourier(const SelfSimilar& s, int k);

} // namespace disclab
