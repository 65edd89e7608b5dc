#include "disclab/measure.hpp"

#include <algorithm>
#include <cmath>

#include "disclab/errors.hpp"
#include "numeric.hpp"

namespace disclab {

namespace {

std::complex<double> expi(double x) { return std::polar(1.0, x); }

double offsetOf(const SelfSimilar& s, int j) {
    return s.arity == 1 ? 0.0 : j * (1.0 - s.ratio) / (s.arity - 1);
}

// Fraction of the closed arc [lo, lo + len] covered by the open set.
double coveredFraction(const ArcSet& set, double lo, double len) {
    if (set.isFull()) return 1.0;
    if (set.empty()) return 0.0;
    double inside = ArcSet(std::vector<Arc>{Arc(lo, len)}).intersect(set).length();
    return std::clamp(inside / len, 0.0, 1.0);
}

void massRec(const SelfSimilar& s, const ArcSet& target, double lo, double len, double mass, int level,
             int depth, Mass& out) {
    double frac = coveredFraction(target, lo, len);
    if (frac >= 1.0 - 1e-13) {
        out.value += mass;
        return;
    }
    if (frac <= 1e-13) return;
    if (level >= depth) {
        out.value += frac * mass;
        out.error += mass * std::max(frac, 1.0 - frac);
        return;
    }
    double child = len * s.ratio;
    for (int j = 0; j < s.arity; ++j)
        massRec(s, target, lo + len * offsetOf(s, j), child, mass / s.arity, level + 1, depth, out);
}

struct WeightedCell {
    double lo, len, mass;
    bool exact;  // fully inside: use the exact transform of the sub-measure
};

void windowCells(const SelfSimilar& s, const ArcSet& window, double lo, double len, double mass, int level,
                 int depth, std::vector<WeightedCell>& out) {
    double frac = coveredFraction(window, lo, len);
    if (frac >= 1.0 - 1e-13) {
        out.push_back({lo, len, mass, true});
        return;
    }
    if (frac <= 1e-13) return;
    if (level >= depth) {
        out.push_back({lo, len, frac * mass, false});
        return;
    }
    double child = len * s.ratio;
    for (int j = 0; j < s.arity; ++j)
        windowCells(s, window, lo + len * offsetOf(s, j), child, mass / s.arity, level + 1, depth, out);
}

} // namespace

std::complex<double> Density::value(double theta) const {
    if (modulus) return modulus->value(theta) * expi(phase * theta);
    size_t n = grid.size();
    double u = normalizeAngle(theta) / kTwoPi * static_cast<double>(n);
    size_t j = static_cast<size_t>(u) % n;
    double f = u - std::floor(u);
    return (1.0 - f) * grid[j] + f * grid[(j + 1) % n];
}

double Density::absValue(double theta) const {
    if (modulus) return modulus->value(theta);
    return std::abs(value(theta));
}

std::complex<double> selfSimilarFourier(const SelfSimilar& s, int k) {
    std::complex<double> prod = s.mass * expi(-k * s.base.start);
    double scale = s.base.length;
    for (int n = 0; n < 200; ++n) {
        double xi = k * scale;
        if (std::fabs(xi) < 1e-17) break;
        std::complex<double> phi = 0.0;
        for (int j = 0; j < s.arity; ++j) phi += expi(-xi * offsetOf(s, j));
        prod *= phi / static_cast<double>(s.arity);
        scale *= s.ratio;
    }
    return prod;
}

std::vector<SelfSimilarCell> selfSimilarCells(const SelfSimilar& s, int level) {
    std::vector<SelfSimilarCell> cells{{s.base.start, s.base.length, s.mass}};
    for (int l = 0; l < level; ++l) {
        std::vector<SelfSimilarCell> next;
        next.reserve(cells.size() * s.arity);
        for (const auto& c : cells)
            for (int j = 0; j < s.arity; ++j)
                next.push_back({c.lo + c.length * offsetOf(s, j), c.length * s.ratio, c.mass / s.arity});
        cells.swap(next);
    }
    return cells;
}

CircleMeasure CircleMeasure::dirac(double angle, double mass) { return fromAtoms({{angle, mass}}); }

CircleMeasure CircleMeasure::fromAtoms(const std::vector<Atom>& atoms) {
    CircleMeasure m;
    for (auto a : atoms) {
        if (!(a.mass > 0.0) || !std::isfinite(a.mass)) throw domainError("atom masses must be finite and > 0");
        a.angle = normalizeAngle(a.angle);
        m.atoms_.push_back(a);
    }
    return m;
}

CircleMeasure CircleMeasure::lebesgue(double mass) { return fromDensity(Weight::constant(mass)); }

CircleMeasure CircleMeasure::fromDensity(const Weight& modulus, int phase) {
    CircleMeasure m;
    Density d;
    d.modulus = modulus;
    d.phase = phase;
    m.density_ = d;
    return m;
}

CircleMeasure CircleMeasure::fromGrid(std::vector<std::complex<double>> samples) {
    if (samples.size() < 8) throw domainError("density grid needs at least 8 samples");
    for (auto v : samples)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw domainError("density grid must be finite");
    CircleMeasure m;
    Density d;
    d.grid = std::move(samples);
    m.density_ = d;
    return m;
}

CircleMeasure CircleMeasure::selfSimilar(const SelfSimilar& s) {
    if (!(s.ratio > 0.0 && s.ratio < 0.5)) throw domainError("self-similar ratio must lie in (0, 1/2)");
    if (s.arity < 2) throw domainError("self-similar arity must be >= 2");
    if (s.ratio * s.arity > 1.0) throw domainError("self-similar children overlap");
    if (!(s.mass > 0.0)) throw domainError("self-similar mass must be > 0");
    CircleMeasure m;
    m.parts_.push_back(s);
    return m;
}

CircleMeasure CircleMeasure::operator+(const CircleMeasure& other) const {
    CircleMeasure m = *this;
    m.atoms_.insert(m.atoms_.end(), other.atoms_.begin(), other.atoms_.end());
    m.parts_.insert(m.parts_.end(), other.parts_.begin(), other.parts_.end());
    if (other.density_) {
        if (!m.density_) {
            m.density_ = other.density_;
        } else {
            const Density &a = *m.density_, &b = *other.density_;
            if (a.modulus && b.modulus && a.phase == 0 && b.phase == 0 && a.modulus->kind() == Weight::Kind::Grid &&
                b.modulus->kind() == Weight::Kind::Grid && a.modulus->samples().size() == b.modulus->samples().size()) {
                std::vector<double> s(a.modulus->samples());
                for (size_t i = 0; i < s.size(); ++i) s[i] += b.modulus->samples()[i];
                m.density_->modulus = Weight::grid(s, {});
            } else if (a.isGrid() && b.isGrid() && a.grid.size() == b.grid.size()) {
                for (size_t i = 0; i < a.grid.size(); ++i) m.density_->grid[i] += b.grid[i];
            } else {
                throw domainError("adding two densities is supported for equal-size grids only");
            }
        }
    }
    return m;
}

CircleMeasure CircleMeasure::scaled(double c) const {
    if (!(c > 0.0)) throw domainError("measure scale must be > 0");
    CircleMeasure m = *this;
    for (auto& a : m.atoms_) a.mass *= c;
    for (auto& p : m.parts_) p.mass *= c;
    if (m.density_) {
        if (m.density_->modulus) m.density_->modulus = m.density_->modulus->scaled(c);
        for (auto& v : m.density_->grid) v *= c;
    }
    return m;
}

bool CircleMeasure::isZero() const {
    if (!atoms_.empty() || !parts_.empty()) return false;
    if (!density_) return true;
    if (density_->modulus) return density_->modulus->identicallyZero();
    return std::all_of(density_->grid.begin(), density_->grid.end(), [](auto v) { return v == 0.0; });
}

bool CircleMeasure::isPositive() const {
    if (!density_) return true;
    if (density_->modulus) return density_->phase == 0;
    return std::all_of(density_->grid.begin(), density_->grid.end(),
                       [](auto v) { return v.imag() == 0.0 && v.real() >= 0.0; });
}

double CircleMeasure::totalMass() const { return mass(ArcSet::full()).value; }

Mass CircleMeasure::mass(const ArcSet& set, int depth, double boundaryEps) const {
    if (depth < 0) throw domainError("mass recursion depth must be >= 0");
    Mass out;
    for (const auto& a : atoms_) {
        if (!set.isFull() && set.distanceToBoundary(a.angle) <= boundaryEps) {
            out.error += a.mass;
            if (set.contains(a.angle)) out.value += a.mass;
            continue;
        }
        if (set.contains(a.angle)) out.value += a.mass;
    }
    for (const auto& p : parts_) {
        ArcSet target = p.window ? set.intersect(*p.window) : set;
        massRec(p, target, p.base.start, p.base.length, p.mass, 0, depth, out);
    }
    if (density_) {
        if (density_->modulus) {
            Quad q = density_->modulus->integrate(set);
            out.value += q.value;
            out.error += q.error;
        } else {
            const auto& g = density_->grid;
            size_t n = g.size();
            double h = kTwoPi / static_cast<double>(n);
            for (const auto& seg : set.segments()) {
                long j0 = static_cast<long>(std::floor(seg.first / h));
                for (long j = j0;; ++j) {
                    double x0 = std::max(seg.first, j * h), x1 = std::min(seg.second, (j + 1) * h);
                    if (x0 >= seg.second) break;
                    if (!(x1 > x0)) continue;
                    out.value += (x1 - x0) * 0.5 * (density_->absValue(x0) + density_->absValue(x1)) / kTwoPi;
                }
            }
        }
    }
    return out;
}

std::vector<std::complex<double>> CircleMeasure::fourier(int kmin, int kmax) const {
    if (kmax < kmin) throw domainError("fourier: empty index range");
    std::vector<std::complex<double>> out(kmax - kmin + 1);
    for (const auto& a : atoms_)
        for (int k = kmin; k <= kmax; ++k) out[k - kmin] += a.mass * expi(-k * a.angle);
    for (const auto& p : parts_) {
        if (!p.window) {
            for (int k = kmin; k <= kmax; ++k) out[k - kmin] += selfSimilarFourier(p, k);
            continue;
        }
        std::vector<WeightedCell> cells;
        windowCells(p, *p.window, p.base.start, p.base.length, p.mass, 0, 16, cells);
        for (const auto& c : cells) {
            SelfSimilar sub = p;
            sub.base = Arc(c.lo, c.len, true);
            sub.mass = c.mass;
            for (int k = kmin; k <= kmax; ++k)
                out[k - kmin] += c.exact ? selfSimilarFourier(sub, k) : c.mass * expi(-k * (c.lo + 0.5 * c.len));
        }
    }
    if (density_) {
        if (density_->modulus) {
            auto w = density_->modulus->fourier(kmin - density_->phase, kmax - density_->phase);
            for (int k = kmin; k <= kmax; ++k) out[k - kmin] += w[k - kmin];
        } else {
            auto F = detail::dft(density_->grid);
            long n = static_cast<long>(F.size());
            for (int k = kmin; k <= kmax; ++k) out[k - kmin] += F[((k % n) + n) % n] / static_cast<double>(n);
        }
    }
    return out;
}

CircleMeasure CircleMeasure::restrictedTo(const ArcSet& set) const {
    CircleMeasure m;
    for (const auto& a : atoms_)
        if (set.contains(a.angle)) m.atoms_.push_back(a);
    for (auto p : parts_) {
        p.window = p.window ? p.window->intersect(set) : set;
        if (!p.window->empty()) m.parts_.push_back(p);
    }
    if (density_) {
        Density d = *density_;
        if (d.modulus) {
            ClosedSet closure;
            for (const auto& a : set.arcs()) closure.arcs.emplace_back(a.start, a.length, true);
            d.modulus = *d.modulus * Weight::indicator(closure);
        } else {
            size_t n = d.grid.size();
            for (size_t j = 0; j < n; ++j)
                if (!set.contains(kTwoPi * j / n)) d.grid[j] = 0.0;
        }
        m.density_ = d;
    }
    return m;
}

std::vector<Arc> CircleMeasure::singularSupport() const {
    std::vector<Arc> out;
    for (const auto& a : atoms_) out.emplace_back(a.angle, 0.0, true);
    for (const auto& p : parts_) out.emplace_back(p.base.start, p.base.length, true);
    return out;
}

} // namespace disclab
