#include "disclab/obstacle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "disclab/errors.hpp"
#include "disclab/parallel.hpp"
#include "disclab/transforms.hpp"
#include "numeric.hpp"

namespace disclab {

namespace {

constexpr int kBisections = 60;

double logInvAt(const Weight& w, double t) { return w.logInvPlus(normalizeAngle(t)); }

double pieceValue(const ObstaclePiece& p, const Weight& w, double t) {
    return p.rule == ObstaclePiece::Rule::Constant ? p.value : logInvAt(w, t);
}

// Panel boundaries on [a, b], halving toward every special point and both ends.
std::vector<double> gradedGrid(double a, double b, const std::vector<double>& special) {
    std::vector<double> pts{a, b};
    for (double s : special)
        if (s > a && s < b) pts.push_back(s);
    std::sort(pts.begin(), pts.end());
    std::vector<double> out;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        double s = pts[i], t = pts[i + 1], m = 0.5 * (s + t);
        out.push_back(s);
        out.push_back(m);
        for (double d = 0.5 * (m - s); d > 1e-15 * (1.0 + std::fabs(s)); d *= 0.5) out.push_back(s + d);
        for (double d = 0.5 * (t - m); d > 1e-15 * (1.0 + std::fabs(t)); d *= 0.5) out.push_back(t - d);
    }
    out.push_back(b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct CapPanels {
    std::vector<Segment> panels;
    std::vector<double> masses;
    double total = 0.0;
};

// Panels of [a, b] on which log+(1/w) < cap, with their masses.
CapPanels panelsBelowCap(const Weight& w, const std::vector<double>& grid, double cap) {
    std::vector<double> pts;
    pts.reserve(grid.size() + 8);
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        double u = grid[i], v = grid[i + 1];
        pts.push_back(u);
        bool bu = logInvAt(w, u) < cap, bv = logInvAt(w, v) < cap;
        if (bu == bv) continue;
        for (int it = 0; it < 80; ++it) {
            double m = 0.5 * (u + v);
            if ((logInvAt(w, m) < cap) == bu) u = m;
            else v = m;
        }
        pts.push_back(0.5 * (u + v));
    }
    pts.push_back(grid.back());
    CapPanels r;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        double u = pts[i], v = pts[i + 1];
        if (!(v > u)) continue;
        double lm = logInvAt(w, 0.5 * (u + v));
        if (!(lm < cap) || lm <= 0.0) continue;
        double m = detail::tanhSinh([&](double t) { return logInvAt(w, t); }, u, v, 1e-13).value / kTwoPi;
        r.panels.push_back({u, v});
        r.masses.push_back(m);
        r.total += m;
    }
    return r;
}

struct CellInput {
    int index;
    double lo, hi;
    Mass mass;
};

std::vector<CellInput> chargedCells(const CircleMeasure& nu, int level) {
    const int n = 1 << level;
    const double h = kTwoPi / n;
    std::vector<Mass> m(n);
    for (const auto& a : nu.atoms()) {
        int j = std::min(n - 1, static_cast<int>(normalizeAngle(a.angle) / h));
        m[j].value += a.mass;
    }
    if (!nu.selfSimilarParts().empty()) {
        CircleMeasure ss;
        for (const auto& p : nu.selfSimilarParts()) ss = ss + CircleMeasure::selfSimilar(p);
        std::vector<Segment> support;
        for (const auto& a : ss.singularSupport())
            for (const auto& s : toSegments(a)) support.push_back(s);
        for (int j = 0; j < n; ++j) {
            double lo = j * h, hi = (j + 1) * h;
            bool meets = std::any_of(support.begin(), support.end(),
                                     [&](const Segment& s) { return s.first <= hi && s.second >= lo; });
            if (!meets) continue;
            Mass part = ss.mass(ArcSet(std::vector<Arc>{Arc(lo, h)}));
            m[j].value += part.value;
            m[j].error += part.error;
        }
    }
    std::vector<CellInput> out;
    for (int j = 0; j < n; ++j)
        if (m[j].value > 0.0) out.push_back({j, j * h, (j + 1) * h, m[j]});
    return out;
}

struct CellResult {
    std::vector<ObstaclePiece> pieces;
    ObstacleCell cell;
};

CellResult buildCell(const CellInput& in, const Weight& w, const std::vector<Segment>& noncore, double h,
                     double massTol) {
    const double center = 0.5 * (in.lo + in.hi);
    // x: the non-core point of the closed cell nearest to its center.
    double bestDist = std::numeric_limits<double>::infinity(), x = center;
    Segment comp{0.0, 0.0};
    for (const auto& s : noncore) {
        double p = std::max(s.first, in.lo), q = std::min(s.second, in.hi);
        if (p > q) continue;
        double cand = std::clamp(center, p, q);
        if (std::fabs(cand - center) < bestDist) {
            bestDist = std::fabs(cand - center);
            x = cand;
            comp = s;
        }
    }
    if (!std::isfinite(bestDist))
        throw inputError("NoObstaclePoint", "dyadic cell " + std::to_string(in.index) +
                                                " carries mass but contains no point outside core(w)");
    const double a = std::max(in.lo, comp.first - 0.25 * h);
    const double b = std::min(in.hi, comp.second + 0.25 * h);

    CellResult r;
    r.cell.index = in.index;
    r.cell.target = in.mass.value;
    r.cell.targetError = in.mass.error;
    r.cell.point = x;
    const double target = in.mass.value;

    ArcSet A = w.zeroSetIn(Arc(a, b - a));
    if (A.measure() > 1e-14) {
        double value = target / A.measure();
        for (const auto& s : A.segments()) {
            double lo = s.first, hi = s.second;
            if (lo < a - 1e-12) lo += kTwoPi, hi += kTwoPi;
            ObstaclePiece p;
            p.rule = ObstaclePiece::Rule::Constant;
            p.lo = lo;
            p.hi = hi;
            p.value = value;
            p.panels = {{lo, hi}};
            r.pieces.push_back(p);
        }
        r.cell.achieved = value * A.measure();
        return r;
    }

    std::vector<double> special{x, comp.first, comp.second};
    for (double t : w.breakpoints()) {
        special.push_back(t);
        special.push_back(t + kTwoPi);
    }
    auto grid = gradedGrid(a, b, special);

    double capHi = 1.0;
    CapPanels best = panelsBelowCap(w, grid, capHi);
    while (!(best.total > target)) {
        capHi *= 2.0;
        if (capHi > 1e300)
            throw numericalFailure("MassMatchFailure", "log+(1/w) near the non-core point of cell " +
                                                           std::to_string(in.index) + " does not reach the target mass");
        best = panelsBelowCap(w, grid, capHi);
    }
    double capLo = capHi == 1.0 ? 0.0 : 0.5 * capHi;
    for (int it = 0; it < kBisections; ++it) {
        double mid = capLo > 0.0 ? std::sqrt(capLo * capHi) : 0.5 * capHi;
        CapPanels c = panelsBelowCap(w, grid, mid);
        if (c.total > target) {
            capHi = mid;
            best = std::move(c);
        } else {
            capLo = mid;
        }
    }

    // Grow B from the left end until its mass is the target.
    double cum = 0.0;
    size_t k = 0;
    while (k < best.panels.size() && cum + best.masses[k] < target) cum += best.masses[k++];
    if (k == best.panels.size()) k = best.panels.size() - 1, cum -= best.masses[k];
    auto [u, v] = best.panels[k];
    auto partial = [&](double e) {
        return detail::tanhSinh([&](double t) { return logInvAt(w, t); }, u, e, 1e-13).value / kTwoPi;
    };
    double lo = u, hi = v;
    for (int it = 0; it < kBisections; ++it) {
        double m = 0.5 * (lo + hi);
        if (cum + partial(m) < target) lo = m;
        else hi = m;
    }
    double end = 0.5 * (lo + hi);
    ObstaclePiece p;
    p.rule = ObstaclePiece::Rule::LogInvW;
    p.lo = a;
    p.hi = end;
    p.cap = capHi;
    p.panels.assign(best.panels.begin(), best.panels.begin() + static_cast<long>(k));
    if (end > u) p.panels.push_back({u, end});
    r.cell.achieved = cum + (end > u ? partial(end) : 0.0);
    if (std::fabs(r.cell.achieved - target) > massTol)
        throw numericalFailure("MassMatchFailure", "cell " + std::to_string(in.index) + " matched " +
                                                       std::to_string(r.cell.achieved) + " against " +
                                                       std::to_string(target));
    r.pieces.push_back(std::move(p));
    return r;
}

} // namespace

double ObstacleFunction::operator()(double theta) const {
    double t = normalizeAngle(theta);
    for (const auto& p : pieces) {
        for (double s : {t, t + kTwoPi}) {
            if (s < p.lo || s > p.hi) continue;
            if (p.rule == ObstaclePiece::Rule::Constant) return p.value;
            double L = w.logInvPlus(t);
            return L < p.cap ? L : 0.0;
        }
    }
    return 0.0;
}

double ObstacleFunction::integral() const {
    double s = 0.0;
    for (const auto& p : pieces)
        for (const auto& [u, v] : p.panels) {
            if (p.rule == ObstaclePiece::Rule::Constant) s += p.value * (v - u) / kTwoPi;
            else s += detail::tanhSinh([&](double t) { return logInvAt(w, t); }, u, v, 1e-13).value / kTwoPi;
        }
    return s;
}

std::vector<Complex> ObstacleFunction::fourier(int kmin, int kmax) const {
    std::vector<Complex> out(kmax - kmin + 1);
    for (int k = kmin; k <= kmax; ++k) {
        Complex s = 0.0;
        for (const auto& p : pieces)
            for (const auto& [u, v] : p.panels)
                s += detail::tanhSinhComplex(
                         [&](double t) { return pieceValue(p, w, t) * std::polar(1.0, -k * t); }, u, v, 1e-13)
                         .value;
        out[k - kmin] = s / kTwoPi;
    }
    return out;
}

Complex ObstacleFunction::herglotz(Complex z) const {
    diskPoint(z);
    Complex s = 0.0;
    for (const auto& p : pieces)
        for (const auto& [u, v] : p.panels)
            s += detail::tanhSinhComplex(
                     [&](double t) {
                         Complex x = std::polar(1.0, t);
                         return pieceValue(p, w, t) * (x + z) / (x - z);
                     },
                     u, v, 1e-13)
                     .value;
    return s / kTwoPi;
}

ObstacleFunction::Check ObstacleFunction::checkObstacle(size_t samples, std::uint64_t seed) const {
    Check c;
    if (pieces.empty()) return c;
    std::vector<double> lens;
    for (const auto& p : pieces) lens.push_back(std::max(p.hi - p.lo, 1e-300));
    std::mt19937_64 rng(seed);
    std::discrete_distribution<size_t> pick(lens.begin(), lens.end());
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (size_t i = 0; i < samples; ++i) {
        const auto& p = pieces[pick(rng)];
        double t = p.lo + U(rng) * (p.hi - p.lo);
        double L = logInvAt(w, t);
        double f = p.rule == ObstaclePiece::Rule::Constant ? p.value : (L < p.cap ? L : 0.0);
        double excess = std::max(-f, f - L);
        ++c.samples;
        if (excess > 1e-12 * (1.0 + std::fabs(L))) ++c.violations;
        if (std::isfinite(excess)) c.maxExcess = std::max(c.maxExcess, excess);
    }
    return c;
}

ObstacleFunction buildObstacleSequence(const CircleMeasure& nu, const Weight& w, int level, int K, double massTol) {
    return buildObstacleSequence(nu, w, level, coreSet(w, K), massTol);
}

ObstacleFunction buildObstacleSequence(const CircleMeasure& nu, const Weight& w, int level, const CoreReport& core,
                                       double massTol) {
    if (level < 0 || level > 24) throw domainError("level must be in [0, 24]");
    if (nu.hasDensity()) throw inputError("RejectDensity", "the target measure must be singular");
    if (!nu.isPositive()) throw domainError("the target measure must be positive");
    Mass onCore = nu.mass(core.core);
    if (onCore.value > massTol)
        throw inputError("NoObstaclePoint", "the measure charges core(w) with mass " + std::to_string(onCore.value));

    auto cells = chargedCells(nu, level);
    auto noncore = core.core.complement().segments();
    const double h = kTwoPi / (1 << level);
    std::vector<CellResult> results(cells.size());
    parallelFor(cells.size(), [&](size_t i) { results[i] = buildCell(cells[i], w, noncore, h, massTol); });

    ObstacleFunction f;
    f.level = level;
    f.w = w;
    for (auto& r : results) {
        for (auto& p : r.pieces) f.pieces.push_back(std::move(p));
        f.cells.push_back(r.cell);
    }
    return f;
}

std::vector<WeakStarRow> weakStarError(const std::vector<ObstacleFunction>& seq, const CircleMeasure& nu, int D) {
    if (nu.hasDensity()) throw inputError("RejectDensity", "the target measure must be singular");
    for (size_t i = 1; i < seq.size(); ++i)
        if (seq[i].level <= seq[i - 1].level) throw inputError("LevelsNotIncreasing", "levels must increase");
    auto target = nu.fourier(-D, D);
    std::vector<WeakStarRow> rows;
    for (const auto& f : seq) {
        auto got = f.fourier(-D, D);
        WeakStarRow r;
        r.level = f.level;
        for (int k = -D; k <= D; ++k) {
            double e = std::abs(got[k + D] - target[k + D]);
            if (e > r.maxError) r.maxError = e, r.worstK = k;
        }
        r.massError = std::abs(got[D] - target[D]);
        rows.push_back(r);
    }
    return rows;
}

OuterLiftResult outerLift(const ObstacleFunction& f, const std::vector<Complex>& zs, size_t boundarySamples) {
    OuterLiftResult r;
    r.mass = f.integral();
    r.interiorOk = true;
    for (Complex z : zs) {
        LiftValue v;
        v.z = z;
        v.h = std::exp(0.5 * f.herglotz(z));
        v.bound = std::exp(r.mass / (1.0 - std::abs(z)));
        v.ok = std::abs(v.h) <= v.bound;
        r.interiorOk = r.interiorOk && v.ok;
        r.values.push_back(v);
    }
    // Boundary values of log|h| are f/2 at points of continuity of f.
    std::vector<double> xs;
    for (size_t i = 0; i < boundarySamples; ++i) xs.push_back(kTwoPi * (i + 0.5) / boundarySamples);
    for (const auto& p : f.pieces)
        for (int j = 1; j < 8; ++j) xs.push_back(p.lo + (p.hi - p.lo) * j / 8.0);
    std::vector<double> avoid = f.w.breakpoints();
    for (const auto& p : f.pieces) avoid.push_back(p.lo), avoid.push_back(p.hi);
    r.boundaryWorst = -std::numeric_limits<double>::infinity();
    for (double x : xs) {
        bool nearBreak = std::any_of(avoid.begin(), avoid.end(), [&](double t) {
            return std::fabs(normalizeAngle(x - t + kPi) - kPi) < 1e-9;
        });
        if (nearBreak) continue;
        double L = f.w.logInvPlus(normalizeAngle(x));
        if (!std::isfinite(L)) continue;
        ++r.boundarySamples;
        r.boundaryWorst = std::max(r.boundaryWorst, 0.5 * f(x) - 0.5 * L);
    }
    r.boundaryOk = r.boundaryWorst <= 1e-12;
    return r;
}

std::vector<WitnessRow> cyclicWitness(const CircleMeasure& nu, const Weight& w, const std::vector<int>& levels,
                                      const std::vector<Complex>& zs, int K, double massTol) {
    auto core = coreSet(w, K);
    Mass on = nu.mass(core.core);
    if (on.value + on.error > massTol)
        throw inputError("NotOffCore", "the measure charges core(w); the witness needs nu(core(w)) = 0");
    std::vector<Complex> S;
    for (Complex z : zs) S.push_back(singularInner(nu, z));
    auto doubled = nu.scaled(2.0);
    std::vector<WitnessRow> rows;
    for (int level : levels) {
        auto f = buildObstacleSequence(doubled, w, level, core, massTol);
        for (size_t i = 0; i < zs.size(); ++i) {
            WitnessRow r;
            r.level = level;
            r.z = zs[i];
            r.h = std::exp(0.5 * f.herglotz(zs[i]));
            r.S = S[i];
            r.error = std::abs(r.h * r.S - 1.0);
            rows.push_back(r);
        }
    }
    return rows;
}

} // namespace disclab
