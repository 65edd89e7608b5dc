#include "disclab/core_set.hpp"

#include <cmath>

#include "disclab/errors.hpp"
#include "disclab/parallel.hpp"

namespace disclab {

const char* toString(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

CoreReport coreSet(const Weight& w, int K, const LogIntegralOptions& opt) {
    if (K < 3 || K > 24) throw domainError("core resolution level K must lie in [3, 24]");
    const size_t cells = size_t{1} << K;
    const double h = kTwoPi / static_cast<double>(cells);
    LogIntegralOptions o = opt;
    o.statusOnly = true;

    // index i < cells: grid A cell [i h, (i+1) h]; otherwise grid B, shifted by h/2
    std::vector<LogIntegral::Status> status(2 * cells);
    parallelFor(2 * cells, [&](size_t i) {
        double lo = (i % cells) * h + (i >= cells ? 0.5 * h : 0.0);
        status[i] = w.logIntegral(Arc(lo, h), o).status;
    });

    std::vector<Segment> finite, unsure;
    for (size_t i = 0; i < 2 * cells; ++i) {
        double lo = (i % cells) * h + (i >= cells ? 0.5 * h : 0.0);
        auto segs = toSegments(Arc(lo, h, true));
        auto& dst = status[i] == LogIntegral::Status::Finite ? finite : unsure;
        if (status[i] == LogIntegral::Status::Divergent) continue;
        dst.insert(dst.end(), segs.begin(), segs.end());
    }
    CoreReport r;
    r.resolutionLevel = K;
    r.core = ArcSet::fromSegments(finite);
    ArcSet inc = ArcSet::fromSegments(unsure).minus(r.core);
    r.inconclusive = inc.arcs();
    ArcSet rest = r.core.unite(inc).complement();
    for (const auto& a : rest.arcs()) r.singularPoints.push_back(a.midpoint());
    r.rule = w.kind() == Weight::Kind::Grid
                 ? "grid: divergent when the running log-integral drops below -T_div within the depth budget"
                 : "preset: divergence decided analytically per factor";
    return r;
}

ResidualReport residualSet(const Weight& w, const CoreReport& core) {
    ResidualReport r;
    r.core = core;
    r.carrier = w.zeroSetIn(Arc::full()).complement();
    r.residual = r.carrier.minus(core.core);
    for (double p : core.singularPoints)
        if (r.carrier.contains(p) || w.value(p) > w.floor()) r.points.push_back(p);
    return r;
}

ResidualReport residualSet(const Weight& w, int K, const LogIntegralOptions& opt) {
    return residualSet(w, coreSet(w, K, opt));
}

CarrierReport isCoreCarrier(const Weight& w, const CoreReport& core, double tol) {
    if (!(tol > 0.0)) throw domainError("carrier tolerance must be > 0");
    CarrierReport r;
    r.residual = residualSet(w, core);
    r.offCore = w.integrate(core.core.complement());
    if (!core.inconclusive.empty()) {
        r.inconclusiveMass = w.integrate(ArcSet(core.inconclusive)).value;
        if (r.inconclusiveMass > 0.0) {
            r.verdict = Verdict::Inconclusive;
            r.reason = "inconclusive arcs carry positive w mass";
            return r;
        }
    }
    if (r.offCore.value + r.offCore.error <= tol) {
        r.verdict = Verdict::Yes;
        r.reason = "w mass off core within tolerance";
    } else if (r.offCore.value - r.offCore.error > tol) {
        r.verdict = Verdict::No;
        r.reason = "w mass off core exceeds tolerance";
    } else {
        r.reason = "w mass off core within its error bar of the tolerance";
    }
    return r;
}

CarrierReport isCoreCarrier(const Weight& w, int K, double tol, const LogIntegralOptions& opt) {
    return isCoreCarrier(w, coreSet(w, K, opt), tol);
}

} // namespace disclab
