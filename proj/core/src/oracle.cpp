#include "disclab/oracle.hpp"

#include <future>

#include "disclab/errors.hpp"

namespace disclab {

namespace {

struct Split {
    Mass on, off;
    CoreReport core;
    std::vector<Atom> atomsOn, atomsOff;
};

Split splitByCore(const CircleMeasure& nu, const Weight& w, int K) {
    if (nu.hasDensity()) throw inputError("RejectDensity", "the measure must be singular");
    if (!nu.isPositive()) throw domainError("the measure must be positive");
    Split s;
    s.core = coreSet(w, K);
    Mass on = nu.mass(s.core.core);
    double unresolved = 0.0;
    if (!s.core.inconclusive.empty()) {
        std::vector<Segment> segs;
        for (const auto& a : s.core.inconclusive)
            for (const auto& seg : toSegments(a)) segs.push_back(seg);
        Mass m = nu.mass(ArcSet::fromSegments(segs));
        unresolved = m.value + m.error;
    }
    double total = nu.totalMass();
    s.on = {on.value, on.error + unresolved};
    s.off = {std::max(0.0, total - on.value), on.error + unresolved};
    for (const auto& a : nu.atoms()) (s.core.core.contains(a.angle) ? s.atomsOn : s.atomsOff).push_back(a);
    return s;
}

Verdict decide(const Mass& m, double tol) {
    if (m.value + m.error <= tol) return Verdict::Yes;
    if (m.value - m.error > tol) return Verdict::No;
    return Verdict::Inconclusive;
}

OracleVerdict fromSplit(Split s, Verdict v, const char* what) {
    OracleVerdict r;
    r.verdict = v;
    r.massOnCore = s.on;
    r.massOffCore = s.off;
    r.core = std::move(s.core);
    r.atomsOnCore = std::move(s.atomsOn);
    r.atomsOffCore = std::move(s.atomsOff);
    if (v == Verdict::Inconclusive) r.reason = std::string(what) + " lies within its error bar of the tolerance";
    return r;
}

} // namespace

OracleVerdict isCyclic(const CircleMeasure& nu, const Weight& w, int K, double tol) {
    auto s = splitByCore(nu, w, K);
    Verdict v = decide(s.on, tol);
    return fromSplit(std::move(s), v, "mass on core");
}

OracleVerdict hasPermanence(const CircleMeasure& nu, const Weight& w, int K, double tol) {
    auto s = splitByCore(nu, w, K);
    Verdict v = decide(s.off, tol);
    return fromSplit(std::move(s), v, "mass off core");
}

InvariantSubspaceClass classifyInvariantSubspace(const std::vector<Complex>& zeros, const CircleMeasure& nu,
                                                 const Weight& w, int K) {
    if (nu.hasDensity()) throw inputError("RejectDensity", "the measure must be singular");
    for (Complex a : zeros) diskPoint(a);
    InvariantSubspaceClass c;
    c.zeroCount = zeros.size();
    c.core = coreSet(w, K);
    for (const auto& a : nu.atoms())
        if (c.core.core.distanceToBoundary(a.angle) <= 1e-12) c.boundaryAtoms.push_back(a);
    c.restricted = nu.restrictedTo(c.core.core);
    c.restrictedMass = c.restricted.mass(ArcSet::full());
    return c;
}

HbReport hbExistence(const BSymbol& b, int K) {
    b.validate();
    HbReport r;
    if (!b.zeros.empty()) {
        r.verdict = Verdict::Yes;
        r.reason = "b vanishes at a declared zero";
        return r;
    }
    r.core = coreSet(b.delta, K);
    const auto& arcs = r.core.core.arcs();
    if (!arcs.empty()) {
        auto best = std::max_element(arcs.begin(), arcs.end(),
                                     [](const Arc& x, const Arc& y) { return x.length < y.length; });
        r.verdict = Verdict::Yes;
        r.witness = *best;
        r.reason = "log Delta_b is integrable on the witness arc";
    } else if (r.core.inconclusive.empty()) {
        r.verdict = Verdict::No;
        r.reason = b.delta.identicallyZero() ? "Delta_b vanishes identically"
                                             : "every cell at this resolution has divergent log-integral";
    } else {
        r.reason = "core is empty but some cells are undecided";
    }
    return r;
}

HbReport hbDensity(const BSymbol& b, int K, double tol) {
    b.validate();
    HbReport r;
    r.core = coreSet(b.delta, K);
    Mass on = b.singular.mass(r.core.core);
    r.singularOffCore = {std::max(0.0, b.singular.totalMass() - on.value), on.error};
    if (b.delta.identicallyZero()) {
        if (b.singular.isZero()) {
            r.reason = "Delta_b vanishes identically and nu = 0; the carrier condition is vacuous";
            return r;
        }
    }
    r.carrier = isCoreCarrier(b.delta, r.core, tol);
    Verdict off = decide(r.singularOffCore, tol);
    Verdict car = r.carrier->verdict;
    if (car == Verdict::Yes && off == Verdict::Yes) {
        r.verdict = Verdict::Yes;
    } else if (car == Verdict::No || off == Verdict::No) {
        r.verdict = Verdict::No;
        r.reason = car == Verdict::No ? "core(Delta_b) is not a carrier for Delta_b"
                                      : "the singular measure charges the complement of core(Delta_b)";
    } else {
        r.reason = "a sub-verdict is inconclusive";
    }
    return r;
}

std::string toString(TheoremCReport::Status s) {
    switch (s) {
    case TheoremCReport::Status::Consistent: return "CONSISTENT";
    case TheoremCReport::Status::Violation: return "VIOLATION";
    case TheoremCReport::Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

TheoremCReport theoremCCheck(const CircleMeasure& g, int N, int K, double tol) {
    if (!g.hasDensity() || !g.atoms().empty() || !g.selfSimilarParts().empty())
        throw inputError("DensityOnly", "theoremCCheck takes a measure with a density and nothing else");
    const Density& d = *g.density();
    Weight modulus = Weight::constant(0.0);
    if (d.modulus) {
        modulus = *d.modulus;
    } else {
        std::vector<double> abs(d.grid.size());
        for (size_t i = 0; i < abs.size(); ++i) abs[i] = std::abs(d.grid[i]);
        modulus = Weight::grid(abs, {});
    }
    auto fa = std::async(std::launch::async, [&] { return rsdClassify(cauchyCoefficients(g, N)); });
    TheoremCReport r;
    r.carrier = isCoreCarrier(modulus, K, tol);
    r.rsd = fa.get();
    bool rsd = r.rsd.verdict == RsdVerdict::Kind::Rsd;
    bool notRsd = r.rsd.verdict == RsdVerdict::Kind::NotRsd;
    if (r.carrier.verdict == Verdict::Yes || notRsd)
        r.status = TheoremCReport::Status::Consistent;
    else if (rsd && r.carrier.verdict == Verdict::No)
        r.status = TheoremCReport::Status::Violation;
    return r;
}

} // namespace disclab
