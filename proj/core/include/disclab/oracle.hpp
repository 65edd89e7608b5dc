#pragma once

#include <string>
#include <vector>

#include "disclab/core_set.hpp"
#include "disclab/measure.hpp"
#include "disclab/seqspace.hpp"
#include "disclab/transforms.hpp"

namespace disclab {

struct OracleVerdict {
    Verdict verdict = Verdict::Inconclusive;
    Mass massOnCore, massOffCore;
    CoreReport core;
    std::vector<Atom> atomsOnCore, atomsOffCore;
    std::string reason;
};

// Yes iff nu(core(w)) <= tol with the error bar clear of tol. nu must be positive and
// singular. Mass sitting in inconclusive cells is added to both error bars.
OracleVerdict isCyclic(const CircleMeasure& nu, const Weight& w, int K, double tol = 1e-9);
// Yes iff nu(T \ core(w)) <= tol with clearance.
OracleVerdict hasPermanence(const CircleMeasure& nu, const Weight& w, int K, double tol = 1e-9);

struct InvariantSubspaceClass {
    CircleMeasure restricted;            // nu restricted to core(w)
    Mass restrictedMass;
    std::vector<Atom> boundaryAtoms;     // within 1e-12 of the core boundary; left out
    size_t zeroCount = 0;
    CoreReport core;
};

InvariantSubspaceClass classifyInvariantSubspace(const std::vector<Complex>& zeros, const CircleMeasure& nu,
                                                 const Weight& w, int K);

struct HbReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Arc> witness;
    CoreReport core;
    std::optional<CarrierReport> carrier;
    Mass singularOffCore;
    std::string reason;
};

HbReport hbExistence(const BSymbol& b, int K);
HbReport hbDensity(const BSymbol& b, int K, double tol = 1e-9);

struct TheoremCReport {
    enum class Status { Consistent, Violation, Inconclusive };
    Status status = Status::Inconclusive;
    RsdVerdict rsd;
    CarrierReport carrier;
};

std::string toString(TheoremCReport::Status s);

// (a) rsd verdict for the Cauchy coefficients of g dm up to N, (b) whether core(|g|) is
// a carrier of |g|. Only (a) = rsd with (b) = no is a violation.
TheoremCReport theoremCCheck(const CircleMeasure& g, int N, int K, double tol = 1e-9);

} // namespace disclab
