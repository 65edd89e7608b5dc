#pragma once

#include <string>
#include <vector>

#include "disclab/circle.hpp"
#include "disclab/weight.hpp"

namespace disclab {

enum class Verdict { Yes, No, Inconclusive };
const char* toString(Verdict v);

struct CoreReport {
    ArcSet core;
    std::vector<double> singularPoints;  // midpoints of the components of the non-core set
    int resolutionLevel = 0;
    std::vector<Arc> inconclusive;
    std::string rule;                    // how divergence was decided, surfaced in reports
};

// core(w) at dyadic resolution K: union of level-K cells from two staggered grids
// whose log-integral is finite. Inconclusive cells are listed and left out of core.
CoreReport coreSet(const Weight& w, int K, const LogIntegralOptions& opt = {});

struct ResidualReport {
    ArcSet residual;               // carrier estimate minus core
    std::vector<double> points;    // detected singular points inside the carrier
    ArcSet carrier;
    CoreReport core;
};

ResidualReport residualSet(const Weight& w, int K, const LogIntegralOptions& opt = {});
ResidualReport residualSet(const Weight& w, const CoreReport& core);

struct CarrierReport {
    Verdict verdict = Verdict::Inconclusive;
    Quad offCore;               // int over T \ core of w dm
    double inconclusiveMass = 0.0;
    ResidualReport residual;
    std::string reason;
};

// Yes iff int_{T \ core} w dm <= tol with the error bar clear of tol.
CarrierReport isCoreCarrier(const Weight& w, int K, double tol, const LogIntegralOptions& opt = {});
CarrierReport isCoreCarrier(const Weight& w, const CoreReport& core, double tol);

} // namespace disclab
