#include "report.hpp"

namespace disclab::cli {

namespace {

Json atoms(const std::vector<Atom>& as) {
    Json j = Json::array();
    for (const auto& a : as) j.push_back({{"angle", a.angle}, {"mass", a.mass}});
    return j;
}

Json arcs(const std::vector<Arc>& as) {
    Json j = Json::array();
    for (const auto& a : as) j.push_back({{"start", a.start}, {"length", a.length}});
    return j;
}

} // namespace

Json toJson(const Mass& m) { return {{"value", m.value}, {"error", m.error}}; }

Json toJson(const CoreReport& r) {
    return {{"core", io::toJson(r.core)},
            {"core_measure", r.core.measure()},
            {"singular_points", r.singularPoints},
            {"resolution_level", r.resolutionLevel},
            {"inconclusive", arcs(r.inconclusive)},
            {"rule", r.rule}};
}

Json toJson(const ResidualReport& r) {
    return {{"residual", io::toJson(r.residual)},
            {"residual_measure", r.residual.measure()},
            {"points", r.points},
            {"carrier", io::toJson(r.carrier)}};
}

Json toJson(const CarrierReport& r) {
    return {{"verdict", toString(r.verdict)},
            {"off_core", {{"value", r.offCore.value}, {"error", r.offCore.error}}},
            {"inconclusive_mass", r.inconclusiveMass},
            {"residual", toJson(r.residual)},
            {"reason", r.reason}};
}

Json toJson(const OracleVerdict& v) {
    return {{"verdict", toString(v.verdict)},      {"mass_on_core", toJson(v.massOnCore)},
            {"mass_off_core", toJson(v.massOffCore)}, {"atoms_on_core", atoms(v.atomsOnCore)},
            {"atoms_off_core", atoms(v.atomsOffCore)}, {"reason", v.reason},
            {"core", toJson(v.core)}};
}

Json toJson(const InvariantSubspaceClass& c) {
    return {{"restricted", io::toJson(c.restricted)},
            {"restricted_mass", toJson(c.restrictedMass)},
            {"boundary_atoms", atoms(c.boundaryAtoms)},
            {"zero_count", c.zeroCount},
            {"core", toJson(c.core)}};
}

Json toJson(const HbReport& r) {
    Json j = {{"verdict", toString(r.verdict)},
              {"singular_off_core", toJson(r.singularOffCore)},
              {"reason", r.reason},
              {"core", toJson(r.core)}};
    if (r.witness) j["witness"] = {{"start", r.witness->start}, {"length", r.witness->length}};
    if (r.carrier) j["carrier"] = toJson(*r.carrier);
    return j;
}

Json toJson(const RsdVerdict& v) {
    return {{"verdict", toString(v.verdict)},
            {"fitted_c", v.fittedC},
            {"fitted_p", v.fittedP},
            {"c_lower", v.cLower},
            {"tail_window", {v.tailWindow.lo, v.tailWindow.hi}},
            {"used_points", v.usedPoints},
            {"noise_floor", v.noiseFloor}};
}

Json toJson(const TheoremCReport& r) {
    return {{"status", toString(r.status)}, {"rsd", toJson(r.rsd)}, {"carrier", toJson(r.carrier)}};
}

Json toJson(const EmbeddingReport& r) {
    return {{"supported", r.supported},
            {"samples", r.samples},
            {"bound", r.bound},
            {"max_ratio_first", r.maxRatioFirst},
            {"max_ratio_second", r.maxRatioSecond},
            {"holds", r.holds},
            {"note", r.note}};
}

Json toJson(const ObstacleFunction& f, size_t checkSamples) {
    Json cells = Json::array();
    double worst = 0.0;
    for (const auto& c : f.cells) {
        worst = std::max(worst, std::fabs(c.achieved - c.target));
        cells.push_back({{"index", c.index},
                         {"target", c.target},
                         {"target_error", c.targetError},
                         {"achieved", c.achieved},
                         {"point", c.point}});
    }
    auto chk = f.checkObstacle(checkSamples);
    return {{"level", f.level},
            {"pieces", f.pieces.size()},
            {"integral", f.integral()},
            {"max_cell_mass_error", worst},
            {"check", {{"samples", chk.samples}, {"violations", chk.violations}, {"max_excess", chk.maxExcess}}},
            {"cells", cells}};
}

Json toJson(const WeakStarRow& r) {
    return {{"level", r.level}, {"max_error", r.maxError}, {"worst_k", r.worstK}, {"mass_error", r.massError}};
}

Json toJson(const WitnessRow& r) {
    return {{"level", r.level}, {"z", io::toJson(r.z)}, {"h", io::toJson(r.h)}, {"S", io::toJson(r.S)}, {"error", r.error}};
}

Json toJson(const WizardProfile& W, const HatIntegralBound& hb) {
    Json bound = {{"terms", hb.terms},
                  {"raw_terms", hb.rawTerms},
                  {"partial_sums", hb.partialSums},
                  {"total", hb.total},
                  {"tail_bound", hb.tailBound},
                  {"monotone_from", hb.monotoneFrom},
                  {"max_raw_mismatch", hb.maxRawMismatch},
                  {"finite", hb.finite}};
    return {{"a", W.a},
            {"b", W.b},
            {"n0", W.n0},
            {"A", W.A},
            {"gamma_sum", W.gammaSum},
            {"certificate",
             {{"head", W.certificate.head},
              {"tail_bound", W.certificate.tailBound},
              {"head_terms", W.certificate.headTerms}}},
            {"sum_delta_error", W.sumDeltaError()},
            {"exponent_identity_error", W.exponentIdentityError(40)},
            {"hat_integral_bound", bound},
            {"profile", io::toJson(W.p)}};
}

} // namespace disclab::cli
