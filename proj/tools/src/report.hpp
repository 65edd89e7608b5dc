#pragma once

#include <disclab/io.hpp>
#include <disclab/obstacle.hpp>
#include <disclab/oracle.hpp>
#include <disclab/wizard.hpp>

namespace disclab::cli {

using io::Json;

Json toJson(const Mass& m);
Json toJson(const CoreReport& r);
Json toJson(const ResidualReport& r);
Json toJson(const CarrierReport& r);
Json toJson(const OracleVerdict& v);
Json toJson(const InvariantSubspaceClass& c);
Json toJson(const HbReport& r);
Json toJson(const RsdVerdict& v);
Json toJson(const TheoremCReport& r);
Json toJson(const EmbeddingReport& r);
Json toJson(const ObstacleFunction& f, size_t checkSamples);
Json toJson(const WeakStarRow& r);
Json toJson(const WitnessRow& r);
Json toJson(const WizardProfile& W, const HatIntegralBound& hb);

} // namespace disclab::cli
