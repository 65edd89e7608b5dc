#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "disclab/moments.hpp"
#include "disclab/radial.hpp"
#include "disclab/series.hpp"

namespace disclab {

// DegreeMismatch if deg f exceeds the last index of M.
double h2Norm(const MomentSequence& M, const TaylorSeries& f);       // (sum M_n |f_n|^2)^{1/2}
double h2StarNorm(const MomentSequence& M, const TaylorSeries& f);   // (sum |f_n|^2 / M_n)^{1/2}
double h1StarNorm(const MomentSequence& M, const TaylorSeries& f);   // sup |f_n| / M_n

// sum f_n conj(g_n)
Complex pairing(const TaylorSeries& f, const TaylorSeries& g);

struct ToeplitzResult {
    TaylorSeries series;
    // ||h||_1 times the largest of the last deg h coefficients of f, when some output
    // index needs coefficients of f past its degree; 0 otherwise.
    double truncationBound = 0.0;
};

// (T f)_n = sum_k conj(h_k) f_{n+k}, n = 0..nOut.
ToeplitzResult toeplitzCoanalytic(const TaylorSeries& h, const TaylorSeries& f, size_t nOut);

struct IndexRange {
    size_t lo = 0, hi = 0;
};

struct RsdVerdict {
    enum class Kind { Rsd, NotRsd, Inconclusive };
    Kind verdict = Kind::Inconclusive;
    double fittedC = 0.0;
    double fittedP = 0.0;       // power-law part of the fit
    double cLower = 0.0;        // fittedC minus confidence standard errors
    IndexRange tailWindow;
    size_t usedPoints = 0;
    double noiseFloor = 0.0;
};

std::string toString(RsdVerdict::Kind k);

struct RsdOptions {
    std::optional<IndexRange> window;  // default: top half of the degrees
    double cMin = 0.05;
    size_t minWindow = 8;
    double noiseFloor = 0.0;           // added to the floor implied by f.conditionEstimate
    double confidence = 3.0;           // standard errors subtracted from c before comparing
};

// The running tail maximum T_n = max_{m >= n} |f_m| over the window is fitted by
// -log T_n = a + c sqrt(n) + p log n, leaving out the last quarter of the window.
// Verdict rsd iff c - confidence * se(c) >= cMin; fittedC = max(c, 0). Coefficients at
// or below the noise floor are skipped, and a window with none left is rsd with
// fittedC = inf.
RsdVerdict rsdClassify(const TaylorSeries& f, const RsdOptions& opt = {});

// |int |f|^2 G(1-|z|) dA/pi - sum M_n |f_n|^2| / sum, with the area integral done by
// an exact angular rule and composite Gauss-Legendre in 1 - |z|.
double normIdentityCheck(const RadialWeight& G, const TaylorSeries& f);

struct EmbeddingReport {
    bool supported = true;     // false for p <= 1/2
    size_t samples = 0;
    double bound = 0.0;        // (sum_n M_n^{2p-1})^{1/2}
    double maxRatioFirst = 0.0;   // h2Star(M, f) / bound
    double maxRatioSecond = 0.0;  // h1Star(M^{1/2}, f) / h2Star(M, f)
    bool holds = false;
    std::string note;
};

// Random f of degree size(M) - 1 normalized to h1Star(M^p, f) = 1.
EmbeddingReport embeddingCheck(const MomentSequence& M, double p, size_t samples, std::uint64_t seed = 1);

} // namespace disclab
