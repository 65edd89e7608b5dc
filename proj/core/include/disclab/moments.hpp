#pragma once

#include <optional>
#include <string>
#include <vector>

#include "disclab/legendre.hpp"
#include "disclab/radial.hpp"
#include "disclab/weight.hpp"

namespace disclab {

// P_G(x) = int_0^1 G(1-r) r^x dr, computed as int_0^1 G(u)(1-u)^x du on geometric
// panels down to u = 1e-12. The error is the gap between 30- and 20-point rules.
Quad momentFunction(const RadialWeight& G, double x);

// Positive, non-increasing sequence kept as log(1/M_n) so deep tails do not underflow.
class MomentSequence {
public:
    enum class Provenance { FromG, Explicit };

    static MomentSequence explicitValues(const std::vector<double>& values);
    static MomentSequence explicitLogInv(std::vector<double> logInv);
    static MomentSequence fromG(std::vector<double> logInv, const RadialWeight& G);

    // exp(-c n / (log n + 1)^p) for n >= 1 and M_0 = 1. The first few terms are not
    // monotone for p > 1; they are replaced by the running minimum.
    static MomentSequence logPowerFamily(double c, double p, size_t N);

    size_t size() const { return li_.size(); }
    double operator[](size_t n) const;
    double logInv(size_t n) const { return li_[n]; }
    const std::vector<double>& logInvs() const { return li_; }
    std::vector<double> values() const;

    Provenance provenance() const { return prov_; }
    const std::optional<RadialWeight>& source() const { return source_; }

    // M^p
    MomentSequence pow(double p) const;

private:
    std::vector<double> li_;
    Provenance prov_ = Provenance::Explicit;
    std::optional<RadialWeight> source_;

    static void validate(const std::vector<double>& li);
};

// M_n = 2 P_G(2n+1), n = 0..N. The returned errors are relative.
MomentSequence momentsOfG(const RadialWeight& G, size_t N, std::vector<double>* relErrors = nullptr);

struct AdmissibilityReport {
    bool logConvexTail = false;
    size_t convexFrom = 0;        // first index from which 2 log M_n <= log M_{n+1} + log M_{n-1}
    bool sqrtDecay = false;
    double fittedD = 0.0;         // min over the tail half of log(1/M_n)/sqrt(n)
    bool tailSum = false;
    double tailEstimate = 0.0;    // partial sum plus extrapolated tail, inf if divergent
    double fittedQ = 0.0;         // log(1/M_n)/n ~ (1 + log n)^{-q}
    bool analytic = false;        // (iii) decided from the generating preset
    bool admissible = false;
    size_t upToN = 0;
    std::string note;
};

AdmissibilityReport isAdmissible(const MomentSequence& M, double dMin = 1e-3);

struct AdmissibleRow {
    size_t n;
    double PG, PGerror, M;
    bool ok;
};

struct AdmissibleToGResult {
    RadialWeight G;
    EnvelopeFunction k;
    size_t firstIndex = 0;        // data before this index were dropped
    std::vector<AdmissibleRow> table{};
    std::optional<size_t> threshold{};  // P_G(2n+1) <= M_n for every tabulated n >= threshold
    // ExpDec check: x k^*(x) >= d^2/4 on a grid near 0, d = inf of k/sqrt(x) over knots and tail
    double d = 0.0;
    double expDecProxy = 0.0;
    bool expDecHolds = false;
};

// Concave interpolant k of (2n+1, log 1/M_n) with a sqrt tail and G = exp(-k^*).
// Throws NotAdmissible unless isAdmissible says yes or override is set.
AdmissibleToGResult admissibleToG(const MomentSequence& M, bool override = false, size_t tableStride = 1);

struct GrowthFlags {
    bool expDec = false, logLogInt = false, logInt = false;
    bool analytic = false;
    std::string qualifier;
};

GrowthFlags growthClass(const RadialWeight& G);

// Decreasing F on (0, d) with F -> inf at 0 and int log F < inf.
class Majorant {
public:
    enum class Kind { InversePower, FromG, Constant };

    static Majorant inversePower(double q = 1.0, double scale = 1.0, double d = 1.0);
    static Majorant constant(double value, double d = 1.0);
    static Majorant fromG(const RadialWeight& G);

    Kind kind() const { return kind_; }
    double d() const { return d_; }
    double operator()(double t) const;
    double logF(double t) const;
    const std::optional<RadialWeight>& G() const { return G_; }
    double q() const { return q_; }
    double scale() const { return scale_; }

    struct Certificate {
        bool decreasing = false, blowsUp = false, logIntegrable = false;
        double logIntegral = 0.0;  // int_0^d log F dt
        bool ok() const { return decreasing && blowsUp && logIntegrable; }
    };
    Certificate certify() const;
    std::string describe() const;

private:
    Kind kind_ = Kind::InversePower;
    double q_ = 1.0, scale_ = 1.0, d_ = 1.0;
    std::optional<RadialWeight> G_;
};

// F(t) = log(8/t^3) + (1/2) log(1/G(t/2)); NotAMajorant unless G satisfies LogLogInt
// and the certificate passes.
Majorant majorantFromG(const RadialWeight& G);

} // namespace disclab
