#pragma once

#include <vector>

#include "disclab/moments.hpp"
#include "disclab/profile.hpp"
#include "disclab/walk.hpp"

namespace disclab {

struct N0Certificate {
    int n0 = 0;
    double head = 0.0;       // sum_{n <= N} gamma_n
    double tailBound = 0.0;  // 2 int_0^{alpha_{N+1}} log F
    int headTerms = 0;
};

// Smallest n0 with head + tail certificate < eps and F(alpha_1) > 1.
// NotAMajorant if F fails its certificate.
int chooseN0(const Majorant& F, double eps, N0Certificate* cert = nullptr);

// Profile on I = (0, 2): alpha_n = 2^{-n-n0}, gamma_n = alpha_n log F(alpha_n),
// Delta t_{n-1} = A/n^2 + (2/pi) gamma_{n+1}, t_1 = 1, p(t_n) = alpha_n.
struct WizardProfile {
    double a = 0.0, b = 2.0;
    int n0 = 0;
    double A = 0.0;
    double gammaSum = 0.0;
    std::vector<double> alphas;   // alphas[i] = alpha_{i+1}
    std::vector<double> gammas;   // gammas[i] = gamma_{i+1}
    std::vector<double> deltas;   // deltas[i] = Delta t_{i+1}
    std::vector<double> knots;    // knots[i] = t_{i+1}
    Profile p = Profile::power(2.0);
    N0Certificate certificate;

    double alpha(int n) const { return alphas[n - 1]; }
    double gamma(int n) const { return gammas[n - 1]; }
    double deltaT(int n) const { return deltas[n - 1]; }
    double t(int n) const { return knots[n - 1]; }

    // |sum Delta t_n - 1| with the tail summed in closed form.
    double sumDeltaError() const;
    // max over 2 <= n <= nmax of |gamma_{n+1} - (pi/2) Delta t_{n-1} + (A pi/2)/n^2|.
    double exponentIdentityError(int nmax) const;
};

WizardProfile buildProfile(const Majorant& F, double eps = 0.5);

struct HatIntegralBound {
    std::vector<double> terms;        // exp(-(A pi/2) 2^{n+1+n0} / n^2), n = 2, 3, ...
    std::vector<double> rawTerms;     // F(p(t_{n+1})) exp(-2 pi Delta t_{n-1} / p(t_{n-1}))
    std::vector<double> partialSums;  // (8/pi) * running sum of terms
    double total = 0.0;
    double tailBound = 0.0;
    int monotoneFrom = 2;             // terms decrease from this n on
    double maxRawMismatch = 0.0;      // relative, raw vs simplified
    bool finite = false;
};

HatIntegralBound hatBoundaryIntegralBound(const WizardProfile& W, const Majorant& F);

// (8/pi) exp(-2 pi int_t^{Re z0} dx / p(x - a)); needs a < t < Re z0.
double beurlingAhlforsBound(const Profile& p, double a, double t, Complex z0);
// The same exponent measured with the full cross-section 2p of the symmetrized domain:
// (8/pi) exp(-(pi/2) int dx / p). Reported next to the bound for comparison.
double fullWidthAhlforsBound(const Profile& p, double a, double t, Complex z0);

struct BtRow {
    double t = 0.0;
    double estimate = 0.0, stdError = 0.0;
    double bound = 0.0;
    double fullWidthBound = 0.0;
    bool pass = false;   // estimate - 3 sigma <= bound
};

struct BtTable {
    std::vector<BtRow> rows;
    size_t walks = 0, nonConverged = 0;
    std::string stepRule;
    bool allPass = false;
};

// One set of walks on W(p, (a, b)) from z0, reused for every t.
BtTable verifyBtBound(const Profile& p, double a, double b, const std::vector<double>& ts, Complex z0,
                      const WalkOptions& opt);

} // namespace disclab
