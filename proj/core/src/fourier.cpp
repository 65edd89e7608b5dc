#include <algorithm>
#include <mutex>

#include <fftw3.h>

#include "numeric.hpp"

namespace disclab::detail {

namespace {

struct Panel {
    double a, b;
};

std::vector<Panel> makePanels(double a, double b, double h, bool gradeLeft, bool gradeRight) {
    std::vector<Panel> panels;
    double len = b - a;
    if (!(len > 0.0)) return panels;
    int n = std::max(1, static_cast<int>(std::ceil(len / h)));
    double w = len / n;
    for (int i = 0; i < n; ++i) panels.push_back({a + i * w, a + (i + 1) * w});
    auto grade = [](Panel p, bool towardLeft) {
        std::vector<Panel> out;
        double lo = p.a, hi = p.b;
        for (int i = 0; i < 45 && (hi - lo) > 1e-15 * (1.0 + std::fabs(lo)); ++i) {
            double mid = 0.5 * (lo + hi);
            if (towardLeft) {
                out.push_back({mid, hi});
                hi = mid;
            } else {
                out.push_back({lo, mid});
                lo = mid;
            }
        }
        out.push_back({lo, hi});
        return out;
    };
    if (gradeLeft) {
        auto g = grade(panels.front(), true);
        panels.erase(panels.begin());
        panels.insert(panels.begin(), g.begin(), g.end());
    }
    if (gradeRight) {
        auto g = grade(panels.back(), false);
        panels.pop_back();
        panels.insert(panels.end(), g.begin(), g.end());
    }
    return panels;
}

} // namespace

void accumulateFourier(const std::function<double(double)>& f, double a, double b, int kmin, int kmax,
                       std::vector<std::complex<double>>& out, bool gradeLeft, bool gradeRight) {
    const auto& x = boost::math::quadrature::gauss<double, 20>::abscissa();
    const auto& w = boost::math::quadrature::gauss<double, 20>::weights();
    int kabs = std::max(std::abs(kmin), std::abs(kmax));
    double h = std::min(0.25, 2.0 / (kabs + 1.0));
    auto panels = makePanels(a, b, h, gradeLeft, gradeRight);
    std::vector<double> nodes, weights;
    for (const auto& p : panels) {
        double c = 0.5 * (p.a + p.b), r = 0.5 * (p.b - p.a);
        for (size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0.0) {
                nodes.push_back(c);
                weights.push_back(w[i] * r);
            } else {
                nodes.push_back(c - r * x[i]);
                weights.push_back(w[i] * r);
                nodes.push_back(c + r * x[i]);
                weights.push_back(w[i] * r);
            }
        }
    }
    for (size_t i = 0; i < nodes.size(); ++i) {
        double v = f(nodes[i]);
        if (!std::isfinite(v) || v == 0.0) continue;
        double scale = v * weights[i] / kTwoPi;
        std::complex<double> step = std::polar(1.0, -nodes[i]);
        std::complex<double> cur = std::polar(scale, -kmin * nodes[i]);
        for (int k = kmin; k <= kmax; ++k) {
            out[k - kmin] += cur;
            cur *= step;
            if (((k - kmin) & 63) == 63) cur = std::polar(scale, -(k + 1) * nodes[i]);
        }
    }
}

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in) {
    static std::mutex planMutex;
    int n = static_cast<int>(in.size());
    std::vector<std::complex<double>> out(n);
    if (n == 0) return out;
    std::vector<std::complex<double>> buf(in);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planMutex);
        plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(buf.data()),
                                reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planMutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

double geometricGauss(const std::function<double(double)>& f, double umin, double ratio, int order) {
    double total = 0.0;
    double lo = umin;
    while (lo < 1.0) {
        double hi = std::min(1.0, lo * ratio);
        double v = order >= 30 ? boost::math::quadrature::gauss<double, 30>::integrate(f, lo, hi)
                               : boost::math::quadrature::gauss<double, 20>::integrate(f, lo, hi);
        total += v;
        lo = hi;
    }
    return total;
}

} // namespace disclab::detail
