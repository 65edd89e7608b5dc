#include "disclab/walk.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "disclab/circle.hpp"
#include "disclab/errors.hpp"
#include "disclab/parallel.hpp"

namespace disclab {

// ---------------------------------------------------------------- disk, rectangle

DiskDomain::DiskDomain(Complex center, double radius) : c_(center), r_(radius) {
    if (!(radius > 0.0)) throw domainError("disk radius must be positive");
}

bool DiskDomain::contains(Complex z) const { return std::abs(z - c_) < r_; }

double DiskDomain::distance(Complex z) const { return std::fabs(r_ - std::abs(z - c_)); }

BoundaryHit DiskDomain::nearest(Complex z) const {
    Complex d = z - c_;
    double m = std::abs(d);
    Complex u = m > 0.0 ? d / m : Complex(1.0, 0.0);
    return {c_ + r_ * u, 0};
}

std::string DiskDomain::describe() const {
    std::ostringstream s;
    s << "disk(center=" << c_.real() << "+" << c_.imag() << "i, r=" << r_ << ")";
    return s.str();
}

RectangleDomain::RectangleDomain(double x0, double x1, double y0, double y1) : x0_(x0), x1_(x1), y0_(y0), y1_(y1) {
    if (!(x1 > x0 && y1 > y0)) throw domainError("rectangle needs x0 < x1 and y0 < y1");
}

bool RectangleDomain::contains(Complex z) const {
    return z.real() > x0_ && z.real() < x1_ && z.imag() > y0_ && z.imag() < y1_;
}

double RectangleDomain::distance(Complex z) const {
    double x = z.real(), y = z.imag();
    return std::fabs(std::min({x - x0_, x1_ - x, y - y0_, y1_ - y}));
}

BoundaryHit RectangleDomain::nearest(Complex z) const {
    double x = std::clamp(z.real(), x0_, x1_), y = std::clamp(z.imag(), y0_, y1_);
    double d[4] = {x - x0_, x1_ - x, y - y0_, y1_ - y};
    int k = static_cast<int>(std::min_element(d, d + 4) - d);
    switch (k) {
    case 0: return {{x0_, y}, 0};
    case 1: return {{x1_, y}, 1};
    case 2: return {{x, y0_}, 2};
    default: return {{x, y1_}, 3};
    }
}

double RectangleDomain::diameter() const { return std::hypot(x1_ - x0_, y1_ - y0_); }

std::string RectangleDomain::describe() const {
    std::ostringstream s;
    s << "rectangle(" << x0_ << "," << x1_ << ")x(" << y0_ << "," << y1_ << ")";
    return s.str();
}

// ---------------------------------------------------------------- hat

struct HatDomain::Tree {
    struct Node {
        double xmin, xmax, ymin, ymax;
        int left = -1, right = -1;
        size_t lo = 0, hi = 0;
    };
    std::vector<double> xs, ys;
    std::vector<Node> nodes;

    int build(size_t lo, size_t hi) {
        Node n;
        n.lo = lo;
        n.hi = hi;
        n.xmin = xs[lo];
        n.xmax = xs[hi];
        n.ymin = *std::min_element(ys.begin() + lo, ys.begin() + hi + 1);
        n.ymax = *std::max_element(ys.begin() + lo, ys.begin() + hi + 1);
        int id = static_cast<int>(nodes.size());
        nodes.push_back(n);
        if (hi - lo > 8) {
            size_t mid = lo + (hi - lo) / 2;
            int l = build(lo, mid);
            int r = build(mid, hi);
            nodes[id].left = l;
            nodes[id].right = r;
        }
        return id;
    }

    static double boxDist2(const Node& n, double x, double y) {
        double dx = std::max({n.xmin - x, 0.0, x - n.xmax});
        double dy = std::max({n.ymin - y, 0.0, y - n.ymax});
        return dx * dx + dy * dy;
    }

    // Nearest point on segment i to (x, y); returns squared distance.
    double segment(size_t i, double x, double y, Complex& at) const {
        double ax = xs[i], ay = ys[i], bx = xs[i + 1], by = ys[i + 1];
        double vx = bx - ax, vy = by - ay;
        double l2 = vx * vx + vy * vy;
        double s = l2 > 0.0 ? std::clamp(((x - ax) * vx + (y - ay) * vy) / l2, 0.0, 1.0) : 0.0;
        double px = ax + s * vx, py = ay + s * vy;
        at = {px, py};
        return (x - px) * (x - px) + (y - py) * (y - py);
    }

    double nearest(double x, double y, double best2, Complex& at) const {
        int stack[128];
        int top = 0;
        stack[top++] = 0;
        while (top > 0) {
            const Node& n = nodes[stack[--top]];
            if (boxDist2(n, x, y) >= best2) continue;
            if (n.left < 0) {
                for (size_t i = n.lo; i < n.hi; ++i) {
                    Complex c;
                    double d2 = segment(i, x, y, c);
                    if (d2 < best2) {
                        best2 = d2;
                        at = c;
                    }
                }
                continue;
            }
            double dl = boxDist2(nodes[n.left], x, y), dr = boxDist2(nodes[n.right], x, y);
            if (dl < dr) {
                stack[top++] = n.right;
                stack[top++] = n.left;
            } else {
                stack[top++] = n.left;
                stack[top++] = n.right;
            }
        }
        return best2;
    }
};

HatDomain::HatDomain(const Profile& p, double a, double b, size_t uniformSegments)
    : p_(p), a_(a), b_(b), tree_(std::make_unique<Tree>()) {
    if (!(b > a)) throw domainError("hat needs a < b");
    if (uniformSegments < 2) throw domainError("hat needs at least two segments");
    const double L = b - a, h = L / static_cast<double>(uniformSegments);
    std::vector<double> xs;
    for (size_t i = 0; i <= uniformSegments; ++i) xs.push_back(a + L * static_cast<double>(i) / uniformSegments);
    for (int k = 1; k <= 60; ++k) {
        double d = std::ldexp(h, -k);
        xs.push_back(a + d);
        xs.push_back(b - d);
    }
    for (double t : p.breakpoints())
        if (t > 0.0 && t < 0.5 * L) {
            xs.push_back(a + t);
            xs.push_back(b - t);
        }
    xs.push_back(a + 0.5 * L);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    xs.front() = a;
    xs.back() = b;
    tree_->xs = xs;
    for (double x : xs) tree_->ys.push_back(upper(x));
    tree_->build(0, xs.size() - 1);
}

HatDomain::~HatDomain() = default;

double HatDomain::upper(double x) const { return p_(std::min(x - a_, b_ - x)); }

size_t HatDomain::vertexCount() const { return tree_->xs.size(); }

bool HatDomain::contains(Complex z) const {
    double x = z.real(), y = z.imag();
    return x > a_ && x < b_ && y > 0.0 && y < upper(x);
}

double HatDomain::distance(Complex z) const {
    double x = z.real(), y = z.imag();
    double best2 = std::numeric_limits<double>::infinity();
    if (x >= a_ && x <= b_) best2 = y * y;
    Complex at;
    best2 = tree_->nearest(x, y, best2, at);
    return std::sqrt(best2);
}

BoundaryHit HatDomain::nearest(Complex z) const {
    double x = z.real(), y = z.imag();
    double best2 = std::numeric_limits<double>::infinity();
    BoundaryHit hit{{std::clamp(x, a_, b_), 0.0}, 0};
    if (x >= a_ && x <= b_) best2 = y * y;
    Complex at;
    double d2 = tree_->nearest(x, y, best2, at);
    if (d2 < best2) hit = {at, 1};
    return hit;
}

std::string HatDomain::describe() const {
    std::ostringstream s;
    s << "hat(a=" << a_ << ", b=" << b_ << ", vertices=" << vertexCount() << ")";
    return s.str();
}

// ---------------------------------------------------------------- walks

WalkSample runWalks(const Domain& D, Complex z0, const WalkOptions& opt) {
    if (!D.contains(z0)) throw domainError("walk start must lie inside " + D.describe());
    if (opt.walks == 0) throw inputError("BadWalkCount", "need at least one walk");
    const int W = opt.workers > 0 ? opt.workers : workerCount();
    const double capture = opt.captureFactor * D.diameter();
    std::vector<std::vector<BoundaryHit>> hits(W);
    std::vector<size_t> failed(W, 0);
    parallelFor(static_cast<size_t>(W), [&](size_t w) {
        size_t lo = opt.walks * w / W, hi = opt.walks * (w + 1) / W;
        std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                          static_cast<std::uint32_t>(w)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> angle(0.0, kTwoPi);
        auto& out = hits[w];
        out.reserve(hi - lo);
        for (size_t k = lo; k < hi; ++k) {
            Complex z = z0;
            bool done = false;
            for (size_t step = 0; step < opt.maxSteps; ++step) {
                double d = D.distance(z);
                if (d < capture) {
                    out.push_back(D.nearest(z));
                    done = true;
                    break;
                }
                z += std::polar(d, angle(rng));
            }
            if (!done) ++failed[w];
        }
    }, W);
    WalkSample s;
    s.walks = opt.walks;
    for (int w = 0; w < W; ++w) {
        s.hits.insert(s.hits.end(), hits[w].begin(), hits[w].end());
        s.nonConverged += failed[w];
    }
    std::ostringstream rule;
    rule << "walk-on-spheres, capture " << opt.captureFactor << "*diameter, max " << opt.maxSteps << " steps, "
         << W << " workers";
    s.stepRule = rule.str();
    if (static_cast<double>(s.nonConverged) > 1e-3 * static_cast<double>(s.walks))
        throw numericalFailure("NonConvergedWalks", std::to_string(s.nonConverged) + " of " +
                                                        std::to_string(s.walks) + " walks hit the step limit");
    return s;
}

HarmonicMeasureEstimate estimateFrom(const WalkSample& s, const std::function<bool(const BoundaryHit&)>& piece) {
    HarmonicMeasureEstimate e;
    size_t count = 0;
    for (const auto& h : s.hits)
        if (piece(h)) ++count;
    double n = static_cast<double>(s.walks);
    e.value = static_cast<double>(count) / n;
    e.stdError = std::sqrt(std::max(e.value * (1.0 - e.value), 0.0) / n);
    e.walks = s.walks;
    e.nonConverged = s.nonConverged;
    e.stepRule = s.stepRule;
    return e;
}

HarmonicMeasureEstimate harmonicMeasureMC(const Domain& D, Complex z0,
                                          const std::function<bool(const BoundaryHit&)>& piece,
                                          const WalkOptions& opt) {
    return estimateFrom(runWalks(D, z0, opt), piece);
}

double rectangleLeftSideSeries(const RectangleDomain& R, Complex z0) {
    if (!R.contains(z0)) throw domainError("point must lie inside the rectangle");
    double L = R.x1() - R.x0(), h = R.y1() - R.y0();
    double X = z0.real() - R.x0(), Y = z0.imag() - R.y0();
    double sum = 0.0;
    for (int k = 1; k < 200001; k += 2) {
        double c = k * kPi / h;
        // sinh(c (L - X)) / sinh(c L) without overflow
        double ratio = std::exp(-c * X) * (-std::expm1(-2.0 * c * (L - X))) / (-std::expm1(-2.0 * c * L));
        double term = 4.0 / (k * kPi) * std::sin(c * Y) * ratio;
        sum += term;
        if (4.0 / (k * kPi) * ratio < 1e-18 * std::fabs(sum) || ratio == 0.0) break;
    }
    return sum;
}

} // namespace disclab
