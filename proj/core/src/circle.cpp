#include "disclab/circle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace disclab {

double normalizeAngle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

double chord(double a, double b) {
    return 2.0 * std::fabs(std::sin(0.5 * (a - b)));
}

Arc::Arc(double s, double len, bool isClosed)
    : start(normalizeAngle(s)), length(std::clamp(len, 0.0, kTwoPi)), closed(isClosed) {}

Arc Arc::between(double a, double b, bool isClosed) {
    double na = normalizeAngle(a);
    double len = normalizeAngle(b - a);
    if (len == 0.0 && b != a) len = kTwoPi;
    return Arc(na, len, isClosed);
}

bool Arc::contains(double theta) const {
    if (isFull()) return true;
    double d = normalizeAngle(theta - start);
    if (closed) return d <= length || d == 0.0;
    return d > 0.0 && d < length;
}

std::vector<Segment> toSegments(const Arc& arc) {
    if (arc.isFull()) return {{0.0, kTwoPi}};
    double s = arc.start;
    double e = s + arc.length;
    if (e <= kTwoPi) return {{s, e}};
    return {{s, kTwoPi}, {0.0, e - kTwoPi}};
}

ArcSet::ArcSet(const std::vector<Arc>& arcs) {
    std::vector<Segment> segs;
    for (const auto& a : arcs) {
        if (a.length <= 0.0) continue;
        for (auto s : toSegments(a)) segs.push_back(s);
    }
    *this = fromSegments(std::move(segs));
}

ArcSet ArcSet::full() {
    ArcSet s;
    s.segs_ = {{0.0, kTwoPi}};
    return s;
}

ArcSet ArcSet::fromSegments(std::vector<Segment> segs) {
    ArcSet out;
    for (auto& s : segs) {
        s.first = std::clamp(s.first, 0.0, kTwoPi);
        s.second = std::clamp(s.second, 0.0, kTwoPi);
    }
    std::erase_if(segs, [](const Segment& s) { return !(s.second > s.first); });
    std::sort(segs.begin(), segs.end());
    for (const auto& s : segs) {
        if (!out.segs_.empty() && s.first <= out.segs_.back().second) {
            out.segs_.back().second = std::max(out.segs_.back().second, s.second);
        } else {
            out.segs_.push_back(s);
        }
    }
    return out;
}

bool ArcSet::isFull() const {
    return segs_.size() == 1 && segs_[0].first <= 0.0 && segs_[0].second >= kTwoPi;
}

double ArcSet::length() const {
    double total = 0.0;
    for (const auto& s : segs_) total += s.second - s.first;
    return std::min(total, kTwoPi);
}

bool ArcSet::contains(double theta) const {
    if (segs_.empty()) return false;
    if (isFull()) return true;
    double t = normalizeAngle(theta);
    if (t == 0.0) return segs_.front().first == 0.0 && segs_.back().second == kTwoPi;
    auto it = std::upper_bound(segs_.begin(), segs_.end(), t,
                               [](double v, const Segment& s) { return v < s.first; });
    if (it == segs_.begin()) return false;
    --it;
    return t > it->first && t < it->second;
}

double ArcSet::distanceToBoundary(double theta) const {
    if (segs_.empty() || isFull()) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : arcs()) {
        for (double e : {a.start, a.end()}) {
            double d = normalizeAngle(theta - e);
            best = std::min(best, std::min(d, kTwoPi - d));
        }
    }
    return best;
}

ArcSet ArcSet::unite(const ArcSet& other) const {
    std::vector<Segment> segs = segs_;
    segs.insert(segs.end(), other.segs_.begin(), other.segs_.end());
    return fromSegments(std::move(segs));
}

ArcSet ArcSet::intersect(const ArcSet& other) const {
    std::vector<Segment> out;
    size_t i = 0, j = 0;
    while (i < segs_.size() && j < other.segs_.size()) {
        double lo = std::max(segs_[i].first, other.segs_[j].first);
        double hi = std::min(segs_[i].second, other.segs_[j].second);
        if (hi > lo) out.push_back({lo, hi});
        if (segs_[i].second < other.segs_[j].second) ++i; else ++j;
    }
    return fromSegments(std::move(out));
}

ArcSet ArcSet::complement() const {
    std::vector<Segment> out;
    double cursor = 0.0;
    for (const auto& s : segs_) {
        if (s.first > cursor) out.push_back({cursor, s.first});
        cursor = std::max(cursor, s.second);
    }
    if (cursor < kTwoPi) out.push_back({cursor, kTwoPi});
    return fromSegments(std::move(out));
}

std::vector<Arc> ArcSet::arcs() const {
    std::vector<Arc> out;
    if (segs_.empty()) return out;
    if (isFull()) return {Arc::full()};
    bool wraps = segs_.size() > 1 && segs_.front().first == 0.0 && segs_.back().second == kTwoPi;
    size_t first = wraps ? 1 : 0;
    size_t last = wraps ? segs_.size() - 1 : segs_.size();
    for (size_t k = first; k < last; ++k)
        out.emplace_back(segs_[k].first, segs_[k].second - segs_[k].first);
    if (wraps) {
        const auto& tail = segs_.back();
        const auto& head = segs_.front();
        out.emplace_back(tail.first, (kTwoPi - tail.first) + head.second);
    }
    std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) { return a.start < b.start; });
    return out;
}

double arcMeasure(const ArcSet& set) { return set.measure(); }

} // namespace disclab
