#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "patrol/rotating_frame.hpp"

namespace patrol {

/// Half-open arc [start, end) on the circle. In canonical sets start lies in
/// [0, 2pi) and end in (start, 2pi], except for at most one arc, the last,
/// which wraps through 0 with end in (2pi, start + 2pi].
struct Arc {
    double start = 0.0;
    double end = 0.0;

    [[nodiscard]] double length() const noexcept { return end - start; }

    friend bool operator==(Arc const&, Arc const&) = default;
};

/// Finite union of disjoint arcs of the circle [0, 2pi), kept in canonical
/// form: sorted by start, neighbours separated by strictly positive gaps.
class CircleIntervalSet {
public:
    CircleIntervalSet() = default;

    [[nodiscard]] static CircleIntervalSet full() {
        CircleIntervalSet s;
        s.arcs_.push_back({0.0, kTwoPi});
        return s;
    }

    /// Arc of the given length starting at `start` (any real angle).
    [[nodiscard]] static CircleIntervalSet arc(double start, double length) {
        Arc const a{start, start + length};
        return from_arcs(std::span<Arc const>(&a, 1));
    }

    /// Canonical union of arbitrary arcs; arcs with end <= start are empty
    /// and arcs of length >= 2pi cover the whole circle.
    [[nodiscard]] static CircleIntervalSet from_arcs(std::span<Arc const> raw) {
        std::vector<Arc> pieces;
        pieces.reserve(raw.size() + 1);
        for (Arc const& a : raw) {
            double const len = a.end - a.start;
            if (!(len > 0.0)) continue;
            if (len >= kTwoPi) return full();
            double const s = wrap_two_pi(a.start);
            double const e = s + len;
            if (e > kTwoPi) {
                pieces.push_back({s, kTwoPi});
                pieces.push_back({0.0, e - kTwoPi});
            } else {
                pieces.push_back({s, e});
            }
        }
        return CircleIntervalSet(std::move(pieces));
    }

    [[nodiscard]] std::vector<Arc> const& arcs() const noexcept { return arcs_; }
    [[nodiscard]] bool empty() const noexcept { return arcs_.empty(); }
    [[nodiscard]] bool is_full() const noexcept {
        return arcs_.size() == 1 && arcs_.front().start == 0.0 && arcs_.front().end == kTwoPi;
    }

    [[nodiscard]] double measure() const noexcept {
        double total = 0.0;
        for (Arc const& a : arcs_) total += a.length();
        return std::min(total, kTwoPi);
    }

    [[nodiscard]] bool contains(double angle) const noexcept {
        double const a = wrap_two_pi(angle);
        for (Arc const& arc : arcs_) {
            if ((a >= arc.start && a < arc.end) || a + kTwoPi < arc.end) return true;
        }
        return false;
    }

    /// The set turned counter-clockwise by `shift` radians.
    [[nodiscard]] CircleIntervalSet rotated(double shift) const {
        if (is_full()) return *this;
        std::vector<Arc> moved;
        moved.reserve(arcs_.size());
        for (Arc const& a : arcs_) moved.push_back({a.start + shift, a.end + shift});
        return from_arcs(moved);
    }

    friend bool operator==(CircleIntervalSet const&, CircleIntervalSet const&) = default;

private:
    explicit CircleIntervalSet(std::vector<Arc> pieces) {
        // pieces: non-wrapping arcs inside [0, 2pi]
        std::sort(pieces.begin(), pieces.end(),
                  [](Arc const& a, Arc const& b) { return a.start < b.start; });
        for (Arc const& p : pieces) {
            if (!arcs_.empty() && p.start <= arcs_.back().end) {
                arcs_.back().end = std::max(arcs_.back().end, p.end);
            } else {
                arcs_.push_back(p);
            }
        }
        if (arcs_.size() == 1 && arcs_.front().start <= 0.0 && arcs_.front().end >= kTwoPi) {
            arcs_.front() = {0.0, kTwoPi};
        } else if (arcs_.size() > 1 && arcs_.front().start <= 0.0 && arcs_.back().end >= kTwoPi) {
            arcs_.back().end = kTwoPi + arcs_.front().end;
            arcs_.erase(arcs_.begin());
        }
    }

    std::vector<Arc> arcs_;
};

[[nodiscard]] inline CircleIntervalSet set_union(std::span<CircleIntervalSet const> sets) {
    std::vector<Arc> all;
    for (auto const& s : sets) {
        if (s.is_full()) return CircleIntervalSet::full();
        all.insert(all.end(), s.arcs().begin(), s.arcs().end());
    }
    return CircleIntervalSet::from_arcs(all);
}

/// Measure of the union divided by 2pi: the probability that a uniform
/// angle lands in at least one of the sets.
[[nodiscard]] inline double union_measure(std::span<CircleIntervalSet const> sets) {
    return set_union(sets).measure() / kTwoPi;
}

}  // namespace patrol
