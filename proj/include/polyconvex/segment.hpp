// Copyright 2026 The Polyconvex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "polyconvex/predicates.hpp"

namespace polyconvex {

/// A segment between two points. Functions below state whether they read it
/// as closed [a, b] or half-open [a, b); the half-open form excludes b, so
/// [a, a) is the empty set while [a, a] is a singleton.
struct segment {
    point a;
    point b;
    bool degenerate() const { return a == b; }
};

struct no_intersection {};
struct point_intersection {
    point p;
};
struct segment_intersection {
    point p;
    point q;  // p != q
};
using closed_overlap = std::variant<no_intersection, point_intersection, segment_intersection>;

namespace detail {

// Parameter of p along the nondegenerate segment [a, b]: 0 at a, 1 at b.
// Valid only for p collinear with a, b.
inline scalar line_parameter(const point& p, const point& a, const point& b) {
    vec d = b - a;
    return dot(p - a, d) / dot(d, d);
}

inline closed_overlap collinear_overlap(const segment& s, const segment& t) {
    // s is nondegenerate, all four endpoints lie on the line of s.
    scalar t0 = line_parameter(t.a, s.a, s.b);
    scalar t1 = line_parameter(t.b, s.a, s.b);
    if (t1 < t0) std::swap(t0, t1);
    scalar lo = std::max(scalar(0), t0);
    scalar hi = std::min(scalar(1), t1);
    if (lo > hi) return no_intersection{};
    vec d = s.b - s.a;
    point plo = s.a + lo * d;
    if (lo == hi) return point_intersection{plo};
    return segment_intersection{plo, s.a + hi * d};
}

}  // namespace detail

/// Exact classification of the closed intersection [a1,b1] cap [a2,b2]:
/// empty, a single point, or a positive-length sub-segment. All degeneracies
/// (point segments, parallel overlap, endpoint touching, proper crossing)
/// are resolved exactly.
inline closed_overlap closed_segment_intersection(const segment& s, const segment& t) {
    if (s.degenerate()) {
        if (t.degenerate()) {
            if (s.a == t.a) return point_intersection{s.a};
            return no_intersection{};
        }
        if (on_segment(s.a, t.a, t.b)) return point_intersection{s.a};
        return no_intersection{};
    }
    if (t.degenerate()) {
        if (on_segment(t.a, s.a, s.b)) return point_intersection{t.a};
        return no_intersection{};
    }

    vec d1 = s.b - s.a;
    vec d2 = t.b - t.a;
    scalar denom = cross(d1, d2);
    if (denom.is_zero()) {
        if (!collinear(s.a, s.b, t.a)) return no_intersection{};  // parallel, distinct lines
        return detail::collinear_overlap(s, t);
    }
    // Proper lines crossing: solve s.a + u*d1 == t.a + v*d2.
    vec w = t.a - s.a;
    scalar u = cross(w, d2) / denom;
    scalar v = cross(w, d1) / denom;
    if (u < 0 || u > 1 || v < 0 || v > 1) return no_intersection{};
    return point_intersection{s.a + u * d1};
}

/// True iff [s.a, s.b) and [t.a, t.b) are disjoint. A single shared point
/// only counts when it is an included point of both half-open segments.
inline bool half_open_disjoint(const segment& s, const segment& t) {
    if (s.degenerate() || t.degenerate()) return true;  // [a, a) is empty
    closed_overlap x = closed_segment_intersection(s, t);
    if (std::holds_alternative<no_intersection>(x)) return true;
    if (const auto* single = std::get_if<point_intersection>(&x)) {
        return single->p == s.b || single->p == t.b;
    }
    // A positive-length overlap stays nonempty after removing two points.
    return false;
}

/// Refutation witness: a point of [s.a, s.b) cap [t.a, t.b) whenever
/// half_open_disjoint(s, t) is false, nullopt otherwise.
inline std::optional<point> half_open_common_point(const segment& s, const segment& t) {
    if (s.degenerate() || t.degenerate()) return std::nullopt;
    closed_overlap x = closed_segment_intersection(s, t);
    if (const auto* single = std::get_if<point_intersection>(&x)) {
        if (single->p == s.b || single->p == t.b) return std::nullopt;
        return single->p;
    }
    if (const auto* sub = std::get_if<segment_intersection>(&x)) {
        // At most the two excluded endpoints must be avoided; three distinct
        // candidates always leave one admissible.
        const point candidates[3] = {sub->p, midpoint(sub->p, sub->q), sub->q};
        for (const point& c : candidates) {
            if (c != s.b && c != t.b) return c;
        }
    }
    return std::nullopt;
}

}  // namespace polyconvex
