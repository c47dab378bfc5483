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

#include <cmath>
#include <compare>
#include <numbers>
#include <vector>

#include "polyconvex/errors.hpp"
#include "polyconvex/geometry.hpp"

namespace polyconvex {

/// Partition of the nonzero vectors. h_minus takes the open upper half-plane
/// plus the positive x-ray (angles in [0, pi)); h_plus takes the open lower
/// half-plane plus the negative x-ray (angles in [pi, 2*pi)).
enum class halfplane_class { h_minus, h_plus };

inline halfplane_class halfplane(const vec& v) {
    if (v.is_zero()) throw zero_vector_error{};
    int ys = v.y.sign();
    if (ys > 0 || (ys == 0 && v.x.sign() > 0)) return halfplane_class::h_minus;
    return halfplane_class::h_plus;
}

/// True iff the angle of u, measured counterclockwise from the positive
/// x-axis into [0, 2*pi), is strictly smaller than the angle of v. Decided
/// without trigonometry: across the two half-plane classes the order is
/// forced, within one class it is the sign of the cross product.
inline bool arg_less(const vec& u, const vec& v) {
    halfplane_class hu = halfplane(u);
    halfplane_class hv = halfplane(v);
    if (hu != hv) return hu == halfplane_class::h_minus;
    return cross(u, v).sign() > 0;
}

/// u and v point the same way: v = lambda * u with lambda > 0.
inline bool direction_equiv(const vec& u, const vec& v) {
    if (u.is_zero() || v.is_zero()) throw zero_vector_error{};
    return cross(u, v).is_zero() && dot(u, v).sign() > 0;
}

/// Total order on angles. Equality is decided by direction equivalence, not
/// by double negation of arg_less.
inline std::strong_ordering arg_compare(const vec& u, const vec& v) {
    if (direction_equiv(u, v)) return std::strong_ordering::equal;
    return arg_less(u, v) ? std::strong_ordering::less : std::strong_ordering::greater;
}

/// Floating-point angle in [0, 2*pi). Diagnostics and cross-checks only;
/// no predicate in this library depends on it.
inline double arg_approx(const vec& v) {
    halfplane_class h = halfplane(v);
    double x = v.x.to_double();
    double y = v.y.to_double();
    double r = std::hypot(x, y);
    double c = x / r;
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    double a = std::acos(c);
    return h == halfplane_class::h_minus ? a : 2.0 * std::numbers::pi - a;
}

/// The edge vectors (V_1 - V_0, ..., V_0 - V_{n-1}) of a locally-ordinary
/// polygon; throws not_locally_ordinary_error naming the first index whose
/// edge degenerates.
inline std::vector<vec> edge_vectors(const polygon& p) {
    std::vector<vec> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        vec e = p[cyc_next(i, p.size())] - p[i];
        if (e.is_zero()) throw not_locally_ordinary_error(i);
        out.push_back(std::move(e));
    }
    return out;
}

inline bool is_locally_ordinary(const polygon& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == p[cyc_next(i, p.size())]) return false;
    }
    return true;
}

}  // namespace polyconvex
