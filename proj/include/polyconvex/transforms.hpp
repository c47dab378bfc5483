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

#include <utility>

#include "polyconvex/errors.hpp"
#include "polyconvex/geometry.hpp"

namespace polyconvex {

/// v -> M v + t with rational entries.
struct affine_map {
    scalar m11, m12, m21, m22;
    scalar t1, t2;

    scalar det() const { return m11 * m22 - m12 * m21; }
    bool singular() const { return det().is_zero(); }

    point operator()(const point& p) const {
        return {m11 * p.x + m12 * p.y + t1, m21 * p.x + m22 * p.y + t2};
    }
};

/// (V_k, ..., V_{n-1}, V_0, ..., V_{k-1}); k is reduced modulo n.
inline polygon cyclic_shift(const polygon& p, std::size_t k) {
    if (p.empty()) return p;
    k %= p.size();
    polygon out;
    out.reserve(p.size());
    out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(k), p.end());
    out.insert(out.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

/// (x, y) -> (x, -y).
inline polygon reflect(const polygon& p) {
    polygon out;
    out.reserve(p.size());
    for (const point& v : p) out.push_back({v.x, -v.y});
    return out;
}

inline polygon apply_affine(const polygon& p, const affine_map& m) {
    if (m.singular()) throw singular_map_error{};
    polygon out;
    out.reserve(p.size());
    for (const point& v : p) out.push_back(m(v));
    return out;
}

/// Rotation by the unit-circle point (c, s); requires c^2 + s^2 = 1 so the
/// map stays rational and exact.
inline polygon rotate_rational(const polygon& p, const scalar& c, const scalar& s) {
    if (c * c + s * s != scalar(1)) throw not_a_rotation_error{};
    return apply_affine(p, affine_map{c, -s, s, c, scalar(0), scalar(0)});
}

inline polygon scale(const polygon& p, const scalar& lambda) {
    if (lambda.sign() <= 0) throw non_positive_scale_error{};
    return apply_affine(p, affine_map{lambda, scalar(0), scalar(0), lambda, scalar(0), scalar(0)});
}

inline polygon translate(const polygon& p, const vec& t) {
    polygon out;
    out.reserve(p.size());
    for (const point& v : p) out.push_back(v + t);
    return out;
}

/// Rational point of the unit circle: t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)).
/// Dense on the circle over rational t; feeds rotate_rational in tests.
inline std::pair<scalar, scalar> unit_circle_point(const scalar& t) {
    scalar t2 = t * t;
    scalar den = scalar(1) + t2;
    return {(scalar(1) - t2) / den, (scalar(2) * t) / den};
}

}  // namespace polyconvex
