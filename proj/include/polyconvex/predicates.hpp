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

#include <algorithm>
#include <cstddef>

#include "polyconvex/geometry.hpp"

namespace polyconvex {

/// The 3x3 determinant of rows (1, x_a, y_a), (1, x_i, y_i), (1, x_j, y_j),
/// evaluated in 2x2 cofactor form to keep intermediates small. Positive when
/// the triple (a, i, j) makes a counterclockwise turn.
inline scalar det3(const point& a, const point& i, const point& j) {
    return (i.x - a.x) * (j.y - a.y) - (j.x - a.x) * (i.y - a.y);
}

inline int orientation_sign(const point& a, const point& i, const point& j) {
    return det3(a, i, j).sign();
}

inline bool collinear(const point& a, const point& b, const point& c) {
    return orientation_sign(a, b, c) == 0;
}

/// True iff a and b are to one side of the line through i and j
/// (either may lie on the line itself).
inline bool to_one_side(const point& a, const point& b, const point& i, const point& j) {
    return orientation_sign(a, i, j) * orientation_sign(b, i, j) >= 0;
}

/// Membership in the closed segment [a, b]; handles a == b.
inline bool on_segment(const point& p, const point& a, const point& b) {
    if (!collinear(a, b, p)) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// Affine dimension of the vertex set: -1 empty, 0 point, 1 line, 2 plane.
inline int dim(const polygon& p) {
    if (p.empty()) return -1;
    std::size_t second = 1;
    while (second < p.size() && p[second] == p[0]) ++second;
    if (second == p.size()) return 0;
    for (std::size_t i = second + 1; i < p.size(); ++i) {
        if (!collinear(p[0], p[second], p[i])) return 2;
    }
    return 1;
}

}  // namespace polyconvex
