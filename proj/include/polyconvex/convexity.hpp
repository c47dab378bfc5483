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
#include <vector>

#include "polyconvex/angle.hpp"
#include "polyconvex/errors.hpp"
#include "polyconvex/hull.hpp"
#include "polyconvex/monotone.hpp"
#include "polyconvex/predicates.hpp"
#include "polyconvex/segment.hpp"

namespace polyconvex {

/// The three orientation-sign sequences the determinant convexity test reads:
///   a_i = sign det3(V_{i+1}, V_{i-1}, V_i)   for i in [2, n-2]
///   b_i = sign det3(V_0,     V_{i-1}, V_i)   for i in [2, n-1]
///   c_i = sign det3(V_0,     V_1,     V_i)   for i in [2, n-1]
struct sign_test_trace {
    std::size_t n = 0;
    std::vector<int> a;  // a[k] holds a_{k+2}
    std::vector<int> b;  // b[k] holds b_{k+2}
    std::vector<int> c;  // c[k] holds c_{k+2}

    int a_sign(std::size_t i) const { return a[i - 2]; }
    int b_sign(std::size_t i) const { return b[i - 2]; }
    int c_sign(std::size_t i) const { return c[i - 2]; }
};

/// Computes the trace exactly. Needs n >= 4; the determinant test below has
/// explicit small-n conventions instead.
inline sign_test_trace sign_sequences(const polygon& p) {
    const std::size_t n = p.size();
    if (n < 4) throw too_few_vertices_error(n, 4);
    sign_test_trace t;
    t.n = n;
    t.a.reserve(n - 3);
    t.b.reserve(n - 2);
    t.c.reserve(n - 2);
    for (std::size_t i = 2; i + 2 <= n; ++i) {
        t.a.push_back(orientation_sign(p[i + 1], p[i - 1], p[i]));
    }
    for (std::size_t i = 2; i <= n - 1; ++i) {
        t.b.push_back(orientation_sign(p[0], p[i - 1], p[i]));
        t.c.push_back(orientation_sign(p[0], p[1], p[i]));
    }
    return t;
}

/// All signs in the chain a_2..a_{n-2}, b_2..b_{n-1}, c_2..c_{n-1} equal and
/// nonzero. Holds for every strictly convex polygon with n >= 4.
inline bool sign_chain_constant(const sign_test_trace& t) {
    int ref = t.b.empty() ? 0 : t.b.front();
    if (ref == 0) return false;
    auto all_ref = [ref](const std::vector<int>& xs) {
        return std::all_of(xs.begin(), xs.end(), [ref](int s) { return s == ref; });
    };
    return all_ref(t.a) && all_ref(t.b) && all_ref(t.c);
}

/// O(n) strict-convexity decision by determinant signs: for n >= 4 the
/// products a_i*b_i, a_i*b_{i+1}, c_i*c_{i+1} must all be positive over
/// i in [2, n-2]. A 3-gon is strictly convex iff its vertices are
/// non-collinear; anything smaller is trivially strictly convex.
inline bool is_strictly_convex_signs(const polygon& p) {
    const std::size_t n = p.size();
    if (n <= 2) return true;
    if (n == 3) return !collinear(p[0], p[1], p[2]);
    auto a = [&](std::size_t i) { return orientation_sign(p[i + 1], p[i - 1], p[i]); };
    auto b = [&](std::size_t i) { return orientation_sign(p[0], p[i - 1], p[i]); };
    auto c = [&](std::size_t i) { return orientation_sign(p[0], p[1], p[i]); };
    // Each determinant is evaluated once; a failure exits early.
    int bi = b(2);
    int ci = c(2);
    for (std::size_t i = 2; i + 2 <= n; ++i) {
        int ai = a(i);
        if (ai * bi <= 0) return false;
        int bnext = b(i + 1);
        if (ai * bnext <= 0) return false;
        int cnext = c(i + 1);
        if (ci * cnext <= 0) return false;
        bi = bnext;
        ci = cnext;
    }
    return true;
}

/// O(n) strict-convexity decision by the edge-angle order: for n >= 3 the
/// polygon must be locally-ordinary with a cyclically strictly monotone
/// angle sequence. A polygon with a repeated consecutive vertex has no angle
/// sequence and (for n >= 3) is not strict, so it fails rather than errors.
inline bool is_strictly_convex_angles(const polygon& p) {
    const std::size_t n = p.size();
    if (n <= 2) return true;
    if (!is_locally_ordinary(p)) return false;
    return classify(p).c_strictly_monotone();
}

/// Simple-and-convex decision for n >= 3: locally-ordinary, cyclically
/// monotone angle sequence, and two-dimensional vertex set. Undefined below
/// 3 vertices.
inline bool is_simply_convex(const polygon& p) {
    const std::size_t n = p.size();
    if (n < 3) throw too_few_vertices_error(n, 3);
    if (!is_locally_ordinary(p)) return false;  // not ordinary at some adjacent pair, so not simple
    return classify(p).c_monotone() && dim(p) == 2;
}

inline bool is_ordinary(const polygon& p) {
    std::vector<point> sorted(p);
    std::sort(sorted.begin(), sorted.end(), lex_less);
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

inline bool is_locally_strict(const polygon& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (collinear(p[cyc_prev(i, n)], p[i], p[cyc_next(i, n)])) return false;
    }
    return true;
}

/// No edge (V_i, V_{i+1}) is collinear with any third vertex.
inline bool is_quasi_strict(const polygon& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t succ = cyc_next(i, n);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || j == succ) continue;
            if (collinear(p[i], p[succ], p[j])) return false;
        }
    }
    return true;
}

inline bool is_locally_simple(const polygon& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = cyc_next(i, n);
        segment si{p[i], p[j]};
        segment sj{p[j], p[cyc_next(j, n)]};
        if (!half_open_disjoint(si, sj)) return false;
    }
    return true;
}

/// Every flag of the polygon-property taxonomy, each computed directly from
/// its own definition (convexity via the hull oracle).
struct property_report {
    bool locally_ordinary = false;
    bool ordinary = false;
    bool locally_strict = false;
    bool quasi_strict = false;
    bool strict = false;
    bool locally_simple = false;
    bool simple = false;
    bool convex = false;
    int dimension = -1;

    friend bool operator==(const property_report&, const property_report&) = default;
};

inline property_report report_properties(const polygon& p) {
    property_report r;
    r.locally_ordinary = is_locally_ordinary(p);
    r.ordinary = is_ordinary(p);
    r.locally_strict = is_locally_strict(p);
    r.quasi_strict = is_quasi_strict(p);
    r.strict = is_strict_oracle(p);
    r.locally_simple = is_locally_simple(p);
    r.simple = is_simple_oracle(p);
    r.convex = is_convex_oracle(p);
    r.dimension = dim(p);
    return r;
}

}  // namespace polyconvex
