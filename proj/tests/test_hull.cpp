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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "polyconvex/generators.hpp"
#include "polyconvex/hull.hpp"
#include "polyconvex/transforms.hpp"

using namespace polyconvex;

namespace {

point pt(long long x, long long y) { return {scalar(x), scalar(y)}; }

const polygon square{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
const polygon crossed{pt(0, 0), pt(1, 1), pt(1, 0), pt(0, 1)};

bool hull_has_strict_turns(const hull& h) {
    const std::size_t n = h.vertices.size();
    if (n < 3) return true;
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation_sign(h.vertices[i], h.vertices[cyc_next(i, n)],
                             h.vertices[cyc_next(cyc_next(i, n), n)]) <= 0) {
            return false;
        }
    }
    return true;
}

bool inside_or_on(const hull& h, const point& p) {
    const std::size_t n = h.vertices.size();
    if (n == 0) return false;
    if (n == 1) return p == h.vertices[0];
    if (n == 2) return on_segment(p, h.vertices[0], h.vertices[1]);
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation_sign(h.vertices[i], h.vertices[cyc_next(i, n)], p) < 0) return false;
    }
    return true;
}

// Linear-scan reference for the binary-search boundary locator.
bool on_boundary_linear(const hull& h, const point& p) {
    const std::size_t n = h.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (on_segment(p, h.vertices[i], h.vertices[cyc_next(i, n)])) return true;
    }
    return false;
}

point random_point(std::mt19937_64& rng, long long bound) {
    auto draw = [&] {
        return static_cast<long long>(rng() % static_cast<unsigned long long>(2 * bound + 1)) -
               bound;
    };
    return pt(draw(), draw());
}

}  // namespace

TEST_CASE("hull of the square with an interior point") {
    hull h = convex_hull({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1),
                          point{scalar(1, 2), scalar(1, 2)}});
    REQUIRE(h.vertices.size() == 4);
    CHECK(h.vertices[0] == pt(0, 0));  // lexicographic start
    CHECK(h.vertices[1] == pt(1, 0));  // counterclockwise
    CHECK(h.vertices[2] == pt(1, 1));
    CHECK(h.vertices[3] == pt(0, 1));
}

TEST_CASE("degenerate hulls") {
    CHECK(convex_hull({}).vertices.empty());
    hull single = convex_hull({pt(3, 4), pt(3, 4)});
    REQUIRE(single.vertices.size() == 1);
    CHECK(single.vertices[0] == pt(3, 4));
    hull segment_hull = convex_hull({pt(0, 0), pt(1, 0), pt(2, 0)});
    REQUIRE(segment_hull.vertices.size() == 2);
    CHECK(segment_hull.vertices[0] == pt(0, 0));
    CHECK(segment_hull.vertices[1] == pt(2, 0));
}

TEST_CASE("hull idempotence, membership, and strict turns on random sets") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 400; ++i) {
        std::vector<point> pts;
        std::size_t n = rng() % 30;
        for (std::size_t k = 0; k < n; ++k) pts.push_back(random_point(rng, 6));
        hull h = convex_hull(pts);
        CHECK(hull_has_strict_turns(h));
        for (const point& p : pts) CHECK(inside_or_on(h, p));
        hull again = convex_hull(h.vertices);
        CHECK(again.vertices == h.vertices);
    }
}

TEST_CASE("boundary locator agrees with the linear scan") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 300; ++i) {
        std::vector<point> pts;
        std::size_t n = 3 + rng() % 20;
        for (std::size_t k = 0; k < n; ++k) pts.push_back(random_point(rng, 5));
        hull h = convex_hull(pts);
        if (h.vertices.size() < 3) continue;
        for (int q = 0; q < 40; ++q) {
            point p = random_point(rng, 6);
            auto located = boundary_edge_containing(h, p);
            bool expected = on_boundary_linear(h, p);
            REQUIRE(located.has_value() == expected);
            if (located) {
                CHECK(on_segment(p, h.vertices[*located],
                                 h.vertices[cyc_next(*located, h.vertices.size())]));
            }
        }
        // Probe exact boundary points too: vertices and edge midpoints.
        for (std::size_t e = 0; e < h.vertices.size(); ++e) {
            CHECK(boundary_edge_containing(h, h.vertices[e]).has_value());
            point m = midpoint(h.vertices[e], h.vertices[cyc_next(e, h.vertices.size())]);
            auto located = boundary_edge_containing(h, m);
            REQUIRE(located.has_value());
            CHECK(*located == e);
        }
    }
}

TEST_CASE("convexity oracle on the worked pair") {
    CHECK(is_convex_oracle(square));
    CHECK_FALSE(is_convex_oracle(crossed));
}

TEST_CASE("convexity oracle in low dimension") {
    CHECK(is_convex_oracle(polygon{}));
    CHECK(is_convex_oracle(polygon{pt(3, 4)}));
    CHECK(is_convex_oracle(polygon{pt(0, 0), pt(2, 0), pt(1, 0)}));
    // Sampler backing for the dim<=1 constant: every sampled hull point lies
    // on some edge of the polygon.
    std::mt19937_64 rng(53);
    for (int i = 0; i < 300; ++i) {
        polygon p = gen_collinear(1 + rng() % 8, rng(), 5);
        REQUIRE(is_convex_oracle(p));
        point lo = *std::min_element(p.begin(), p.end(), lex_less);
        point hi = *std::max_element(p.begin(), p.end(), lex_less);
        for (int k = 0; k <= 16; ++k) {
            point sample = lo + scalar(k, 16) * (hi - lo);
            bool on_some_edge = false;
            for (std::size_t e = 0; e < p.size() && !on_some_edge; ++e) {
                on_some_edge = on_segment(sample, p[e], p[cyc_next(e, p.size())]);
            }
            CHECK(on_some_edge);
        }
    }
}

TEST_CASE("convexity oracle catches a hull-vertex-order violation") {
    // All vertices extreme, wrong traversal order.
    CHECK_FALSE(is_convex_oracle(polygon{pt(0, 0), pt(1, 1), pt(0, 1), pt(1, 0)}));
    // Boundary not fully covered: one triangle side never traversed.
    CHECK_FALSE(is_convex_oracle(polygon{pt(0, 0), pt(2, 0), pt(0, 0), pt(0, 2)}));
    // Collinear midpoint vertex on the boundary is fine.
    CHECK(is_convex_oracle(polygon{pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 2), pt(0, 2)}));
}

TEST_CASE("convexity oracle is invariant under cyclic shifts") {
    std::mt19937_64 rng(54);
    for (int i = 0; i < 300; ++i) {
        polygon p = gen_random(rng() % 9, rng(), 3);
        bool base = is_convex_oracle(p);
        for (std::size_t k = 0; k < p.size(); ++k) {
            CHECK(is_convex_oracle(cyclic_shift(p, k)) == base);
        }
    }
}

TEST_CASE("convexity oracle is invariant under nonsingular affine maps") {
    std::mt19937_64 rng(55);
    auto draw = [&] { return scalar(static_cast<long long>(rng() % 9) - 4); };
    for (int i = 0; i < 300; ++i) {
        polygon p = gen_random(rng() % 9, rng(), 3);
        affine_map m{draw(), draw(), draw(), draw(), draw(), draw()};
        if (m.singular()) continue;
        CHECK(is_convex_oracle(apply_affine(p, m)) == is_convex_oracle(p));
    }
}

TEST_CASE("strictly convex polygons use exactly their hull vertices") {
    std::mt19937_64 rng(56);
    for (int i = 0; i < 200; ++i) {
        polygon p = gen_strictly_convex(3 + rng() % 12, rng(), 16);
        REQUIRE(is_strict_oracle(p));
        REQUIRE(is_convex_oracle(p));
        hull h = convex_hull(p);
        std::vector<point> sorted_poly = p;
        std::sort(sorted_poly.begin(), sorted_poly.end(), lex_less);
        std::vector<point> sorted_hull = h.vertices;
        std::sort(sorted_hull.begin(), sorted_hull.end(), lex_less);
        CHECK(sorted_poly == sorted_hull);
    }
}

TEST_CASE("strictness oracle") {
    CHECK(is_strict_oracle(square));
    CHECK_FALSE(is_strict_oracle(polygon{pt(0, 0), pt(1, 0), pt(2, 0), pt(0, 1)}));
    CHECK_FALSE(is_strict_oracle(polygon{pt(1, 1), pt(1, 1), pt(0, 3)}));  // repeated vertex
    CHECK(is_strict_oracle(polygon{}));
    CHECK(is_strict_oracle(polygon{pt(0, 0), pt(5, 5)}));
}

TEST_CASE("simplicity oracle") {
    CHECK(is_simple_oracle(square));
    CHECK_FALSE(is_simple_oracle(crossed));
    polygon doubled{pt(0, 0), pt(1, 0), pt(0, 1), pt(0, 0), pt(1, 0), pt(0, 1)};
    CHECK_FALSE(is_simple_oracle(doubled));
}
