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
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyconvex/angle.hpp"
#include "polyconvex/errors.hpp"
#include "polyconvex/geometry.hpp"
#include "polyconvex/transforms.hpp"

namespace polyconvex {

enum class gen_kind { strictly_convex, convex_degenerate, random_uniform, collinear, mutated };

/// Everything a generator run depends on; equal specs yield equal polygons.
struct gen_spec {
    gen_kind kind = gen_kind::random_uniform;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::int64_t coord_bound = 64;
};

namespace detail {

// mt19937_64 output is pinned by the standard; taking residues keeps the
// generated corpus identical across standard libraries (std distributions
// are not portable). The slight modulo bias is irrelevant here.
inline std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline std::size_t rand_index(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

struct int_vec {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend auto operator<=>(const int_vec&, const int_vec&) = default;
};

// Canonical primitive representative pointing into the upper half (angles in
// [0, pi)): divide by gcd, then negate the lower-half ones.
inline int_vec canonical_primitive(std::int64_t x, std::int64_t y) {
    std::int64_t g = std::gcd(x < 0 ? -x : x, y < 0 ? -y : y);
    x /= g;
    y /= g;
    if (y < 0 || (y == 0 && x < 0)) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

inline vec to_vec(const int_vec& v) { return {scalar(v.x), scalar(v.y)}; }

}  // namespace detail

/// Vertices as prefix sums of the given edge vectors, starting at start.
/// The vectors must sum to zero for the last edge to close the polygon.
inline polygon from_edge_vectors(const std::vector<vec>& edges, const point& start) {
    polygon p;
    p.reserve(edges.size());
    point v = start;
    for (const vec& e : edges) {
        p.push_back(v);
        v = v + e;
    }
    return p;
}

/// Strictly convex n-gon with integer coordinates: n integer vectors with
/// pairwise distinct directions and zero sum, sorted by angle, emitted as
/// prefix sums. A cyclically increasing edge-angle sequence is strictly
/// convex, so no rejection loop over outputs is needed.
inline polygon gen_strictly_convex(std::size_t n, std::uint64_t seed, std::int64_t bound) {
    if (n < 3) throw generation_error("strictly convex generation needs n >= 3");
    if (bound < 1) throw generation_error("coordinate bound must be >= 1");
    std::mt19937_64 rng(seed);

    const std::size_t pair_count = (n - (n % 2 == 0 ? 0 : 3)) / 2;
    std::set<detail::int_vec> upper;  // distinct primitive directions, upper half
    std::uint64_t budget = 1000 + 80 * static_cast<std::uint64_t>(n);
    auto sample_upper = [&]() -> detail::int_vec {
        while (budget > 0) {
            --budget;
            std::int64_t x = detail::rand_int(rng, -bound, bound);
            std::int64_t y = detail::rand_int(rng, -bound, bound);
            if (x == 0 && y == 0) continue;
            detail::int_vec c = detail::canonical_primitive(x, y);
            if (upper.insert(c).second) return c;
        }
        throw generation_error("could not find enough distinct directions within bound " +
                               std::to_string(bound));
    };

    std::vector<vec> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < pair_count; ++i) {
        detail::int_vec c = sample_upper();
        edges.push_back(detail::to_vec(c));
        edges.push_back(-detail::to_vec(c));
    }
    if (n % 2 == 1) {
        // A zero-sum triple (u, -v, v - u) with directions distinct from the
        // paired ones: u, v fresh upper-half primitives, retried until the
        // difference direction is fresh as well.
        while (true) {
            detail::int_vec u = sample_upper();
            detail::int_vec v = sample_upper();
            detail::int_vec d = detail::canonical_primitive(v.x - u.x, v.y - u.y);
            if (upper.insert(d).second) {
                edges.push_back(detail::to_vec(u));
                edges.push_back(-detail::to_vec(v));
                edges.push_back({scalar(v.x - u.x), scalar(v.y - u.y)});
                break;
            }
            upper.erase(u);
            upper.erase(v);
        }
    }

    std::sort(edges.begin(), edges.end(),
              [](const vec& a, const vec& b) { return arg_less(a, b); });
    point start{scalar(detail::rand_int(rng, -bound, bound)),
                scalar(detail::rand_int(rng, -bound, bound))};
    return cyclic_shift(from_edge_vectors(edges, start), detail::rand_index(rng, n));
}

/// Splits k edges at interior rational points; each split leaves the edge
/// union unchanged and introduces a collinear vertex triple.
inline polygon split_edges(polygon p, std::size_t k, std::mt19937_64& rng) {
    for (std::size_t s = 0; s < k; ++s) {
        std::size_t i = detail::rand_index(rng, p.size());
        std::int64_t den = detail::rand_int(rng, 2, 8);
        std::int64_t num = detail::rand_int(rng, 1, den - 1);
        scalar t{bigint(num), bigint(den)};
        point w = p[i] + t * (p[cyc_next(i, p.size())] - p[i]);
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(i) + 1, w);
    }
    return p;
}

/// Simply convex but not strictly convex: a strictly convex base polygon
/// with at least one edge split at interior points.
inline polygon gen_convex_degenerate(std::size_t n, std::uint64_t seed, std::int64_t bound) {
    if (n < 4) throw generation_error("degenerate convex generation needs n >= 4");
    std::mt19937_64 rng(seed);
    std::size_t m = 3 + static_cast<std::size_t>(detail::rand_index(rng, n - 3));  // in [3, n-1]
    polygon base = gen_strictly_convex(m, rng(), bound);
    return split_edges(std::move(base), n - m, rng);
}

/// n i.i.d. uniform integer vertices in [-bound, bound]^2.
inline polygon gen_random(std::size_t n, std::uint64_t seed, std::int64_t bound) {
    std::mt19937_64 rng(seed);
    polygon p;
    p.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.push_back({scalar(detail::rand_int(rng, -bound, bound)),
                     scalar(detail::rand_int(rng, -bound, bound))});
    }
    return p;
}

/// n points on one random line (dim <= 1 by construction).
inline polygon gen_collinear(std::size_t n, std::uint64_t seed, std::int64_t bound) {
    std::mt19937_64 rng(seed);
    point base{scalar(detail::rand_int(rng, -bound, bound)),
               scalar(detail::rand_int(rng, -bound, bound))};
    std::int64_t dx = 0, dy = 0;
    while (dx == 0 && dy == 0) {
        dx = detail::rand_int(rng, -bound, bound);
        dy = detail::rand_int(rng, -bound, bound);
    }
    polygon p;
    p.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        scalar k(detail::rand_int(rng, -3, 3));
        p.push_back(base + k * vec{scalar(dx), scalar(dy)});
    }
    return p;
}

inline polygon mutate_swap(polygon p, std::size_t i, std::size_t j) {
    std::swap(p[i], p[j]);
    return p;
}

inline polygon mutate_duplicate(polygon p, std::size_t i) {
    p.insert(p.begin() + static_cast<std::ptrdiff_t>(i) + 1, p[i]);
    return p;
}

inline polygon mutate_insert_midpoint(polygon p, std::size_t i) {
    point m = midpoint(p[i], p[cyc_next(i, p.size())]);
    p.insert(p.begin() + static_cast<std::ptrdiff_t>(i) + 1, m);
    return p;
}

inline polygon mutate_perturb(polygon p, std::size_t i, bool on_x, int delta) {
    if (on_x) {
        p[i].x += scalar(delta);
    } else {
        p[i].y += scalar(delta);
    }
    return p;
}

/// One random structural mutation: vertex swap, vertex duplication, edge
/// midpoint insertion, a +-1 coordinate nudge, or a cyclic shift.
inline polygon mutate(const polygon& p, std::uint64_t seed) {
    if (p.empty()) return p;
    std::mt19937_64 rng(seed);
    std::size_t op = detail::rand_index(rng, 5);
    if (op == 0 && p.size() < 2) op = 1;
    switch (op) {
        case 0: {
            std::size_t i = detail::rand_index(rng, p.size());
            std::size_t j = detail::rand_index(rng, p.size() - 1);
            if (j >= i) ++j;
            return mutate_swap(p, i, j);
        }
        case 1: return mutate_duplicate(p, detail::rand_index(rng, p.size()));
        case 2: return mutate_insert_midpoint(p, detail::rand_index(rng, p.size()));
        case 3:
            return mutate_perturb(p, detail::rand_index(rng, p.size()), rng() % 2 == 0,
                                  rng() % 2 == 0 ? 1 : -1);
        default: return cyclic_shift(p, detail::rand_index(rng, p.size()));
    }
}

inline polygon generate(const gen_spec& spec) {
    switch (spec.kind) {
        case gen_kind::strictly_convex:
            return gen_strictly_convex(spec.n, spec.seed, spec.coord_bound);
        case gen_kind::convex_degenerate:
            return gen_convex_degenerate(spec.n, spec.seed, spec.coord_bound);
        case gen_kind::collinear:
            return gen_collinear(spec.n, spec.seed, spec.coord_bound);
        case gen_kind::mutated:
            return mutate(gen_random(spec.n, spec.seed, spec.coord_bound), spec.seed ^ 0x9e3779b97f4a7c15ull);
        case gen_kind::random_uniform:
        default:
            return gen_random(spec.n, spec.seed, spec.coord_bound);
    }
}

}  // namespace polyconvex
