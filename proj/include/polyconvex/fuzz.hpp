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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>

#include "polyconvex/convexity.hpp"
#include "polyconvex/generators.hpp"
#include "polyconvex/hull.hpp"
#include "polyconvex/transforms.hpp"

namespace polyconvex {

/// The three routes to the strict-convexity verdict. Injectable so the fuzz
/// engine itself can be tested against deliberately broken deciders.
struct strict_deciders {
    std::function<bool(const polygon&)> signs;
    std::function<bool(const polygon&)> angles;
    std::function<bool(const polygon&)> oracle;
};

inline strict_deciders production_deciders() {
    return {
        [](const polygon& p) { return is_strictly_convex_signs(p); },
        [](const polygon& p) { return is_strictly_convex_angles(p); },
        [](const polygon& p) { return is_strict_oracle(p) && is_convex_oracle(p); },
    };
}

struct fuzz_options {
    std::uint64_t iterations = 500;
    std::uint64_t seed = 1;
    std::size_t max_n = 16;
    std::int64_t bound = 4;
    std::size_t oracle_cap = 64;  // largest n the O(n^2)/O(n^3) oracles run at
};

struct fuzz_failure {
    polygon counterexample;
    std::string check;
};

struct fuzz_report {
    std::uint64_t iterations = 0;
    std::optional<fuzz_failure> failure;
    bool ok() const { return !failure.has_value(); }
};

namespace detail {

// First broken equivalence on this polygon, or nullopt. Oracle-backed checks
// run only up to opts.oracle_cap vertices; the two O(n) deciders are always
// compared against each other.
inline std::optional<std::string> differential_check(const polygon& p, const fuzz_options& opts,
                                                     const strict_deciders& d,
                                                     std::mt19937_64& rng) {
    const std::size_t n = p.size();
    const bool oracle_ok = n <= opts.oracle_cap;

    bool by_signs = d.signs(p);
    bool by_angles = d.angles(p);
    if (by_signs != by_angles) return "strict: signs vs angles";
    if (oracle_ok && by_signs != d.oracle(p)) return "strict: signs vs oracle";

    if (n >= 3 && oracle_ok) {
        property_report r = report_properties(p);
        // The simply-convex equivalence is scoped to locally-ordinary
        // polygons: a duplicate vertex whose extra copy sits on a degenerate
        // edge (an empty half-open set) makes a polygon simple and convex yet
        // not ordinary, e.g. (A, B, C, C) over a triangle.
        if (r.locally_ordinary) {
            bool stmt1 = r.ordinary && r.locally_simple && r.convex;
            bool stmt2 = r.simple && r.convex;
            bool stmt3 = is_simply_convex(p);
            if (stmt1 != stmt2) return "nonstrict: (I) vs (II)";
            if (stmt2 != stmt3) return "nonstrict: (II) vs (III)";
        }

        bool q1 = r.ordinary && r.locally_strict && r.convex;
        bool q2 = r.quasi_strict && r.convex;
        if (q1 != q2) return "strict taxonomy: (I) vs (II)";
        if (q2 != by_signs) return "strict taxonomy: (II) vs (III)";

        // Transform invariances on the same instance. Nonsingular affine maps
        // preserve every report flag, dimension included.
        affine_map m{scalar(rand_int(rng, -3, 3)), scalar(rand_int(rng, -3, 3)),
                     scalar(rand_int(rng, -3, 3)), scalar(rand_int(rng, -3, 3)),
                     scalar(rand_int(rng, -3, 3)), scalar(rand_int(rng, -3, 3))};
        if (!m.singular() && report_properties(apply_affine(p, m)) != r) {
            return "transform: affine invariance";
        }
        if (r.locally_ordinary) {
            monotone_class mc = classify(p);
            auto cyclic = [](const monotone_class& x) {
                return std::tuple(x.c_increasing, x.c_decreasing, x.c_nondecreasing,
                                  x.c_nonincreasing);
            };
            auto [c, s] = unit_circle_point(scalar(rand_int(rng, -6, 6)));
            if (cyclic(classify(rotate_rational(p, c, s))) != cyclic(mc)) {
                return "transform: rotation keeps cyclic flags";
            }
            monotone_class ref = classify(reflect(p));
            if (mc.c_increasing != ref.c_decreasing || mc.c_decreasing != ref.c_increasing ||
                mc.c_nondecreasing != ref.c_nonincreasing ||
                mc.c_nonincreasing != ref.c_nondecreasing) {
                return "transform: reflection swaps cyclic flags";
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Delete-one-vertex passes, then coordinate halving, while the polygon
/// keeps failing the predicate.
inline polygon shrink_counterexample(polygon p,
                                     const std::function<bool(const polygon&)>& still_fails) {
    bool progress = true;
    int budget = 400;
    while (progress && budget > 0) {
        progress = false;
        for (std::size_t i = 0; i < p.size() && budget > 0; ++i, --budget) {
            polygon q = p;
            q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
            if (still_fails(q)) {
                p = std::move(q);
                progress = true;
                break;
            }
        }
    }
    const scalar half(1, 2);
    for (int budget2 = 64; budget2-- > 0;) {
        polygon q;
        q.reserve(p.size());
        for (const point& v : p) q.push_back({half * v.x, half * v.y});
        if (!still_fails(q)) break;
        p = std::move(q);
    }
    return p;
}

/// Seeded differential fuzz over mixed generator kinds. Stops at the first
/// disagreement, shrinks it, and reports which equivalence broke.
inline fuzz_report run_fuzz(const fuzz_options& opts,
                            const strict_deciders& deciders = production_deciders()) {
    std::mt19937_64 rng(opts.seed);
    fuzz_report report;
    const std::size_t max_n = std::max<std::size_t>(opts.max_n, 5);
    for (std::uint64_t it = 0; it < opts.iterations; ++it) {
        ++report.iterations;
        std::uint64_t poly_seed = rng();
        std::int64_t convex_bound = std::max<std::int64_t>(opts.bound, 8);
        polygon p;
        switch (detail::rand_index(rng, 6)) {
            case 0:
                p = gen_random(detail::rand_index(rng, max_n + 1), poly_seed, opts.bound);
                break;
            case 1:  // tiny coordinates hit exact degeneracies hard
                p = gen_random(detail::rand_index(rng, max_n + 1), poly_seed, 2);
                break;
            case 2:
                p = mutate(gen_random(3 + detail::rand_index(rng, max_n - 2), poly_seed, opts.bound),
                           rng());
                break;
            case 3:
                p = gen_strictly_convex(3 + detail::rand_index(rng, max_n - 2), poly_seed,
                                        convex_bound);
                break;
            case 4:
                p = gen_convex_degenerate(4 + detail::rand_index(rng, max_n - 3), poly_seed,
                                          convex_bound);
                break;
            default:
                p = gen_collinear(detail::rand_index(rng, max_n + 1), poly_seed, opts.bound);
                break;
        }
        std::uint64_t check_seed = rng();
        auto run_checks = [&](const polygon& q) {
            std::mt19937_64 check_rng(check_seed);
            return detail::differential_check(q, opts, deciders, check_rng);
        };
        if (auto failed = run_checks(p)) {
            polygon small = shrink_counterexample(
                std::move(p), [&](const polygon& q) { return run_checks(q).has_value(); });
            std::string check = *run_checks(small);
            report.failure = fuzz_failure{std::move(small), std::move(check)};
            return report;
        }
    }
    return report;
}

}  // namespace polyconvex
