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
#include <chrono>
#include <cmath>
#include <cstdint>
#include <vector>

#include "polyconvex/convexity.hpp"
#include "polyconvex/generators.hpp"
#include "polyconvex/hull.hpp"

namespace polyconvex {

struct bench_row {
    std::size_t n = 0;
    double angle_ms = 0.0;
    double sign_ms = 0.0;
    double hull_ms = 0.0;
    bool verdicts_agree = false;
};

namespace detail {

inline double median_ms(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t m = xs.size() / 2;
    if (xs.size() % 2 == 1) return xs[m];
    return 0.5 * (xs[m - 1] + xs[m]);
}

template <class F>
double time_median_ms(F&& run, int repeats) {
    using clock = std::chrono::steady_clock;
    run();  // warmup keeps the first timed repeat comparable to the rest
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(repeats));
    for (int r = 0; r < repeats; ++r) {
        auto t0 = clock::now();
        run();
        auto t1 = clock::now();
        samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return median_ms(std::move(samples));
}

}  // namespace detail

/// Times the two O(n) tests and the hull-based convexity oracle on freshly
/// generated strictly convex polygons, one row per size (median of repeats,
/// monotonic clock). Every row also records whether the three methods agreed
/// on the verdict for its input.
inline std::vector<bench_row> run_bench(const std::vector<std::size_t>& sizes, int repeats,
                                        std::uint64_t seed) {
    std::vector<bench_row> rows;
    rows.reserve(sizes.size());
    for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
        std::size_t n = sizes[idx];
        auto bound =
            static_cast<std::int64_t>(2 * std::llround(std::ceil(std::sqrt(double(n)))) + 8);
        polygon p = gen_strictly_convex(n, seed + idx, bound);

        bench_row row;
        row.n = n;
        bool by_angles = false, by_signs = false, by_hull = false;
        row.angle_ms =
            detail::time_median_ms([&] { by_angles = is_strictly_convex_angles(p); }, repeats);
        row.sign_ms =
            detail::time_median_ms([&] { by_signs = is_strictly_convex_signs(p); }, repeats);
        row.hull_ms = detail::time_median_ms([&] { by_hull = is_convex_oracle(p); }, repeats);
        row.verdicts_agree = by_angles == by_signs && by_signs == by_hull;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace polyconvex
