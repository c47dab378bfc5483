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

#include <compare>
#include <cstddef>
#include <vector>

#include "polyconvex/angle.hpp"
#include "polyconvex/errors.hpp"
#include "polyconvex/geometry.hpp"

namespace polyconvex {

/// Which monotonicity properties the edge-angle sequence of a polygon has.
/// The linear flags read the sequence as written; the c_* flags allow any
/// cyclic shift first.
struct monotone_class {
    bool increasing = false;
    bool decreasing = false;
    bool nondecreasing = false;
    bool nonincreasing = false;
    bool c_increasing = false;
    bool c_decreasing = false;
    bool c_nondecreasing = false;
    bool c_nonincreasing = false;

    bool c_strictly_monotone() const { return c_increasing || c_decreasing; }
    bool c_monotone() const { return c_nondecreasing || c_nonincreasing; }

    friend bool operator==(const monotone_class&, const monotone_class&) = default;

    static monotone_class all_true() {
        return {true, true, true, true, true, true, true, true};
    }
};

namespace detail {

// The n cyclic adjacent comparisons (x_i vs x_{i+1 mod n}); everything the
// monotonicity definitions consume.
template <class Seq, class Cmp>
std::vector<std::strong_ordering> cyclic_comparisons(const Seq& xs, Cmp cmp) {
    const std::size_t n = xs.size();
    std::vector<std::strong_ordering> out(n, std::strong_ordering::equal);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = cmp(xs[i], xs[cyc_next(i, n)]);
    }
    return out;
}

inline monotone_class from_cyclic_comparisons(const std::vector<std::strong_ordering>& comps) {
    const std::size_t n = comps.size();
    monotone_class m;
    // Linear flags: the n-1 pairs without the wraparound one.
    m.increasing = m.decreasing = m.nondecreasing = m.nonincreasing = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (comps[i] != std::strong_ordering::less) m.increasing = false;
        if (comps[i] != std::strong_ordering::greater) m.decreasing = false;
        if (comps[i] == std::strong_ordering::greater) m.nondecreasing = false;
        if (comps[i] == std::strong_ordering::less) m.nonincreasing = false;
    }
    // Cyclic flags from the descent/ascent/equality counts over all n pairs.
    std::size_t descents = 0, ascents = 0, equals = 0;
    for (auto c : comps) {
        if (c == std::strong_ordering::less) ++ascents;
        else if (c == std::strong_ordering::greater) ++descents;
        else ++equals;
    }
    m.c_increasing = n == 1 || (equals == 0 && descents == 1);
    m.c_decreasing = n == 1 || (equals == 0 && ascents == 1);
    m.c_nondecreasing = n == 1 || descents <= 1;
    m.c_nonincreasing = n == 1 || ascents <= 1;
    return m;
}

// Reference implementation: try every cyclic shift and test the linear
// definitions on it. O(n^2); trusted because it transcribes the definitions.
template <class Seq, class Cmp>
monotone_class rotations_reference(const Seq& xs, Cmp cmp) {
    const std::size_t n = xs.size();
    monotone_class m;
    for (std::size_t k = 0; k < n; ++k) {
        bool inc = true, dec = true, nondec = true, noninc = true;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            std::size_t i = (k + j) % n;
            auto c = cmp(xs[i], xs[cyc_next(i, n)]);
            if (c != std::strong_ordering::less) inc = false;
            if (c != std::strong_ordering::greater) dec = false;
            if (c == std::strong_ordering::greater) nondec = false;
            if (c == std::strong_ordering::less) noninc = false;
        }
        if (k == 0) {
            m.increasing = inc;
            m.decreasing = dec;
            m.nondecreasing = nondec;
            m.nonincreasing = noninc;
        }
        m.c_increasing |= inc;
        m.c_decreasing |= dec;
        m.c_nondecreasing |= nondec;
        m.c_nonincreasing |= noninc;
    }
    return m;
}

}  // namespace detail

/// Classifies any nonempty comparable sequence in O(n) comparisons.
template <class Seq, class Cmp>
monotone_class classify_sequence(const Seq& xs, Cmp cmp) {
    return detail::from_cyclic_comparisons(detail::cyclic_comparisons(xs, cmp));
}

/// All-rotations oracle for classify_sequence.
template <class Seq, class Cmp>
monotone_class classify_sequence_bruteforce(const Seq& xs, Cmp cmp) {
    return detail::rotations_reference(xs, cmp);
}

/// Monotonicity classification of the polygon's edge-angle sequence, in O(n)
/// exact angle comparisons. A 1-gon is classified with every flag true (all
/// chains are vacuous); the empty polygon has no angle sequence at all.
inline monotone_class classify(const polygon& p) {
    if (p.empty()) throw empty_polygon_error{};
    if (p.size() == 1) return monotone_class::all_true();
    std::vector<vec> es = edge_vectors(p);
    return classify_sequence(es, [](const vec& a, const vec& b) { return arg_compare(a, b); });
}

/// O(n^2) oracle: tests the linear definitions on every cyclic shift of the
/// edge-angle sequence.
inline monotone_class classify_bruteforce(const polygon& p) {
    if (p.empty()) throw empty_polygon_error{};
    if (p.size() == 1) return monotone_class::all_true();
    std::vector<vec> es = edge_vectors(p);
    return classify_sequence_bruteforce(es,
                                        [](const vec& a, const vec& b) { return arg_compare(a, b); });
}

}  // namespace polyconvex
