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

#include "polyconvex/scalar.hpp"

namespace polyconvex {

struct point {
    scalar x;
    scalar y;
    friend bool operator==(const point&, const point&) = default;
};

/// Difference of two points.
struct vec {
    scalar x;
    scalar y;
    friend bool operator==(const vec&, const vec&) = default;
    bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

inline vec operator-(const point& a, const point& b) { return {a.x - b.x, a.y - b.y}; }
inline point operator+(const point& p, const vec& v) { return {p.x + v.x, p.y + v.y}; }
inline point operator-(const point& p, const vec& v) { return {p.x - v.x, p.y - v.y}; }
inline vec operator+(const vec& a, const vec& b) { return {a.x + b.x, a.y + b.y}; }
inline vec operator-(const vec& v) { return {-v.x, -v.y}; }
inline vec operator*(const scalar& s, const vec& v) { return {s * v.x, s * v.y}; }

inline scalar cross(const vec& a, const vec& b) { return a.x * b.y - a.y * b.x; }
inline scalar dot(const vec& a, const vec& b) { return a.x * b.x + a.y * b.y; }

inline point midpoint(const point& a, const point& b) {
    const scalar half(1, 2);
    return {half * (a.x + b.x), half * (a.y + b.y)};
}

/// Ordered finite sequence of points. Repeats are allowed; order matters.
using polygon = std::vector<point>;

/// Successor index with the wraparound n-1 -> 0.
inline std::size_t cyc_next(std::size_t i, std::size_t n) { return i + 1 == n ? 0 : i + 1; }

/// Predecessor index with the wraparound 0 -> n-1.
inline std::size_t cyc_prev(std::size_t i, std::size_t n) { return i == 0 ? n - 1 : i - 1; }

/// Lexicographic (x, then y) order, used for sorting and deduplication.
inline std::strong_ordering lex_compare(const point& a, const point& b) {
    if (auto c = a.x <=> b.x; c != std::strong_ordering::equal) return c;
    return a.y <=> b.y;
}

inline bool lex_less(const point& a, const point& b) {
    return lex_compare(a, b) == std::strong_ordering::less;
}

}  // namespace polyconvex
