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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace polyconvex {

using bigint = boost::multiprecision::cpp_int;

/// Exact rational number. Invariants: denominator > 0, fraction in lowest
/// terms. All arithmetic and comparisons are exact; there is no rounding
/// anywhere in this type.
class scalar {
public:
    scalar() = default;
    scalar(int v) : q_(v) {}
    scalar(long v) : q_(static_cast<long long>(v)) {}
    scalar(long long v) : q_(v) {}
    scalar(bigint v) : q_(std::move(v)) {}

    scalar(long long num, long long den) : scalar(bigint(num), bigint(den)) {}

    /// Builds num/den in canonical form. Throws std::domain_error if den == 0.
    scalar(bigint num, bigint den) {
        if (den == 0) {
            throw std::domain_error("scalar: zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        q_ = rational(std::move(num), std::move(den));
    }

    bigint numerator() const { return boost::multiprecision::numerator(q_); }
    bigint denominator() const { return boost::multiprecision::denominator(q_); }

    int sign() const {
        if (q_ == 0) return 0;
        return q_ < 0 ? -1 : 1;
    }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return denominator() == 1; }

    /// Lossy conversion, for diagnostics and plotting only.
    double to_double() const { return q_.convert_to<double>(); }

    friend scalar operator+(const scalar& a, const scalar& b) { return scalar(a.q_ + b.q_); }
    friend scalar operator-(const scalar& a, const scalar& b) { return scalar(a.q_ - b.q_); }
    friend scalar operator*(const scalar& a, const scalar& b) { return scalar(a.q_ * b.q_); }
    friend scalar operator/(const scalar& a, const scalar& b) {
        if (b.q_ == 0) throw std::domain_error("scalar: division by zero");
        return scalar(a.q_ / b.q_);
    }
    scalar operator-() const { return scalar(-q_); }

    scalar& operator+=(const scalar& o) { q_ += o.q_; return *this; }
    scalar& operator-=(const scalar& o) { q_ -= o.q_; return *this; }
    scalar& operator*=(const scalar& o) { q_ *= o.q_; return *this; }
    scalar& operator/=(const scalar& o) { *this = *this / o; return *this; }

    friend bool operator==(const scalar& a, const scalar& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const scalar& a, const scalar& b) {
        int c = a.q_.compare(b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Parses "17", "-3", "2.5", "-0.125", "3/4", "-7/12". Returns nullopt on
    /// any other shape (including a zero or negative denominator literal).
    static std::optional<scalar> parse(std::string_view text);

    /// Canonical text form: "n" for integers, "n/d" otherwise.
    /// parse(str()) round-trips exactly.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) {
            s += '/';
            s += denominator().str();
        }
        return s;
    }

private:
    using rational = boost::multiprecision::cpp_rational;
    explicit scalar(rational q) : q_(std::move(q)) {}
    rational q_;
};

inline scalar abs(const scalar& s) { return s.sign() < 0 ? -s : s; }

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return false;
    }
    return true;
}

}  // namespace detail

inline std::optional<scalar> scalar::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;

    auto finish = [negative](scalar s) -> std::optional<scalar> {
        return negative ? -s : s;
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) return std::nullopt;
        bigint d{std::string(den)};
        if (d == 0) return std::nullopt;
        return finish(scalar(bigint(std::string(num)), std::move(d)));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) return std::nullopt;
        if (!whole.empty() && !detail::all_digits(whole)) return std::nullopt;
        if (!frac.empty() && !detail::all_digits(frac)) return std::nullopt;
        bigint scaled = whole.empty() ? bigint(0) : bigint(std::string(whole));
        bigint den = 1;
        for (char ch : frac) {
            scaled = scaled * 10 + (ch - '0');
            den *= 10;
        }
        return finish(scalar(std::move(scaled), std::move(den)));
    }
    if (!detail::all_digits(text)) return std::nullopt;
    return finish(scalar(bigint(std::string(text))));
}

}  // namespace polyconvex
