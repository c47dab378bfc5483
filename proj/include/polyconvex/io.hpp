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

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polyconvex/convexity.hpp"
#include "polyconvex/errors.hpp"
#include "polyconvex/geometry.hpp"
#include "polyconvex/monotone.hpp"

namespace polyconvex {

/// Polygon text format: one vertex per line as two whitespace-separated
/// scalars (integer, decimal, or p/q). Lines starting with '#' and blank
/// lines are ignored. serialize/parse round-trip polygons exactly.
inline polygon parse_polygon(std::istream& in) {
    polygon p;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first, second, extra;
        if (!(ls >> first)) continue;  // blank line
        if (first.front() == '#') continue;
        if (!(ls >> second)) throw parse_error(line_no, "expected two coordinates");
        if (ls >> extra) throw parse_error(line_no, "trailing content after coordinates");
        auto x = scalar::parse(first);
        if (!x) throw parse_error(line_no, "bad scalar '" + first + "'");
        auto y = scalar::parse(second);
        if (!y) throw parse_error(line_no, "bad scalar '" + second + "'");
        p.push_back({std::move(*x), std::move(*y)});
    }
    return p;
}

inline polygon parse_polygon_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_polygon(in);
}

inline std::string serialize_polygon(const polygon& p, const std::string& header = {}) {
    std::string out;
    if (!header.empty()) {
        out += "# ";
        out += header;
        out += '\n';
    }
    for (const point& v : p) {
        out += v.x.str();
        out += ' ';
        out += v.y.str();
        out += '\n';
    }
    return out;
}

/// Full classification of one polygon. Monotone flags are absent when the
/// polygon has no edge-angle sequence (empty, or repeated consecutive
/// vertex); simply_convex is absent below 3 vertices; the *_oracle verdicts
/// are filled only when requested.
struct classify_result {
    std::size_t n = 0;
    property_report props;
    std::optional<monotone_class> monotone;
    bool strictly_convex_signs = false;
    bool strictly_convex_angles = false;
    std::optional<bool> simply_convex;
    std::optional<bool> strictly_convex_oracle;
    std::optional<bool> simply_convex_oracle;
};

inline classify_result classify_polygon(const polygon& p, bool with_oracle) {
    classify_result r;
    r.n = p.size();
    r.props = report_properties(p);
    if (!p.empty() && (p.size() == 1 || r.props.locally_ordinary)) {
        r.monotone = classify(p);
    }
    r.strictly_convex_signs = is_strictly_convex_signs(p);
    r.strictly_convex_angles = is_strictly_convex_angles(p);
    if (p.size() >= 3) r.simply_convex = is_simply_convex(p);
    if (with_oracle) {
        r.strictly_convex_oracle = r.props.strict && r.props.convex;
        r.simply_convex_oracle = r.props.simple && r.props.convex;
    }
    return r;
}

/// Equalities the classification must satisfy; any nonempty result is a bug
/// in one of the deciders. Only meaningful when the oracle verdicts were
/// computed.
inline std::vector<std::string> verdict_disagreements(const classify_result& r) {
    std::vector<std::string> bad;
    if (r.strictly_convex_signs != r.strictly_convex_angles) {
        bad.push_back("strictly_convex_signs vs strictly_convex_angles");
    }
    if (r.strictly_convex_oracle && r.strictly_convex_signs != *r.strictly_convex_oracle) {
        bad.push_back("strictly_convex_signs vs strictly_convex_oracle");
    }
    if (r.n >= 3) {
        // Scoped to locally-ordinary inputs: a duplicate vertex hidden by a
        // degenerate (empty) half-open edge is simple and convex without
        // being ordinary, so these pairs genuinely differ there.
        if (r.props.locally_ordinary) {
            bool stmt1 = r.props.ordinary && r.props.locally_simple && r.props.convex;
            bool stmt2 = r.props.simple && r.props.convex;
            if (stmt1 != stmt2) bad.push_back("ordinary+locally_simple+convex vs simple+convex");
            if (r.simply_convex && *r.simply_convex != stmt2) {
                bad.push_back("simply_convex vs simple+convex");
            }
        }
        bool quasi = r.props.quasi_strict && r.props.convex;
        bool locst = r.props.ordinary && r.props.locally_strict && r.props.convex;
        if (quasi != locst) bad.push_back("quasi_strict+convex vs ordinary+locally_strict+convex");
        if (quasi != r.strictly_convex_signs) {
            bad.push_back("quasi_strict+convex vs strictly_convex_signs");
        }
    }
    return bad;
}

namespace detail {

inline std::string tri(const std::optional<bool>& v) {
    if (!v) return "na";
    return *v ? "true" : "false";
}

inline std::string yn(bool v) { return v ? "true" : "false"; }

}  // namespace detail

/// Stable key/value text form; key names and order are part of the contract.
inline std::string to_text(const classify_result& r) {
    std::ostringstream out;
    out << "n: " << r.n << '\n';
    out << "dim: " << r.props.dimension << '\n';
    out << "locally_ordinary: " << detail::yn(r.props.locally_ordinary) << '\n';
    out << "ordinary: " << detail::yn(r.props.ordinary) << '\n';
    out << "locally_strict: " << detail::yn(r.props.locally_strict) << '\n';
    out << "quasi_strict: " << detail::yn(r.props.quasi_strict) << '\n';
    out << "strict: " << detail::yn(r.props.strict) << '\n';
    out << "locally_simple: " << detail::yn(r.props.locally_simple) << '\n';
    out << "simple: " << detail::yn(r.props.simple) << '\n';
    out << "convex: " << detail::yn(r.props.convex) << '\n';
    auto flag = [&](const char* key, auto member) {
        out << key << ": "
            << (r.monotone ? detail::yn(member(*r.monotone)) : std::string("na")) << '\n';
    };
    flag("increasing", [](const monotone_class& m) { return m.increasing; });
    flag("decreasing", [](const monotone_class& m) { return m.decreasing; });
    flag("nondecreasing", [](const monotone_class& m) { return m.nondecreasing; });
    flag("nonincreasing", [](const monotone_class& m) { return m.nonincreasing; });
    flag("c_increasing", [](const monotone_class& m) { return m.c_increasing; });
    flag("c_decreasing", [](const monotone_class& m) { return m.c_decreasing; });
    flag("c_nondecreasing", [](const monotone_class& m) { return m.c_nondecreasing; });
    flag("c_nonincreasing", [](const monotone_class& m) { return m.c_nonincreasing; });
    flag("c_strictly_monotone", [](const monotone_class& m) { return m.c_strictly_monotone(); });
    flag("c_monotone", [](const monotone_class& m) { return m.c_monotone(); });
    out << "strictly_convex_signs: " << detail::yn(r.strictly_convex_signs) << '\n';
    out << "strictly_convex_angles: " << detail::yn(r.strictly_convex_angles) << '\n';
    out << "simply_convex: " << detail::tri(r.simply_convex) << '\n';
    out << "strictly_convex_oracle: " << detail::tri(r.strictly_convex_oracle) << '\n';
    out << "simply_convex_oracle: " << detail::tri(r.simply_convex_oracle) << '\n';
    return out.str();
}

inline std::string to_json_text(const classify_result& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["dim"] = r.props.dimension;
    j["locally_ordinary"] = r.props.locally_ordinary;
    j["ordinary"] = r.props.ordinary;
    j["locally_strict"] = r.props.locally_strict;
    j["quasi_strict"] = r.props.quasi_strict;
    j["strict"] = r.props.strict;
    j["locally_simple"] = r.props.locally_simple;
    j["simple"] = r.props.simple;
    j["convex"] = r.props.convex;
    auto put = [&](const char* key, std::optional<bool> v) {
        if (v) {
            j[key] = *v;
        } else {
            j[key] = nullptr;
        }
    };
    if (r.monotone) {
        j["increasing"] = r.monotone->increasing;
        j["decreasing"] = r.monotone->decreasing;
        j["nondecreasing"] = r.monotone->nondecreasing;
        j["nonincreasing"] = r.monotone->nonincreasing;
        j["c_increasing"] = r.monotone->c_increasing;
        j["c_decreasing"] = r.monotone->c_decreasing;
        j["c_nondecreasing"] = r.monotone->c_nondecreasing;
        j["c_nonincreasing"] = r.monotone->c_nonincreasing;
        j["c_strictly_monotone"] = r.monotone->c_strictly_monotone();
        j["c_monotone"] = r.monotone->c_monotone();
    } else {
        for (const char* key :
             {"increasing", "decreasing", "nondecreasing", "nonincreasing", "c_increasing",
              "c_decreasing", "c_nondecreasing", "c_nonincreasing", "c_strictly_monotone",
              "c_monotone"}) {
            j[key] = nullptr;
        }
    }
    j["strictly_convex_signs"] = r.strictly_convex_signs;
    j["strictly_convex_angles"] = r.strictly_convex_angles;
    put("simply_convex", r.simply_convex);
    put("strictly_convex_oracle", r.strictly_convex_oracle);
    put("simply_convex_oracle", r.simply_convex_oracle);
    return j.dump(2);
}

}  // namespace polyconvex
