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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyconvex {

struct zero_vector_error : std::invalid_argument {
    zero_vector_error() : std::invalid_argument("zero vector has no direction") {}
};

struct not_locally_ordinary_error : std::invalid_argument {
    explicit not_locally_ordinary_error(std::size_t i)
        : std::invalid_argument("polygon is not locally-ordinary: vertex " + std::to_string(i) +
                                " equals its successor"),
          index(i) {}
    std::size_t index;
};

struct empty_polygon_error : std::invalid_argument {
    empty_polygon_error() : std::invalid_argument("operation undefined for the empty polygon") {}
};

struct too_few_vertices_error : std::invalid_argument {
    explicit too_few_vertices_error(std::size_t got, std::size_t need)
        : std::invalid_argument("operation needs at least " + std::to_string(need) +
                                " vertices, got " + std::to_string(got)) {}
};

struct not_a_rotation_error : std::invalid_argument {
    not_a_rotation_error() : std::invalid_argument("rotation requires c^2 + s^2 = 1") {}
};

struct non_positive_scale_error : std::invalid_argument {
    non_positive_scale_error() : std::invalid_argument("homothety factor must be > 0") {}
};

struct singular_map_error : std::invalid_argument {
    singular_map_error() : std::invalid_argument("affine map must be nonsingular") {}
};

struct generation_error : std::runtime_error {
    explicit generation_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    parse_error(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

}  // namespace polyconvex
