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

#include <random>

#include "polyconvex/convexity.hpp"
#include "polyconvex/generators.hpp"
#include "polyconvex/transforms.hpp"

using namespace polyconvex;

namespace {

point pt(long long x, long long y) { return {scalar(x), scalar(y)}; }

const polygon square{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};

}  // namespace

TEST_CASE("cyclic shift") {
    CHECK(cyclic_shift(square, 0) == square);
    CHECK(cyclic_shift(square, 2) == polygon{pt(1, 1), pt(0, 1), pt(0, 0), pt(1, 0)});
    CHECK(cyclic_shift(square, 4) == square);  // reduced modulo n
    CHECK(cyclic_shift(square, 6) == cyclic_shift(square, 2));
    CHECK(cyclic_shift(polygon{}, 3).empty());
    polygon p = square;
    for (std::size_t k = 0; k < p.size(); ++k) p = cyclic_shift(p, 1);
    CHECK(p == square);
}

TEST_CASE("reflection") {
    CHECK(reflect(polygon{pt(0, 0), pt(1, 0), pt(1, 1)}) ==
          polygon{pt(0, 0), pt(1, 0), pt(1, -1)});
    CHECK(reflect(reflect(square)) == square);
    CHECK(reflect(polygon{pt(3, 0), pt(-2, 0)}) == polygon{pt(3, 0), pt(-2, 0)});
}

TEST_CASE("rational rotation") {
    polygon p{pt(5, 0)};
    CHECK(rotate_rational(p, scalar(3, 5), scalar(4, 5)) == polygon{pt(3, 4)});
    CHECK(rotate_rational(square, scalar(1), scalar(0)) == square);
    CHECK(rotate_rational(polygon{pt(1, 0)}, scalar(0), scalar(1)) == polygon{pt(0, 1)});
    CHECK_THROWS_AS(rotate_rational(p, scalar(1, 2), scalar(1, 2)), not_a_rotation_error);
}

TEST_CASE("unit circle parametrization always feeds valid rotations") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 500; ++i) {
        long long num = static_cast<long long>(rng() % 41) - 20;
        long long den = 1 + static_cast<long long>(rng() % 9);
        auto [c, s] = unit_circle_point(scalar(num, den));
        REQUIRE(c * c + s * s == scalar(1));
    }
}

TEST_CASE("scale and translate") {
    CHECK(scale(square, scalar(2)) == polygon{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
    CHECK_THROWS_AS(scale(square, scalar(0)), non_positive_scale_error);
    CHECK_THROWS_AS(scale(square, scalar(-1)), non_positive_scale_error);
    CHECK(translate(square, vec{scalar(1), scalar(1)}) ==
          polygon{pt(1, 1), pt(2, 1), pt(2, 2), pt(1, 2)});
}

TEST_CASE("translation preserves the orientation determinant") {
    std::mt19937_64 rng(72);
    for (int i = 0; i < 300; ++i) {
        polygon p = gen_random(3, rng(), 20);
        vec t{scalar(static_cast<long long>(rng() % 201) - 100),
              scalar(static_cast<long long>(rng() % 201) - 100)};
        polygon q = translate(p, t);
        CHECK(det3(q[0], q[1], q[2]) == det3(p[0], p[1], p[2]));
    }
}

TEST_CASE("shear keeps the square strictly convex") {
    affine_map shear{scalar(1), scalar(1), scalar(0), scalar(1), scalar(0), scalar(0)};
    polygon sheared = apply_affine(square, shear);
    CHECK(sheared == polygon{pt(0, 0), pt(1, 0), pt(2, 1), pt(1, 1)});
    CHECK(is_strictly_convex_signs(sheared));
}

TEST_CASE("singular maps are rejected") {
    affine_map collapse{scalar(1), scalar(2), scalar(2), scalar(4), scalar(0), scalar(0)};
    CHECK(collapse.singular());
    CHECK_THROWS_AS(apply_affine(square, collapse), singular_map_error);
}

TEST_CASE("nonsingular affine maps preserve the whole taxonomy") {
    std::mt19937_64 rng(73);
    auto draw = [&] { return scalar(static_cast<long long>(rng() % 9) - 4); };
    int used = 0;
    for (int i = 0; i < 250; ++i) {
        polygon p = gen_random(detail::rand_index(rng, 9), rng(), 3);
        affine_map m{draw(), draw(), draw(), draw(), draw(), draw()};
        if (m.singular()) continue;
        ++used;
        CHECK(report_properties(apply_affine(p, m)) == report_properties(p));
    }
    CHECK(used > 150);
}
