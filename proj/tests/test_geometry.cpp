#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testfans.hpp"

#include "tfr/lp.hpp"

#include <random>
#include <set>

using namespace tfr;
using namespace testfans;

TEST_CASE("cone from empty generating set is the zero cone") {
    Cone c = Cone::from_generators({}, 2);
    CHECK(c.is_zero());
    CHECK(c.dim() == 0);
    CHECK(c.contains(v({0, 0})));
    CHECK(!c.contains(v({1, 0})));
    CHECK(c.relint_contains(v({0, 0})));
}

TEST_CASE("coordinate quadrant") {
    Cone c = cone2({{1, 0}, {0, 1}});
    CHECK(c.dim() == 2);
    REQUIRE(c.facet_forms().size() == 2);
    std::set<IVec> forms(c.facet_forms().begin(), c.facet_forms().end());
    CHECK(forms.count(v({1, 0})));
    CHECK(forms.count(v({0, 1})));
    CHECK(c.rays().size() == 2);
}

TEST_CASE("oblique 2-cone facet forms") {
    // generators (1,0) and (1,2): facets y >= 0 and 2x - y >= 0
    Cone c = cone2({{1, 0}, {1, 2}});
    CHECK(c.dim() == 2);
    std::set<IVec> forms(c.facet_forms().begin(), c.facet_forms().end());
    CHECK(forms.count(v({0, 1})));
    CHECK(forms.count(v({2, -1})));
    CHECK(c.contains(v({1, 1})));
    CHECK(!c.contains(v({0, 1})));
}

TEST_CASE("non-pointed input is rejected") {
    CHECK_THROWS_WITH_AS(Cone::from_generators({v({1, 0}), v({-1, 0})}, 2),
                         doctest::Contains("NotPointed"), Error);
    CHECK_THROWS_AS(Cone::from_generators({v({1, 1}), v({-1, 0}), v({0, -1})}, 2), Error);
}

TEST_CASE("redundant generators are dropped") {
    Cone c = cone2({{1, 0}, {1, 1}, {0, 1}});
    CHECK(c.rays().size() == 2);
    CHECK(c == cone2({{1, 0}, {0, 1}}));
}

TEST_CASE("faces of the zero cone and of a quadrant") {
    CHECK(Cone::zero(2).faces().size() == 1);
    Cone q = cone2({{1, 0}, {0, 1}});
    CHECK(q.faces().size() == 4);
    Cone oct = cone_d({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    CHECK(oct.faces().size() == 8);
}

TEST_CASE("V/H cross-check on sampled points") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Cone c = random_pointed_cone(rng, 3);
        std::uniform_int_distribution<long> coord(-3, 3);
        for (int s = 0; s < 25; ++s) {
            IVec p = v({coord(rng), coord(rng), coord(rng)});
            // H-description membership vs V-description (LP over ray weights)
            LinearProgram lp;
            lp.nvars = c.rays().size();
            for (size_t j = 0; j < 3; ++j) {
                QVec row(lp.nvars);
                for (size_t i = 0; i < lp.nvars; ++i) row[i] = Rat(c.rays()[i][j]);
                lp.add_eq(std::move(row), Rat(p[j]));
            }
            for (size_t i = 0; i < lp.nvars; ++i) {
                QVec row(lp.nvars, Rat(0));
                row[i] = 1;
                lp.add_ge(std::move(row), Rat(0));
            }
            CHECK(c.contains(p) == feasible_point(lp).has_value());
        }
    }
}

TEST_CASE("relint membership") {
    Cone q = cone2({{1, 0}, {0, 1}});
    CHECK(q.relint_contains(v({1, 1})));
    CHECK(!q.relint_contains(v({1, 0})));
    Cone ray = cone2({{1, 0}});
    CHECK(ray.relint_contains(v({2, 0})));
    CHECK(!ray.relint_contains(v({0, 0})));
    CHECK(!ray.relint_contains(v({1, 1})));
}

TEST_CASE("fan of a quadrant") {
    Fan f = Q2();
    CHECK(f.size() == 4);
    CHECK(f.maximal().size() == 1);
    CHECK(f.dim() == 2);
    CHECK(f.pure());
}

TEST_CASE("OPP fan has 7 cones") {
    Fan f = OPP();
    CHECK(f.size() == 7);
    CHECK(f.maximal().size() == 2);
    CHECK(f.pure());
}

TEST_CASE("overlapping cones are rejected") {
    CHECK_THROWS_WITH_AS(
        Fan::from_maximal({cone2({{1, 0}, {0, 1}}), cone2({{1, 0}, {1, 1}})}, 2),
        doctest::Contains("NotAFan"), Error);
}

TEST_CASE("star and deletion partition the fan") {
    for (Fan f : {Q2(), OPP(), HALF(), FULL4()}) {
        for (size_t i = 0; i < f.size(); ++i) {
            auto star = f.star(i);
            Fan del = f.deletion(i);
            CHECK(star.size() + del.size() == f.size());
            for (size_t s : star) CHECK(!del.index_of(f.cone(s)).has_value());
            for (const auto& c : del.cones()) CHECK(f.index_of(c).has_value());
        }
    }
}

TEST_CASE("star of the origin is the whole fan") {
    Fan f = Q2();
    CHECK(f.star(f.require_index(Cone::zero(2))).size() == f.size());
    CHECK(f.deletion(f.require_index(Cone::zero(2))).is_empty());
}

TEST_CASE("star examples") {
    Fan opp = OPP();
    auto star = opp.star(opp.require_index(cone2({{1, 0}})));
    CHECK(star.size() == 2);

    Fan full = FULL4();
    auto star2 = full.star(full.require_index(cone2({{0, 1}})));
    CHECK(star2.size() == 3);  // the ray and quadrants I, II
}

TEST_CASE("deletion examples") {
    Fan opp = OPP();
    CHECK(opp.deletion(opp.require_index(cone2({{1, 0}, {0, 1}}))).size() == 6);

    Fan q2 = Q2();
    Fan del = q2.deletion(q2.require_index(cone2({{1, 0}})));
    CHECK(del.size() == 2);
    CHECK(del.index_of(cone2({{0, 1}})).has_value());
}

TEST_CASE("star by point") {
    Fan q2 = Q2();
    CHECK(q2.star_by_point(v({1, 1})).size() == 1);
    CHECK(q2.star_by_point(v({0, 0})).size() == 4);
    CHECK(q2.star_by_point(v({-1, 0})).empty());
    Fan opp = OPP();
    CHECK(opp.star_by_point(v({3, 0})).size() == 2);
}

TEST_CASE("boundary fan") {
    Cone q = cone2({{1, 0}, {0, 1}});
    Fan b = boundary_fan(q);
    CHECK(b.size() == 3);
    CHECK(b.pure());
    CHECK(b.dim() == 1);

    Fan br = boundary_fan(cone2({{1, 0}}));
    CHECK(br.size() == 1);
    CHECK(br.cone(0).is_zero());

    Fan b3 = boundary_fan(cone_d({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3));
    CHECK(b3.maximal().size() == 3);
    CHECK(b3.dim() == 2);
    CHECK(b3.pure());

    CHECK_THROWS_AS(boundary_fan(Cone::zero(2)), Error);
}

TEST_CASE("quotient fan poset isomorphism") {
    Fan full = FULL4();
    size_t ray = full.require_index(cone2({{0, 1}}));
    QuotientFan q = quotient_fan(full, ray);
    CHECK(q.fan.ambient_dim() == 1);
    CHECK(q.fan.maximal().size() == 2);
    CHECK(q.index_map.size() == full.star(ray).size());
    // order isomorphism on the index map
    for (auto [s1, q1] : q.index_map)
        for (auto [s2, q2] : q.index_map) {
            bool face_orig = full.cone(s2).contains(full.cone(s1));
            bool face_quot = q.fan.cone(q2).contains(q.fan.cone(q1));
            CHECK(face_orig == face_quot);
        }
}

TEST_CASE("quotient by the zero cone is the identity") {
    Fan full = FULL4();
    QuotientFan q = quotient_fan(full, full.require_index(Cone::zero(2)));
    CHECK(q.fan.size() == full.size());
    CHECK(q.fan.ambient_dim() == 2);
}

TEST_CASE("quotient of Q2 by a ray") {
    Fan q2 = Q2();
    QuotientFan q = quotient_fan(q2, q2.require_index(cone2({{1, 0}})));
    CHECK(q.fan.ambient_dim() == 1);
    CHECK(q.fan.size() == 2);  // {0} and one ray
}

TEST_CASE("faces form a lattice closed under intersection") {
    Cone oct = cone_d({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}, 3);
    auto faces = oct.faces();
    for (const auto& a : faces)
        for (const auto& b : faces) {
            Cone meet = a.intersect(b);
            bool found = false;
            for (const auto& c : faces)
                if (c == meet) found = true;
            CHECK(found);
        }
}
