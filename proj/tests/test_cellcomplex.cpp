#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testfans.hpp"

#include "tfr/cellcomplex.hpp"

#include <random>

using namespace tfr;
using namespace testfans;

namespace {

const FieldSpec Q = FieldSpec::rationals();

bool all_zero(const std::vector<size_t>& v) {
    for (size_t x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("incidence signs on a quadrant") {
    Fan f = Q2();
    IncidenceFunction eps = IncidenceFunction::build(f);
    size_t quad = f.require_index(cone2({{1, 0}, {0, 1}}));
    size_t r1 = f.require_index(cone2({{1, 0}}));
    size_t r2 = f.require_index(cone2({{0, 1}}));
    size_t o = f.require_index(Cone::zero(2));
    CHECK(eps.sign_of(r1, o) == 1);
    CHECK(eps.sign_of(r2, o) == 1);
    // opposite signs forced by the diamond relation over the zero cone
    CHECK(eps.sign_of(quad, r1) * eps.sign_of(quad, r2) == -1);
    CHECK(eps.sign_of(quad, o) == 0);
    CHECK(eps.sign_of(r1, r2) == 0);
}

TEST_CASE("incidence function on all test fans verifies its axioms") {
    for (const Fan& f : {Q2(), OPP(), HALF(), FULL4()})
        CHECK_NOTHROW(IncidenceFunction::build(f));
    Cone oct = cone_d({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}, 3);
    CHECK_NOTHROW(IncidenceFunction::build(Fan::of_cone(oct)));
}

TEST_CASE("chain complex of a single cone is exact") {
    Fan f = Q2();
    auto cc = chain_complex(f, IncidenceFunction::build(f));
    CHECK(cc.lo == -1);
    CHECK(cc.dims == std::vector<size_t>{1, 2, 1});
    CHECK(all_zero(homology_dims(cc, Q)));
}

TEST_CASE("circle homology of the complete plane fan") {
    Fan f = FULL4();
    auto cc = chain_complex(f, IncidenceFunction::build(f));
    CHECK(cc.dims == std::vector<size_t>{1, 4, 4});
    auto h = homology_dims(cc, Q);
    CHECK(h == std::vector<size_t>{0, 0, 1});
    CHECK(cohomology_dims(cc, Q) == h);
}

TEST_CASE("two disjoint arcs") {
    Fan f = OPP();
    auto cc = chain_complex(f, IncidenceFunction::build(f));
    CHECK(cc.dims == std::vector<size_t>{1, 4, 2});
    CHECK(homology_dims(cc, Q) == std::vector<size_t>{0, 1, 0});
}

TEST_CASE("relative star complexes") {
    Fan f = Q2();
    IncidenceFunction eps = IncidenceFunction::build(f);
    auto top = relative_star_complex(f, eps, cone2({{1, 0}, {0, 1}}));
    CHECK(homology_dims(top, Q) == std::vector<size_t>{0, 0, 1});

    Fan full = FULL4();
    IncidenceFunction e2 = IncidenceFunction::build(full);
    auto whole = relative_star_complex(full, e2, Cone::zero(2));
    CHECK(homology_dims(whole, Q) == std::vector<size_t>{0, 0, 1});

    Fan opp = OPP();
    IncidenceFunction e3 = IncidenceFunction::build(opp);
    auto arc = relative_star_complex(opp, e3, cone2({{1, 0}}));
    CHECK(all_zero(homology_dims(arc, Q)));

    CHECK_THROWS_WITH_AS(relative_star_complex(f, eps, cone2({{1, 1}})),
                         doctest::Contains("ConeNotInFan"), Error);
}

TEST_CASE("order complex examples") {
    Fan q2 = Q2();
    auto sc = order_complex(q2, q2.require_index(Cone::zero(2)));
    REQUIRE(sc.faces.size() == 2);
    CHECK(sc.faces[0].size() == 3);  // two rays and the quadrant
    CHECK(sc.faces[1].size() == 2);  // ray < quadrant chains

    auto top = order_complex(q2, q2.require_index(cone2({{1, 0}, {0, 1}})));
    CHECK(top.faces.empty());  // the complex {∅}
    auto cc = simplicial_chain_complex(top);
    CHECK(homology_dims(cc, Q) == std::vector<size_t>{1});

    Fan full = FULL4();
    auto circ = order_complex(full, full.require_index(Cone::zero(2)));
    CHECK(circ.faces[0].size() == 8);
    CHECK(circ.faces[1].size() == 8);
    auto hc = homology_dims(simplicial_chain_complex(circ), Q);
    CHECK(hc == std::vector<size_t>{0, 0, 1});
}

TEST_CASE("star cohomology agrees with the order-complex route") {
    for (const Fan& f : {Q2(), OPP(), HALF(), FULL4()}) {
        IncidenceFunction eps = IncidenceFunction::build(f);
        for (size_t i = 0; i < f.size(); ++i) {
            auto route1 = cohomology_dims(relative_complex(f, eps, f.star(i)), Q);
            auto route2 =
                cohomology_dims(simplicial_chain_complex(order_complex(f, i)), Q);
            // dim H̃^k(star cells) = dim H̃^{k - dim C}(order complex)
            const size_t shift = f.cone(i).dim();
            for (int k = -1; k <= int(f.dim()); ++k) {
                size_t lhs = 0, rhs = 0;
                if (k + 1 >= 0 && size_t(k + 1) < route1.size()) lhs = route1[k + 1];
                const int k2 = k - int(shift);
                if (k2 + 1 >= 0 && size_t(k2 + 1) < route2.size()) rhs = route2[k2 + 1];
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("homology dims do not depend on the orientation choices") {
    // rebuilding from a relabeled fan permutes the chosen bases
    Fan a = FULL4();
    Fan b = Fan::from_maximal({cone2({{-1, 0}, {0, -1}}), cone2({{0, -1}, {1, 0}}),
                               cone2({{1, 0}, {0, 1}}), cone2({{0, 1}, {-1, 0}})},
                              2);
    auto ha = homology_dims(chain_complex(a, IncidenceFunction::build(a)), Q);
    auto hb = homology_dims(chain_complex(b, IncidenceFunction::build(b)), Q);
    CHECK(ha == hb);
}

TEST_CASE("euler-poincare identity") {
    std::mt19937 rng(23);
    std::vector<Fan> fans = {Q2(), OPP(), HALF(), FULL4(), random_fan3(rng)};
    for (int t = 0; t < 5; ++t) fans.push_back(Fan::of_cone(random_pointed_cone(rng, 3)));
    for (const Fan& f : fans) {
        auto cc = chain_complex(f, IncidenceFunction::build(f));
        auto h = homology_dims(cc, Q);
        long cells = 0, homs = 0;
        for (size_t k = 0; k < cc.dims.size(); ++k) {
            const long s = (k % 2 == 0) ? 1 : -1;
            cells += s * long(cc.dims[k]);
            homs += s * long(h[k]);
        }
        CHECK(cells == homs);
    }
}

TEST_CASE("exactness for random single-cone fans") {
    std::mt19937 rng(5);
    for (int t = 0; t < 12; ++t) {
        const size_t d = 2 + t % 3;
        Fan f = Fan::of_cone(random_pointed_cone(rng, d));
        auto cc = chain_complex(f, IncidenceFunction::build(f));
        CHECK(all_zero(homology_dims(cc, Q)));
        CHECK(all_zero(homology_dims(cc, FieldSpec::prime(2))));
    }
}

TEST_CASE("boundary-squared guard") {
    FiniteChainComplex bad;
    bad.lo = -1;
    bad.dims = {1, 2, 1};
    bad.diff = {{}, IMat{{Int(1), Int(1)}}, IMat{{Int(1)}, {Int(1)}}};
    CHECK_THROWS_WITH_AS(homology_dims(bad, Q), doctest::Contains("NotAComplex"), Error);
}
