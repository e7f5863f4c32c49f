#pragma once

#include "tfr/fan.hpp"

#include <random>

// Standard desk-scale fans used across the test suites.
namespace testfans {

using tfr::Cone;
using tfr::Fan;
using tfr::IMat;
using tfr::Int;
using tfr::IVec;

inline IVec v(std::initializer_list<long> xs) {
    IVec r;
    for (long x : xs) r.emplace_back(x);
    return r;
}

inline Cone cone2(std::initializer_list<std::initializer_list<long>> gens) {
    IMat m;
    for (auto g : gens) m.push_back(v(g));
    return Cone::from_generators(m, 2);
}

inline Cone cone_d(std::initializer_list<std::initializer_list<long>> gens, size_t d) {
    IMat m;
    for (auto g : gens) m.push_back(v(g));
    return Cone::from_generators(m, d);
}

// First quadrant as a one-cone fan (4 cones).
inline Fan Q2() { return Fan::of_cone(cone2({{1, 0}, {0, 1}})); }

// Quadrants I and III meeting only at the origin (7 cones, not shellable).
inline Fan OPP() {
    return Fan::from_maximal({cone2({{1, 0}, {0, 1}}), cone2({{-1, 0}, {0, -1}})}, 2);
}

// Upper half plane split along the y-axis (K[x,y,z]/(xz)).
inline Fan HALF() {
    return Fan::from_maximal({cone2({{1, 0}, {0, 1}}), cone2({{0, 1}, {-1, 0}})}, 2);
}

// All four quadrants (complete fan in R^2).
inline Fan FULL4() {
    return Fan::from_maximal({cone2({{1, 0}, {0, 1}}), cone2({{0, 1}, {-1, 0}}),
                              cone2({{-1, 0}, {0, -1}}), cone2({{0, -1}, {1, 0}})},
                             2);
}

// Deterministically seeded random pointed cone in dimension d.
inline Cone random_pointed_cone(std::mt19937& rng, size_t d) {
    std::uniform_int_distribution<int> coord(0, 4);
    std::uniform_int_distribution<size_t> count(1, d + 1);
    while (true) {
        IMat gens;
        const size_t n = count(rng);
        for (size_t i = 0; i < n; ++i) {
            IVec g(d);
            bool nonzero = false;
            for (size_t j = 0; j < d; ++j) {
                g[j] = coord(rng);
                if (g[j] != 0) nonzero = true;
            }
            if (nonzero) gens.push_back(g);
        }
        if (gens.empty()) continue;
        try {
            Cone c = Cone::from_generators(gens, d);
            if (c.dim() >= 1) return c;
        } catch (const tfr::Error&) {
            continue;  // nonneg coords never trip NotPointed, but keep the guard
        }
    }
}

// A random 3-dimensional fan: a nonempty subset of the coordinate octants
// (any subset glues along faces).
inline Fan random_fan3(std::mt19937& rng) {
    std::uniform_int_distribution<int> mask(1, 255);
    const int m = mask(rng);
    std::vector<Cone> maxc;
    for (int o = 0; o < 8; ++o) {
        if (!(m & (1 << o))) continue;
        IMat gens;
        for (size_t j = 0; j < 3; ++j) {
            IVec g(3);
            g[j] = (o & (1 << j)) ? -1 : 1;
            gens.push_back(g);
        }
        maxc.push_back(Cone::from_generators(gens, 3));
    }
    return Fan::from_maximal(maxc, 3);
}

// Eight unit-ish directions around the origin, counterclockwise.
inline IVec ray8(size_t i) {
    static const long R[8][2] = {{1, 0},  {1, 1},   {0, 1},  {-1, 1},
                                 {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    return v({R[i % 8][0], R[i % 8][1]});
}

// Fan of k consecutive plane sectors starting at (1,0); k = 8 is complete.
// Always shellable in file order.
inline Fan sector_fan(size_t k) {
    std::vector<Cone> maxc;
    for (size_t i = 0; i < k; ++i)
        maxc.push_back(Cone::from_generators({ray8(i), ray8(i + 1)}, 2));
    return Fan::from_maximal(maxc, 2);
}

// Pure shellable fans in dimensions 2 and 3.
inline std::vector<Fan> shellable_pure_fans() {
    std::vector<Fan> fs;
    for (size_t k = 1; k <= 8; ++k) fs.push_back(sector_fan(k));
    fs.push_back(Fan::of_cone(cone_d({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3)));
    fs.push_back(Fan::from_maximal({cone_d({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3),
                                    cone_d({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}, 3)},
                                   3));
    return fs;
}

// Non-pure shellable fans: sectors plus rays touching them only at the
// origin (big cones first is a valid shelling), plus two 3-d variants.
inline std::vector<Fan> nonpure_shellable_fans() {
    std::vector<Fan> fs;
    for (size_t k = 1; k <= 5; ++k) {
        std::vector<Cone> maxc;
        for (size_t i = 0; i < k; ++i)
            maxc.push_back(Cone::from_generators({ray8(i), ray8(i + 1)}, 2));
        maxc.push_back(Cone::from_generators({ray8(k + 2)}, 2));
        fs.push_back(Fan::from_maximal(maxc, 2));
    }
    for (size_t k = 1; k <= 3; ++k) {
        std::vector<Cone> maxc;
        for (size_t i = 0; i < k; ++i)
            maxc.push_back(Cone::from_generators({ray8(i), ray8(i + 1)}, 2));
        maxc.push_back(Cone::from_generators({ray8(k + 2)}, 2));
        maxc.push_back(Cone::from_generators({ray8(k + 4)}, 2));
        fs.push_back(Fan::from_maximal(maxc, 2));
    }
    fs.push_back(Fan::from_maximal({cone_d({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3),
                                    cone_d({{0, 0, -1}}, 3)},
                                   3));
    fs.push_back(Fan::from_maximal({cone_d({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3),
                                    cone_d({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}, 3),
                                    cone_d({{-1, 0, 0}}, 3)},
                                   3));
    return fs;
}

}  // namespace testfans
