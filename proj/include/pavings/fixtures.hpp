#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "map2d.hpp"
#include "paving.hpp"
#include "permutation.hpp"

// Reference objects used by tests and the verification suite: the five
// smallest pavings, the 24-dart two-tetrahedra paving, two small maps for
// the mirror construction, and the vendored OEIS sequence prefixes.

namespace pavings::fixtures {

namespace detail {

inline Permutation perm1(std::vector<int> one_based) {
    for (int& v : one_based) --v;
    return Permutation(std::move(one_based));
}

} // namespace detail

// P1: the unique 2-dart paving, alpha = beta = gamma = (1 2).
inline Paving p1() {
    return paving_from_involutions(detail::perm1({2, 1}), detail::perm1({2, 1}),
                                   detail::perm1({2, 1}));
}

// The four 4-dart pavings, in canonical order.
inline Paving p2() {
    return paving_from_involutions(detail::perm1({2, 1, 4, 3}), detail::perm1({2, 1, 4, 3}),
                                   detail::perm1({3, 4, 1, 2}));
}

inline Paving p3() {
    return paving_from_involutions(detail::perm1({2, 1, 4, 3}), detail::perm1({3, 4, 1, 2}),
                                   detail::perm1({2, 1, 4, 3}));
}

inline Paving p4() {
    return paving_from_involutions(detail::perm1({2, 1, 4, 3}), detail::perm1({3, 4, 1, 2}),
                                   detail::perm1({3, 4, 1, 2}));
}

inline Paving p5() {
    return paving_from_involutions(detail::perm1({2, 1, 4, 3}), detail::perm1({3, 4, 1, 2}),
                                   detail::perm1({4, 3, 2, 1}));
}

// Thurston's 24-dart paving: a 12-dart map doubled with a reflected copy
// (dart 12+i stands in for the reflection of dart i), glued by phi. The
// underlying map splits into two tetrahedral spheres (4 vertices, 6 edges,
// 4 faces each). Stats: f = (1, 2, 4, 2), complexity -1, |Aut| = 4.
inline Paving thurston() {
    const Permutation alpha = detail::perm1({2,  1,  4,  3,  6,  5,  8,  7,  10, 9,  12, 11,
                                             14, 13, 16, 15, 18, 17, 20, 19, 22, 21, 24, 23});
    const Permutation sigma = detail::perm1({5,  9,  1,  11, 3,  7,  12, 2,  8,  4,  10, 6,
                                             17, 21, 13, 23, 15, 19, 24, 14, 20, 16, 22, 18});
    const Permutation phi = detail::perm1({24, 16, 13, 23, 18, 20, 17, 22, 19, 21, 14, 15,
                                           12, 4,  1,  11, 6,  8,  5,  10, 7,  9,  2,  3});
    return paving_from_quadruple(alpha, sigma, phi);
}

// Sphere with a single loop edge: 2 darts, sigma = alpha = (1 2), so one
// vertex, 1 edge, 2 faces, chi = 2. Mirror-doubles to a paving isomorphic
// to P4.
inline Map2D map_single_edge() {
    return Map2D(detail::perm1({2, 1}), detail::perm1({2, 1}));
}

// Genus-1 map on 4 darts: alpha = (1 2)(3 4), sigma = (1 3 2 4).
inline Map2D map_torus() {
    return Map2D(detail::perm1({2, 1, 4, 3}), detail::perm1({3, 4, 2, 1}));
}

// Rooted counts a(n) = number of rooted pavings on 2n darts, n = 1..19
// (OEIS A005411 prefix; terms beyond 12 regenerated by the recurrence and
// cross-checked against the Hadamard/log pipeline).
inline const std::vector<std::string>& a005411() {
    static const std::vector<std::string> v = {
        "1",
        "4",
        "25",
        "208",
        "2146",
        "26368",
        "375733",
        "6092032",
        "110769550",
        "2232792064",
        "49426061818",
        "1192151302144",
        "31123028996164",
        "874428204384256",
        "26308967412122125",
        "843984969276915712",
        "28757604639850111894",
        "1037239628039528906752",
        "39481325230750749160462",
    };
    return v;
}

// Unlabeled counts a(n) = number of pavings on 2n darts up to isomorphism,
// n = 1..10 (OEIS A002831 prefix; that sequence's a(0) = 1 counts the empty
// structure and is omitted — the connected series has no constant term).
inline const std::vector<std::string>& a002831() {
    static const std::vector<std::string> v = {
        "1", "4", "11", "60", "318", "2806", "29359", "396196", "6231794", "112137138",
    };
    return v;
}

} // namespace pavings::fixtures
