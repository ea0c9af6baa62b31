#pragma once

// Shared figure-style instances used across the unit and acceptance suites.

#include "tubeways/model.hpp"

namespace tubeways::testsupport {

inline VSeg fseg(std::int64_t x, std::int64_t ylo, std::int64_t yhi) {
    return VSeg{Rational(x), Rational(ylo), Rational(yhi)};
}

/// Three tubes with no straight-line solution but a monotone one: a long
/// shallow tube threaded under one steep wall and over another; any chord
/// would need slope 26/100, more than the tube allows (25/100).
inline Instance fig7_instance() {
    Instance inst;
    inst.tubes.push_back(tube_from_segments(fseg(0, 0, 20), fseg(400, 80, 100)));   // long tube
    inst.tubes.push_back(tube_from_segments(fseg(60, 120, 140), fseg(100, 22, 24))); // left wall
    inst.tubes.push_back(tube_from_segments(fseg(300, 76, 78), fseg(340, -60, -40))); // right wall
    return inst;
}

/// A hand-built monotone witness for fig7_instance (paper Fig 1(b) style).
inline Solution fig7_witness() {
    auto p = [](std::int64_t x, std::int64_t y) { return Point{Rational(x), Rational(y)}; };
    Solution sol;
    sol.paths.push_back(Polyline{{p(0, 10), p(100, 21), p(300, 79), p(400, 90)}});
    sol.paths.push_back(Polyline{{p(60, 130), p(100, 23)}});
    sol.paths.push_back(Polyline{{p(300, 77), p(340, -50)}});
    return sol;
}

/// Single-intersection pair with an ear (paper Fig 8(a) style): the poker's
/// left segment sticks through the host's top; the boundaries cross 4 times.
inline Instance fig8_pair() {
    Instance inst;
    inst.tubes.push_back(tube_from_segments(fseg(0, 0, 2), fseg(8, 6, 7)));   // host
    inst.tubes.push_back(tube_from_segments(fseg(3, 3, 5), fseg(12, 4, 6))); // poker with the ear
    return inst;
}

/// Three tubes, pairwise single intersections, order graph a directed
/// 3-cycle, still solvable with arbitrary paths (paper Fig 9(a) style).
inline Instance fig9_cycle_instance() {
    Instance inst;
    inst.tubes.push_back(tube_from_segments(fseg(0, 14, 17), fseg(14, 0, 10)));
    inst.tubes.push_back(tube_from_segments(fseg(1, -1, 11), fseg(21, 11, 13)));
    inst.tubes.push_back(tube_from_segments(fseg(12, 12, 21), fseg(20, 2, 8)));
    return inst;
}

/// Cyclic single-intersection triple where cutting the first ear exposes a
/// full crossing: no arbitrary-path solution (paper Fig 10 style).
inline Instance fig10_instance() {
    Instance inst;
    inst.tubes.push_back(tube_from_segments(fseg(8, -10, -1), fseg(19, 3, 4)));
    inst.tubes.push_back(tube_from_segments(fseg(6, -1, 11), fseg(23, -7, -6)));
    inst.tubes.push_back(tube_from_segments(fseg(9, 2, 10), fseg(11, -7, -6)));
    return inst;
}

} // namespace tubeways::testsupport
