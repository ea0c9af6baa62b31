#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "tubeways/earcut.hpp"
#include "tubeways/errors.hpp"
#include "tubeways/monotone.hpp"

#include <random>

using namespace tubeways;
using testsupport::fseg;

namespace {

TruncatedTube as_truncated(const Tube& t, int origin) {
    return TruncatedTube{t.region, t.left, t.right, origin};
}

} // namespace

TEST_CASE("find_ear and cut_ear on the canonical four-crossing pair") {
    Instance inst = testsupport::fig8_pair();
    const Tube& host = inst.tubes[0];
    const Tube& poker = inst.tubes[1];
    CHECK(boundary_crossing_count(host.region, poker.region) == 4);

    TruncatedTube cut = as_truncated(poker, 1);
    TruncatedTube other = as_truncated(host, 0);
    auto ear = find_ear(cut, other, /*cut_left_anchor_intersects=*/true);
    REQUIRE(ear.has_value());
    // triangle with a vertical edge on the poker's left segment
    CHECK(ear->size() == 3);
    CHECK(polygon_area(*ear) == Rational(729, 592));
    bool has_vertical_edge = false;
    for (std::size_t i = 0; i < ear->size(); ++i) {
        const Point& a = (*ear)[i];
        const Point& b = (*ear)[(i + 1) % ear->size()];
        if (a.x == b.x && a.x == Rational(3))
            has_vertical_edge = true;
    }
    CHECK(has_vertical_edge);

    TruncatedTube after = cut_ear(cut, *ear);
    CHECK(polygon_area(after.region) == polygon_area(cut.region) - polygon_area(*ear));
    CHECK(after.left_anchor.y_lo == Rational(3));
    CHECK(after.left_anchor.y_hi == Rational(31, 8)); // shortened by the ear
    CHECK(after.right_anchor.y_lo == poker.right.y_lo);
    CHECK(after.right_anchor.y_hi == poker.right.y_hi);
    CHECK(transversal_crossing_count(after.region, other.region) == 2);
    // pseudo-disk pair now: no further ear
    CHECK(!find_ear(after, other, true).has_value());
}

TEST_CASE("find_ear returns nothing for a two-crossing pair") {
    // poker fully past the host's right side: only 2 boundary crossings
    Instance inst;
    inst.tubes.push_back(tube_from_segments(fseg(0, 0, 4), fseg(8, 0, 4)));
    inst.tubes.push_back(tube_from_segments(fseg(5, 2, 6), fseg(9, 5, 9)));
    CHECK(boundary_crossing_count(inst.tubes[0].region, inst.tubes[1].region) == 2);
    CHECK(!find_ear(as_truncated(inst.tubes[1], 1), as_truncated(inst.tubes[0], 0), true).has_value());
}

TEST_CASE("decide_arbitrary: doubles unsupported, full crossings refused") {
    Instance dbl;
    dbl.tubes.push_back(tube_from_segments(fseg(0, 0, 10), fseg(9, 0, 10)));
    dbl.tubes.push_back(tube_from_segments(fseg(2, 4, 6), fseg(7, 4, 6)));
    ArbitraryDecision d = decide_arbitrary(dbl);
    CHECK(d.answer == ArbitraryDecision::Answer::Unsupported);
    REQUIRE(d.double_pair.has_value());
    CHECK(*d.double_pair == std::make_pair(0, 1));

    Instance cross;
    cross.tubes.push_back(tube_from_segments(fseg(0, 0, 1), fseg(3, 0, 1)));
    cross.tubes.push_back(tube_from_segments(fseg(1, 2, 3), fseg(2, -2, -1)));
    ArbitraryDecision d2 = decide_arbitrary(cross);
    CHECK(d2.answer == ArbitraryDecision::Answer::No);
    REQUIRE(d2.obstruction.has_value());
    CHECK(d2.trace.empty()); // the crossing is there before any cut
}

TEST_CASE("fig8 pair alone is arbitrarily solvable after one cut") {
    Instance inst = testsupport::fig8_pair();
    ArbitraryDecision d = decide_arbitrary(inst);
    CHECK(d.answer == ArbitraryDecision::Answer::Yes);
    CHECK(d.trace.size() == 1);
    CHECK(d.trace[0].cut_tube == 1);
    CHECK(d.trace[0].area_after < d.trace[0].area_before);
    REQUIRE(d.truncated.size() == 2);
    CHECK(transversal_crossing_count(d.truncated[0].region, d.truncated[1].region) <= 2);
}

TEST_CASE("monotone-solvable no-double instances are arbitrarily solvable") {
    std::mt19937 rng(1122);
    testsupport::GenOptions opt;
    opt.min_tubes = 2;
    opt.max_tubes = 6;
    opt.forbid_doubles = true;
    int yes_seen = 0;
    for (int it = 0; it < 50; ++it) {
        Instance inst = testsupport::random_instance(rng, opt);
        MonotoneDecision md = decide_monotone(inst);
        ArbitraryDecision ad = decide_arbitrary(inst);
        CAPTURE(serialize_instance(inst));
        if (md.solvable) {
            CHECK(ad.answer == ArbitraryDecision::Answer::Yes);
            ++yes_seen;
            // solution preservation: monotone paths stay inside the final
            // truncated regions
            DrawResult res = draw_monotone(inst, md.order);
            for (std::size_t i = 0; i < inst.tubes.size(); ++i) {
                const Polyline& p = res.solution.paths[i];
                const Polygon& reg = ad.truncated[i].region;
                for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k)
                    CHECK(segment_in_polygon(Segment{p.vertices[k], p.vertices[k + 1]}, reg));
            }
        }
    }
    CHECK(yes_seen > 5);
}

TEST_CASE("cuts never create doubles and strictly shrink areas") {
    std::mt19937 rng(3344);
    testsupport::GenOptions opt;
    opt.min_tubes = 3;
    opt.max_tubes = 6;
    opt.forbid_doubles = true;
    int cut_instances = 0;
    for (int it = 0; it < 60 && cut_instances < 10; ++it) {
        Instance inst = testsupport::random_instance(rng, opt);
        EarcutOptions hooks;
        bool shrink_ok = true, no_new_doubles = true;
        hooks.on_cut = [&](const std::vector<TruncatedTube>& state, const CutEvent& ev) {
            shrink_ok = shrink_ok && ev.area_after < ev.area_before;
            for (std::size_t i = 0; i < state.size(); ++i) {
                for (std::size_t j = i + 1; j < state.size(); ++j) {
                    auto hits = [&](const VSeg& s, const Polygon& reg) {
                        for (const Interval& iv : cross_section(reg, s.x))
                            if (iv.overlaps(s.y_interval()))
                                return true;
                        return false;
                    };
                    int k = (hits(state[i].left_anchor, state[j].region) ? 1 : 0) +
                            (hits(state[i].right_anchor, state[j].region) ? 1 : 0) +
                            (hits(state[j].left_anchor, state[i].region) ? 1 : 0) +
                            (hits(state[j].right_anchor, state[i].region) ? 1 : 0);
                    no_new_doubles = no_new_doubles && k <= 1;
                }
            }
        };
        ArbitraryDecision ad = decide_arbitrary(inst, hooks);
        CAPTURE(serialize_instance(inst));
        if (!ad.trace.empty())
            ++cut_instances;
        CHECK(shrink_ok);
        CHECK(no_new_doubles);
        CHECK(static_cast<int>(ad.trace.size()) <=
              4 * static_cast<int>(inst.tubes.size() * inst.tubes.size()) + 16);
        if (ad.answer == ArbitraryDecision::Answer::Yes) {
            for (std::size_t i = 0; i < ad.truncated.size(); ++i) {
                CHECK(ad.truncated[i].left_anchor.y_lo <= ad.truncated[i].left_anchor.y_hi);
                for (std::size_t j = i + 1; j < ad.truncated.size(); ++j)
                    CHECK(transversal_crossing_count(ad.truncated[i].region, ad.truncated[j].region) <= 2);
            }
        }
    }
    CHECK(cut_instances > 0);
}
