#include <doctest.h>

#include "support/fixtures.hpp"
#include "tubeways/earcut.hpp"
#include "tubeways/monotone.hpp"
#include "tubeways/straightline.hpp"

using namespace tubeways;

// The three figure-style corpus instances pin down the regime separations
// the deciders must reproduce.

TEST_CASE("fig7: straight infeasible, monotone solvable") {
    Instance inst = testsupport::fig7_instance();
    CHECK(!decide_straight(inst).feasible);
    MonotoneDecision md = decide_monotone(inst);
    CHECK(md.solvable);
    CHECK(oracle_monotone(inst));
    ArbitraryDecision ad = decide_arbitrary(inst);
    CHECK(ad.answer == ArbitraryDecision::Answer::Yes);
}

TEST_CASE("fig9: pairwise singles forming a cycle, arbitrary paths still work") {
    Instance inst = testsupport::fig9_cycle_instance();
    ClassificationSummary s = classify_instance(inst);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(s.relation[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].kind ==
                  PairRelation::Kind::Single);
    auto cyc = find_cycle(s.graph);
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 3);

    MonotoneDecision md = decide_monotone(inst);
    CHECK(!md.solvable);
    REQUIRE(md.cycle.has_value());
    CHECK(!md.full_cross.has_value());
    // necessity direction of the monotone theorem, checked by the oracle
    CHECK(!oracle_monotone(inst));

    ArbitraryDecision ad = decide_arbitrary(inst);
    CHECK(ad.answer == ArbitraryDecision::Answer::Yes);
    CHECK(!ad.trace.empty()); // ears had to be cut to reach pseudo-disks
    for (std::size_t i = 0; i < ad.truncated.size(); ++i)
        for (std::size_t j = i + 1; j < ad.truncated.size(); ++j)
            CHECK(transversal_crossing_count(ad.truncated[i].region, ad.truncated[j].region) <= 2);
}

TEST_CASE("fig10: cutting an ear exposes a full crossing, answer is no") {
    Instance inst = testsupport::fig10_instance();
    ClassificationSummary s = classify_instance(inst);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(s.relation[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].kind ==
                  PairRelation::Kind::Single);
    CHECK(find_cycle(s.graph).has_value());
    CHECK(!decide_monotone(inst).solvable);

    ArbitraryDecision ad = decide_arbitrary(inst);
    CHECK(ad.answer == ArbitraryDecision::Answer::No);
    CHECK(ad.trace.size() == 1); // the very first cut exposes the crossing
    REQUIRE(ad.obstruction.has_value());
}
