#pragma once

#include "tubeways/classify.hpp"
#include "tubeways/model.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tubeways {

/// A tube after zero or more ear cuts: a possibly non-convex region plus the
/// surviving parts of the two anchor segments.
struct TruncatedTube {
    Polygon region;
    VSeg left_anchor;
    VSeg right_anchor;
    int origin = -1;
};

struct CutEvent {
    std::pair<int, int> pair; // the single-intersection pair, lexicographic
    int cut_tube;
    Polygon ear;
    Rational area_before;
    Rational area_after;
};

struct ArbitraryDecision {
    enum class Answer { Yes, No, Unsupported };
    Answer answer = Answer::Unsupported;
    std::optional<std::pair<int, int>> obstruction; // No: full crossing after cuts
    std::optional<std::pair<int, int>> double_pair; // Unsupported
    std::optional<int> empty_anchor_tube;           // No: an anchor was cut away
    std::vector<CutEvent> trace;
    std::vector<TruncatedTube> truncated; // final state (Yes and No outcomes)
};

struct EarcutOptions {
    /// Called after every completed cut step with the current truncated state.
    std::function<void(const std::vector<TruncatedTube>&, const CutEvent&)> on_cut;
};

/// Finds the ear of a single-intersection pair: the component of
/// closure(cut \ other) that does not contain the cut tube's non-intersecting
/// anchor. nullopt when the boundaries already cross at most twice.
std::optional<Polygon> find_ear(const TruncatedTube& cut, const TruncatedTube& other,
                                bool cut_left_anchor_intersects);

/// Removes one ear from the tube (region shrinks, anchors may shorten).
TruncatedTube cut_ear(const TruncatedTube& tube, const Polygon& ear);

/// Arbitrary-path decision by iterated ear cutting (single intersections
/// only); Unsupported when the instance has a double intersection.
ArbitraryDecision decide_arbitrary(const Instance& inst, const EarcutOptions& opts = {});

std::string arbitrary_answer_name(ArbitraryDecision::Answer a);

/// Serialization of the final truncated regions (CLI --emit-truncated).
std::string serialize_truncated(const std::vector<TruncatedTube>& tubes);

} // namespace tubeways
