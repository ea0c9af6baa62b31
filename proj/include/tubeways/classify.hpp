#pragma once

#include "tubeways/model.hpp"

#include <optional>
#include <vector>

namespace tubeways {

/// Pairwise relation of two tubes. `upper` is the index of the tube whose
/// path is forced above the other's (for OrderedDisjoint and Single).
struct PairRelation {
    enum class Kind { NoInteraction, OrderedDisjoint, FullCross, Single, Double };
    Kind kind;
    int upper = -1;
    int seg_owner = -1;        // Single: tube owning the intersecting segment
    bool owner_left_seg = false; // Single: which of the owner's segments intersects
    Rational at_x;             // Single: x of the intersecting segment
};

const char* relation_kind_name(PairRelation::Kind k);

/// Classification per the intersection taxonomy. Throws DegenerateContact /
/// DegenerateOverlap when the pair is not in general position.
PairRelation classify_pair(const Tube& a, int ia, const Tube& b, int ib);

/// Directed edge i -> j means tube j is forced above tube i somewhere.
struct OrderGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // sorted lexicographically

    std::vector<std::vector<int>> adjacency() const;
};

/// Everything the deciders need from one classification sweep.
struct ClassificationSummary {
    std::vector<std::vector<PairRelation>> relation; // [i][j] valid for i < j
    OrderGraph graph;
    std::vector<std::pair<int, int>> full_cross_pairs; // lexicographic
    std::vector<std::pair<int, int>> double_pairs;     // lexicographic
};

ClassificationSummary classify_instance(const Instance& inst);

OrderGraph build_order_graph(const Instance& inst);

/// Lexicographically-first directed cycle by DFS from the lowest vertex with
/// ascending neighbor order; nullopt when acyclic.
std::optional<std::vector<int>> find_cycle(const OrderGraph& g);

/// Topological order (bottom tube first), lowest index first among ready
/// vertices. Precondition: acyclic.
std::vector<int> topological_order(const OrderGraph& g);

} // namespace tubeways
