#pragma once

#include "tubeways/model.hpp"

#include <optional>
#include <vector>

namespace tubeways {

/// One linear constraint sum(coeff[i] * y_i) + constant >= 0 (or > 0 when
/// strict). Variables are the 2n segment endpoint heights, y_{2t} on tube t's
/// left segment and y_{2t+1} on its right.
struct LinearForm {
    std::vector<std::pair<int, Rational>> terms; // (variable, coefficient), at most 3
    Rational constant;
    bool strict = false;
};

using BranchSystem = std::vector<LinearForm>;

/// The four weak same-side disjuncts whose union covers exactly the
/// non-properly-crossing placements of the chords of tubes i and j; empty when
/// the chords can never cross (x-ranges or regions disjoint).
std::vector<std::vector<LinearForm>> pair_disjuncts(const Instance& inst, int i, int j);

/// Exact feasibility by Fourier-Motzkin elimination. Returns a rational
/// witness (midpoints of the final bound intervals) or nullopt.
std::optional<std::vector<Rational>> feasible(const BranchSystem& sys, int num_vars);

struct StraightDecision {
    bool feasible = false;
    std::optional<Solution> witness; // 2-vertex paths
    bool witness_strict = false;     // witness is strictly disjoint
    long branches_explored = 0;
    int constrained_pairs = 0;
};

/// Branch-and-prune over the per-pair disjunct choices; exponential by
/// design. `cap` bounds the number of constrained pairs (default 10,
/// overridable; CapExceeded beyond it).
StraightDecision decide_straight(const Instance& inst, int cap = 10);

/// All combinations of one candidate chord per tube that are pairwise
/// non-properly-crossing. Chords are given by their endpoint y-coordinates.
struct TubeOptions {
    std::vector<std::vector<std::pair<Rational, Rational>>> chords_per_tube; // (y_left, y_right)
};

std::vector<std::vector<int>> enumerate_discrete(const Instance& inst, const TubeOptions& options);

} // namespace tubeways
