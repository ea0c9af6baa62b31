#pragma once

#include "tubeways/classify.hpp"
#include "tubeways/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tubeways {

struct MonotoneDecision {
    bool solvable = false;
    std::vector<int> order;                      // bottom-to-top total order when solvable
    std::optional<std::pair<int, int>> full_cross; // obstruction
    std::optional<std::vector<int>> cycle;         // obstruction
};

MonotoneDecision decide_monotone(const Instance& inst);
MonotoneDecision decide_monotone(const Instance& inst, const ClassificationSummary& summary);

struct DrawResult {
    Solution solution;               // displaced, validator-clean paths
    std::vector<Polyline> pre_paths; // in draw order, before clearance displacement
    std::vector<int> order;
    Rational delta;
};

/// Greedy bottom-to-top construction along the given total order, then an
/// upward clearance displacement of rank*delta per path. Throws
/// ConstructionFailure when a path escapes its tube or the displaced solution
/// fails validation; unreachable when the order is a topological order of the
/// order graph and no pair fully crosses.
DrawResult draw_monotone(const Instance& inst, const std::vector<int>& order);

/// Clearance unit: an eighth of the minimum positive vertical feature gap of
/// the boundary-line arrangement, divided by n.
Rational clearance_delta(const Instance& inst);

/// Existential check over all n! draw orders with sound prefix pruning.
/// Independent of the order graph. Refuses n > 8.
bool oracle_monotone(const Instance& inst);

/// Internal building block shared by draw_monotone and the oracle; exposed
/// for tests that trace the greedy construction.
struct GreedyStep {
    bool ok = false;
    Polyline pre; // constructed path before displacement
    std::string fail_reason;
};
GreedyStep greedy_path(const Instance& inst, const std::vector<int>& order_prefix,
                       const std::vector<Polyline>& pre_paths, int tube_index);

} // namespace tubeways
