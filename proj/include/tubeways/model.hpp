#pragma once

#include "tubeways/geometry.hpp"

#include <string>
#include <vector>

namespace tubeways {

/// Vertical segment region for one endpoint. y_lo == y_hi is a point region.
struct VSeg {
    Rational x;
    Rational y_lo;
    Rational y_hi;

    bool is_point() const { return y_lo == y_hi; }
    Segment as_segment() const { return Segment{Point{x, y_lo}, Point{x, y_hi}}; }
    Interval y_interval() const { return Interval{y_lo, y_hi}; }
};

/// Convex hull of two vertical segments. `region` is kept CCW with 3 or 4
/// vertices, starting at the bottom-left corner.
struct Tube {
    VSeg left;
    VSeg right;
    Polygon region;

    Interval x_range() const { return Interval{left.x, right.x}; }
    /// Bottom side of the tube: the segment from the left segment's low end to
    /// the right segment's low end.
    Segment bottom() const { return Segment{Point{left.x, left.y_lo}, Point{right.x, right.y_lo}}; }
    Segment top() const { return Segment{Point{left.x, left.y_hi}, Point{right.x, right.y_hi}}; }
};

Tube tube_from_segments(const VSeg& left, const VSeg& right);

struct Instance {
    std::vector<Tube> tubes;

    std::size_t size() const { return tubes.size(); }
};

/// Parses the instance JSON document; enforces the general-position rule
/// (all 2n segment x-coordinates pairwise distinct).
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

struct Polyline {
    std::vector<Point> vertices; // >= 2, consecutive distinct
};

struct Solution {
    std::vector<Polyline> paths; // index-aligned with the instance tubes
};

Solution parse_solution(const std::string& text);
std::string serialize_solution(const Solution& sol);

enum class PathMode { Straight, Monotone, Arbitrary };

const char* path_mode_name(PathMode m);

struct Violation {
    enum class Kind {
        PathCount,
        TooFewVertices,
        RepeatedVertex,
        EndpointOffSegment,
        OutsideTube,
        WrongVertexCount, // straight mode requires exactly 2
        NotMonotone,
        PathsCross, // proper crossing between two paths
        PathsTouch, // shared point without a proper crossing
    };
    Kind kind;
    int path_a = -1;
    int path_b = -1;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks a solution against the instance: endpoints on the segments, full
/// containment in the closed tube regions, per-mode shape restrictions, and
/// strict pairwise disjointness of the paths as point sets.
ValidationReport validate_solution(const Instance& inst, const Solution& sol, PathMode mode);

/// Rejects instances whose tubes are pairwise degenerate (shared boundary
/// arcs, vertex-on-boundary contact). The classifier and the deciders need
/// this; the straight-line machinery does not.
void check_instance_general_position(const Instance& inst);

std::string violation_to_string(const Violation& v);

} // namespace tubeways
