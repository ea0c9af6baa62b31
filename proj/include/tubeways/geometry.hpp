#pragma once

#include "tubeways/rational.hpp"

#include <optional>
#include <vector>

namespace tubeways {

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

struct Segment {
    Point a;
    Point b;
};

struct Interval {
    Rational lo;
    Rational hi; // invariant lo <= hi

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

/// Simple polygon, CCW vertex order, >= 3 vertices. Construction does not
/// verify simplicity; the factory helpers that build tubes guarantee it.
using Polygon = std::vector<Point>;

/// Sign of the orientation determinant of (p, q, r):
/// +1 left turn, 0 collinear, -1 right turn.
int orient(const Point& p, const Point& q, const Point& r);

/// Strictly interior-to-both crossing (mutual strict straddle).
bool segments_properly_cross(const Segment& s, const Segment& t);

/// Closed-set intersection test: endpoint touch and collinear overlap count.
bool segments_intersect_closed(const Segment& s, const Segment& t);

/// Proper transversal crossing point of two segments; requires that they
/// properly cross.
Point proper_crossing_point(const Segment& s, const Segment& t);

enum class Containment { Outside, Boundary, Inside };

Containment point_in_polygon(const Point& p, const Polygon& poly);

bool point_on_segment(const Point& p, const Segment& s);

Rational polygon_area(const Polygon& poly); // positive for CCW

/// y-intervals of poly cut by the vertical line at x, ascending and disjoint.
std::vector<Interval> cross_section(const Polygon& poly, const Rational& x);

/// Closed-region intersection test, boundary touch included. Never throws on
/// degenerate contact; callers that need general position use
/// check_pair_general_position first.
bool polygon_intersection_nonempty(const Polygon& p, const Polygon& q);

/// Throws DegenerateOverlap / DegenerateContact when the two boundaries share
/// a positive-length arc or touch at a vertex / tangency. After this passes,
/// every boundary intersection is a proper transversal crossing of two edge
/// interiors.
void check_pair_general_position(const Polygon& p, const Polygon& q);

/// Number of transversal crossings of the two boundaries. Degenerate contact
/// throws, as in check_pair_general_position.
int boundary_crossing_count(const Polygon& p, const Polygon& q);

/// Proper transversal crossings only; tolerant of shared arcs and touches
/// (counts neither). Used on truncated tubes, whose boundaries legitimately
/// run along their cutters'.
int transversal_crossing_count(const Polygon& p, const Polygon& q);

/// Connected components of closure(P \ Q), each a CCW simple polygon.
/// Preconditions: general position (see check_pair_general_position). Q
/// strictly inside P would need a hole and throws HoleNotRepresentable.
std::vector<Polygon> polygon_difference_components(const Polygon& p, const Polygon& q);

/// Difference components of (A \ B) plus, for each component, the machinery
/// needed to cut it back out of A exactly (shared overlay). `remainder_of`
/// rebuilds closure(A \ component[i]) as one simple polygon.
class Overlay {
public:
    Overlay(const Polygon& a, const Polygon& b); // throws on degeneracy

    int crossing_count() const { return crossings_; }
    const std::vector<Polygon>& difference_components() const { return components_; }
    /// closure(A minus difference component i); throws EarSelectionFailure if
    /// the remainder is not a single simple polygon.
    Polygon remainder_of(std::size_t component_index) const;
    /// closure(A minus the union of the given difference components).
    Polygon remainder_without(const std::vector<std::size_t>& cut_components) const;

private:
    struct SubEdge {
        Point from;
        Point to;
        int from_node; // node ids shared between the two boundaries at crossings
        int to_node;
        bool inside_other;
        int component = -1; // difference component using this subedge (A-side), or -1
    };
    std::vector<SubEdge> a_edges_; // A boundary split at crossings, CCW order
    std::vector<SubEdge> b_edges_; // B boundary split at crossings, CCW order
    std::vector<Polygon> components_;
    std::vector<std::vector<std::pair<bool, std::size_t>>> component_edges_; // (is_a_side, idx)
    int crossings_ = 0;
};

/// Whether every point of the segment lies in the closed polygon. Exact; the
/// polygon may be non-convex.
bool segment_in_polygon(const Segment& s, const Polygon& poly);

/// Intersection point of a non-vertical line through (a, b) with the vertical
/// line at x.
Rational line_y_at(const Point& a, const Point& b, const Rational& x);

} // namespace tubeways
