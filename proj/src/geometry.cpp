#include "tubeways/geometry.hpp"

#include "tubeways/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace tubeways {

int orient(const Point& p, const Point& q, const Point& r) {
    Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return det.sign();
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (orient(s.a, s.b, p) != 0)
        return false;
    return Rational::min(s.a.x, s.b.x) <= p.x && p.x <= Rational::max(s.a.x, s.b.x) &&
           Rational::min(s.a.y, s.b.y) <= p.y && p.y <= Rational::max(s.a.y, s.b.y);
}

bool segments_properly_cross(const Segment& s, const Segment& t) {
    int o1 = orient(s.a, s.b, t.a);
    int o2 = orient(s.a, s.b, t.b);
    int o3 = orient(t.a, t.b, s.a);
    int o4 = orient(t.a, t.b, s.b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segments_intersect_closed(const Segment& s, const Segment& t) {
    if (segments_properly_cross(s, t))
        return true;
    return point_on_segment(t.a, s) || point_on_segment(t.b, s) ||
           point_on_segment(s.a, t) || point_on_segment(s.b, t);
}

Point proper_crossing_point(const Segment& s, const Segment& t) {
    Rational dx1 = s.b.x - s.a.x, dy1 = s.b.y - s.a.y;
    Rational dx2 = t.b.x - t.a.x, dy2 = t.b.y - t.a.y;
    Rational denom = dx1 * dy2 - dy1 * dx2;
    if (denom.is_zero())
        raise(Errc::Internal, "proper_crossing_point on parallel segments");
    Rational tnum = (t.a.x - s.a.x) * dy2 - (t.a.y - s.a.y) * dx2;
    Rational tt = tnum / denom;
    return Point{s.a.x + tt * dx1, s.a.y + tt * dy1};
}

Containment point_in_polygon(const Point& p, const Polygon& poly) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (point_on_segment(p, Segment{poly[i], poly[(i + 1) % n]}))
            return Containment::Boundary;
    }
    // parity of crossings of the rightward horizontal ray, half-open in y
    int crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        bool a_above = a.y > p.y;
        bool b_above = b.y > p.y;
        if (a_above == b_above)
            continue;
        Rational d = b.y - a.y;
        Rational cross = (a.x - p.x) * d + (p.y - a.y) * (b.x - a.x);
        if (cross.sign() == d.sign())
            ++crossings;
    }
    return crossings % 2 ? Containment::Inside : Containment::Outside;
}

Rational polygon_area(const Polygon& poly) {
    Rational twice(0);
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        twice += a.x * b.y - b.x * a.y;
    }
    return twice / Rational(2);
}

Rational line_y_at(const Point& a, const Point& b, const Rational& x) {
    if (a.x == b.x)
        raise(Errc::Internal, "line_y_at on vertical line");
    return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

std::vector<Interval> cross_section(const Polygon& poly, const Rational& x) {
    std::vector<Rational> ys;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if (a.x == b.x) {
            if (a.x == x) {
                ys.push_back(a.y);
                ys.push_back(b.y);
            }
            continue;
        }
        if (Rational::min(a.x, b.x) <= x && x <= Rational::max(a.x, b.x))
            ys.push_back(line_y_at(a, b, x));
    }
    if (ys.empty())
        return {};
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    std::vector<Interval> out;
    auto push = [&out](const Rational& lo, const Rational& hi) {
        if (!out.empty() && out.back().hi == lo)
            out.back().hi = hi;
        else
            out.push_back(Interval{lo, hi});
    };
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
        Point mid{x, (ys[i] + ys[i + 1]) / Rational(2)};
        if (point_in_polygon(mid, poly) != Containment::Outside)
            push(ys[i], ys[i + 1]);
    }
    // isolated touch points (e.g. the apex of a triangular tube)
    for (const Rational& y : ys) {
        bool covered = false;
        for (const Interval& iv : out)
            if (iv.contains(y)) {
                covered = true;
                break;
            }
        if (!covered && point_in_polygon(Point{x, y}, poly) != Containment::Outside)
            out.push_back(Interval{y, y});
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

bool polygon_intersection_nonempty(const Polygon& p, const Polygon& q) {
    const std::size_t np = p.size(), nq = q.size();
    for (std::size_t i = 0; i < np; ++i) {
        Segment e{p[i], p[(i + 1) % np]};
        for (std::size_t j = 0; j < nq; ++j) {
            if (segments_intersect_closed(e, Segment{q[j], q[(j + 1) % nq]}))
                return true;
        }
    }
    if (point_in_polygon(p[0], q) != Containment::Outside)
        return true;
    if (point_in_polygon(q[0], p) != Containment::Outside)
        return true;
    return false;
}

namespace {

enum class EdgePairKind { None, ProperCross, Touch, CollinearOverlap };

EdgePairKind classify_edge_pair(const Segment& e, const Segment& f) {
    int o1 = orient(e.a, e.b, f.a);
    int o2 = orient(e.a, e.b, f.b);
    int o3 = orient(f.a, f.b, e.a);
    int o4 = orient(f.a, f.b, e.b);
    if (o1 == 0 && o2 == 0) {
        // collinear lines: overlap, point touch, or nothing
        auto on = [](const Point& pt, const Segment& s) { return point_on_segment(pt, s); };
        int touches = (on(f.a, e) ? 1 : 0) + (on(f.b, e) ? 1 : 0) + (on(e.a, f) ? 1 : 0) + (on(e.b, f) ? 1 : 0);
        if (touches == 0)
            return EdgePairKind::None;
        // shared extent of positive length?
        bool same_pt = (on(f.a, e) && on(f.b, e) && f.a == f.b);
        (void)same_pt;
        // Compute 1-D overlap along the dominant axis.
        bool use_x = !(e.a.x == e.b.x);
        auto key = [use_x](const Point& pt) { return use_x ? pt.x : pt.y; };
        Rational elo = Rational::min(key(e.a), key(e.b)), ehi = Rational::max(key(e.a), key(e.b));
        Rational flo = Rational::min(key(f.a), key(f.b)), fhi = Rational::max(key(f.a), key(f.b));
        Rational lo = Rational::max(elo, flo), hi = Rational::min(ehi, fhi);
        if (lo < hi)
            return EdgePairKind::CollinearOverlap;
        return EdgePairKind::Touch;
    }
    if (o1 * o2 < 0 && o3 * o4 < 0)
        return EdgePairKind::ProperCross;
    if ((o1 == 0 && point_on_segment(f.a, e)) || (o2 == 0 && point_on_segment(f.b, e)) ||
        (o3 == 0 && point_on_segment(e.a, f)) || (o4 == 0 && point_on_segment(e.b, f)))
        return EdgePairKind::Touch;
    return EdgePairKind::None;
}

[[noreturn]] void raise_degenerate(EdgePairKind k, const Segment& e, const Segment& f) {
    std::string where = "(" + e.a.x.to_string() + "," + e.a.y.to_string() + ")-(" + e.b.x.to_string() +
                        "," + e.b.y.to_string() + ") vs (" + f.a.x.to_string() + "," + f.a.y.to_string() +
                        ")-(" + f.b.x.to_string() + "," + f.b.y.to_string() + ")";
    if (k == EdgePairKind::CollinearOverlap)
        raise(Errc::DegenerateOverlap, "boundaries share a collinear arc: " + where);
    raise(Errc::DegenerateContact, "boundary touch without proper crossing: " + where);
}

} // namespace

void check_pair_general_position(const Polygon& p, const Polygon& q) {
    const std::size_t np = p.size(), nq = q.size();
    for (std::size_t i = 0; i < np; ++i) {
        Segment e{p[i], p[(i + 1) % np]};
        for (std::size_t j = 0; j < nq; ++j) {
            Segment f{q[j], q[(j + 1) % nq]};
            EdgePairKind k = classify_edge_pair(e, f);
            if (k == EdgePairKind::Touch || k == EdgePairKind::CollinearOverlap)
                raise_degenerate(k, e, f);
        }
    }
}

int boundary_crossing_count(const Polygon& p, const Polygon& q) {
    const std::size_t np = p.size(), nq = q.size();
    int count = 0;
    for (std::size_t i = 0; i < np; ++i) {
        Segment e{p[i], p[(i + 1) % np]};
        for (std::size_t j = 0; j < nq; ++j) {
            Segment f{q[j], q[(j + 1) % nq]};
            EdgePairKind k = classify_edge_pair(e, f);
            if (k == EdgePairKind::ProperCross)
                ++count;
            else if (k == EdgePairKind::Touch || k == EdgePairKind::CollinearOverlap)
                raise_degenerate(k, e, f);
        }
    }
    return count;
}

int transversal_crossing_count(const Polygon& p, const Polygon& q) {
    const std::size_t np = p.size(), nq = q.size();
    int count = 0;
    for (std::size_t i = 0; i < np; ++i) {
        Segment e{p[i], p[(i + 1) % np]};
        for (std::size_t j = 0; j < nq; ++j) {
            if (segments_properly_cross(e, Segment{q[j], q[(j + 1) % nq]}))
                ++count;
        }
    }
    return count;
}

bool segment_in_polygon(const Segment& s, const Polygon& poly) {
    if (point_in_polygon(s.a, poly) == Containment::Outside)
        return false;
    if (point_in_polygon(s.b, poly) == Containment::Outside)
        return false;
    const std::size_t n = poly.size();
    std::vector<Rational> ts;
    ts.push_back(Rational(0));
    ts.push_back(Rational(1));
    bool vertical = s.a.x == s.b.x;
    auto param = [&](const Point& pt) {
        return vertical ? (pt.y - s.a.y) / (s.b.y - s.a.y) : (pt.x - s.a.x) / (s.b.x - s.a.x);
    };
    for (std::size_t i = 0; i < n; ++i) {
        Segment e{poly[i], poly[(i + 1) % n]};
        if (segments_properly_cross(s, e))
            return false;
        // touch points split the segment for the interior test
        if (point_on_segment(e.a, s))
            ts.push_back(param(e.a));
        if (point_on_segment(e.b, s))
            ts.push_back(param(e.b));
        if (point_on_segment(s.a, e))
            ts.push_back(Rational(0));
        if (point_on_segment(s.b, e))
            ts.push_back(Rational(1));
        // collinear overlap: endpoints already cover the breakpoints
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    Rational dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        Rational tm = (ts[i] + ts[i + 1]) / Rational(2);
        Point mid{s.a.x + tm * dx, s.a.y + tm * dy};
        if (point_in_polygon(mid, poly) == Containment::Outside)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Overlay: split both boundaries at their proper crossings and stitch the
// faces needed for difference and ear removal. Requires general position.

Overlay::Overlay(const Polygon& a, const Polygon& b) {
    if (a.size() < 3 || b.size() < 3)
        raise(Errc::Internal, "overlay needs polygons");
    const std::size_t na = a.size(), nb = b.size();

    struct Crossing {
        Point pt;
        int node;
        Rational ta; // parameter along the A edge
        Rational tb;
        std::size_t ea, eb;
    };
    std::vector<Crossing> crossings;
    for (std::size_t i = 0; i < na; ++i) {
        Segment e{a[i], a[(i + 1) % na]};
        for (std::size_t j = 0; j < nb; ++j) {
            Segment f{b[j], b[(j + 1) % nb]};
            EdgePairKind k = classify_edge_pair(e, f);
            if (k == EdgePairKind::Touch || k == EdgePairKind::CollinearOverlap)
                raise_degenerate(k, e, f);
            if (k != EdgePairKind::ProperCross)
                continue;
            Point pt = proper_crossing_point(e, f);
            auto param = [](const Segment& s, const Point& p) {
                return s.a.x == s.b.x ? (p.y - s.a.y) / (s.b.y - s.a.y) : (p.x - s.a.x) / (s.b.x - s.a.x);
            };
            crossings.push_back(Crossing{pt, static_cast<int>(crossings.size()), param(e, pt), param(f, pt), i, j});
        }
    }
    crossings_ = static_cast<int>(crossings.size());
    for (std::size_t i = 0; i < crossings.size(); ++i)
        for (std::size_t j = i + 1; j < crossings.size(); ++j)
            if (crossings[i].pt == crossings[j].pt)
                raise(Errc::DegenerateContact, "two boundary crossings coincide");

    const int node_base_a = crossings_;
    const int node_base_b = crossings_ + static_cast<int>(na);

    auto build_side = [&](const Polygon& poly, bool is_a, int vertex_node_base,
                          std::vector<SubEdge>& out) {
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            Point from = poly[i];
            Point to = poly[(i + 1) % n];
            std::vector<const Crossing*> on_edge;
            for (const auto& c : crossings)
                if ((is_a ? c.ea : c.eb) == i)
                    on_edge.push_back(&c);
            std::sort(on_edge.begin(), on_edge.end(), [&](const Crossing* x, const Crossing* y) {
                return (is_a ? x->ta : x->tb) < (is_a ? y->ta : y->tb);
            });
            Point cur = from;
            int cur_node = vertex_node_base + static_cast<int>(i);
            for (const Crossing* c : on_edge) {
                out.push_back(SubEdge{cur, c->pt, cur_node, c->node, false});
                cur = c->pt;
                cur_node = c->node;
            }
            int end_node = vertex_node_base + static_cast<int>((i + 1) % n);
            out.push_back(SubEdge{cur, to, cur_node, end_node, false});
        }
    };
    build_side(a, true, node_base_a, a_edges_);
    build_side(b, false, node_base_b, b_edges_);

    for (auto& e : a_edges_) {
        Point mid{(e.from.x + e.to.x) / Rational(2), (e.from.y + e.to.y) / Rational(2)};
        Containment c = point_in_polygon(mid, b);
        if (c == Containment::Boundary)
            raise(Errc::Internal, "overlay midpoint on boundary (general position violated)");
        e.inside_other = c == Containment::Inside;
    }
    for (auto& e : b_edges_) {
        Point mid{(e.from.x + e.to.x) / Rational(2), (e.from.y + e.to.y) / Rational(2)};
        Containment c = point_in_polygon(mid, a);
        if (c == Containment::Boundary)
            raise(Errc::Internal, "overlay midpoint on boundary (general position violated)");
        e.inside_other = c == Containment::Inside;
    }

    if (crossings_ == 0) {
        if (point_in_polygon(a[0], b) == Containment::Inside) {
            return; // A inside B: empty difference
        }
        if (point_in_polygon(b[0], a) == Containment::Inside)
            raise(Errc::HoleNotRepresentable, "difference would need a polygon with a hole");
        components_.push_back(a);
        component_edges_.emplace_back();
        for (std::size_t i = 0; i < a_edges_.size(); ++i) {
            a_edges_[i].component = 0;
            component_edges_.back().push_back({true, i});
        }
        return;
    }

    // index: next A subedge starting at node / B subedge ending at node
    std::map<int, std::size_t> a_start, b_end;
    for (std::size_t i = 0; i < a_edges_.size(); ++i)
        a_start[a_edges_[i].from_node] = i;
    for (std::size_t i = 0; i < b_edges_.size(); ++i)
        b_end[b_edges_[i].to_node] = i;

    std::vector<bool> a_used(a_edges_.size(), false), b_used(b_edges_.size(), false);
    for (std::size_t seed = 0; seed < a_edges_.size(); ++seed) {
        if (a_used[seed] || a_edges_[seed].inside_other)
            continue;
        Polygon loop;
        std::vector<std::pair<bool, std::size_t>> edges;
        int comp = static_cast<int>(components_.size());
        bool on_a = true;
        std::size_t cur = seed;
        int start_node = a_edges_[seed].from_node;
        std::size_t guard = 2 * (a_edges_.size() + b_edges_.size()) + 4;
        while (guard-- > 0) {
            if (on_a) {
                SubEdge& e = a_edges_[cur];
                if (a_used[cur] || e.inside_other)
                    raise(Errc::Internal, "overlay walk entered an invalid A subedge");
                a_used[cur] = true;
                e.component = comp;
                loop.push_back(e.from);
                edges.push_back({true, cur});
                int v = e.to_node;
                if (v == start_node)
                    break;
                if (v < crossings_) {
                    on_a = false;
                    cur = b_end.at(v);
                } else {
                    cur = a_start.at(v);
                }
            } else {
                SubEdge& e = b_edges_[cur];
                if (b_used[cur] || !e.inside_other)
                    raise(Errc::Internal, "overlay walk entered an invalid B subedge");
                b_used[cur] = true;
                e.component = comp;
                loop.push_back(e.to); // traversed reversed
                edges.push_back({false, cur});
                int v = e.from_node;
                if (v == start_node)
                    break;
                if (v < crossings_) {
                    on_a = true;
                    cur = a_start.at(v);
                } else {
                    cur = b_end.at(v);
                }
            }
        }
        if (guard == 0)
            raise(Errc::Internal, "overlay walk failed to close a loop");
        if (loop.size() < 3)
            raise(Errc::Internal, "overlay produced a degenerate loop");
        if (polygon_area(loop).sign() <= 0)
            raise(Errc::Internal, "overlay difference loop not CCW");
        components_.push_back(std::move(loop));
        component_edges_.push_back(std::move(edges));
    }
}

std::vector<Polygon> polygon_difference_components(const Polygon& p, const Polygon& q) {
    return Overlay(p, q).difference_components();
}

Polygon Overlay::remainder_of(std::size_t component_index) const {
    return remainder_without({component_index});
}

Polygon Overlay::remainder_without(const std::vector<std::size_t>& cut_components) const {
    std::vector<bool> cut(components_.size(), false);
    for (std::size_t c : cut_components) {
        if (c >= components_.size())
            raise(Errc::Internal, "bad component index");
        cut[c] = true;
    }
    // soup: A subedges outside every cut component (forward) plus the cut
    // components' B subedges (forward).
    std::map<int, std::pair<Point, int>> next; // from_node -> (from point, to_node)
    std::size_t soup = 0;
    for (const auto& e : a_edges_) {
        if (e.component >= 0 && cut[static_cast<std::size_t>(e.component)])
            continue;
        if (next.count(e.from_node))
            raise(Errc::EarSelectionFailure, "remainder boundary is not a single cycle");
        next[e.from_node] = {e.from, e.to_node};
        ++soup;
    }
    for (std::size_t ci = 0; ci < components_.size(); ++ci) {
        if (!cut[ci])
            continue;
        for (const auto& [is_a, idx] : component_edges_[ci]) {
            if (is_a)
                continue;
            const auto& e = b_edges_[idx];
            if (next.count(e.from_node))
                raise(Errc::EarSelectionFailure, "remainder boundary is not a single cycle");
            next[e.from_node] = {e.from, e.to_node};
            ++soup;
        }
    }
    if (next.empty())
        raise(Errc::EarSelectionFailure, "cut removes the whole polygon");
    Polygon loop;
    int start = next.begin()->first;
    int cur = start;
    std::size_t steps = 0;
    do {
        auto it = next.find(cur);
        if (it == next.end())
            raise(Errc::EarSelectionFailure, "remainder boundary broken");
        loop.push_back(it->second.first);
        cur = it->second.second;
        if (++steps > soup)
            raise(Errc::EarSelectionFailure, "remainder boundary has extra cycles");
    } while (cur != start);
    if (steps != soup)
        raise(Errc::EarSelectionFailure, "remainder boundary disconnected");
    // drop collinear pass-through nodes introduced by the overlay
    Polygon out;
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& prev = loop[(i + n - 1) % n];
        const Point& curp = loop[i];
        const Point& nxt = loop[(i + 1) % n];
        if (curp == prev)
            continue;
        if (orient(prev, curp, nxt) != 0)
            out.push_back(curp);
    }
    if (out.size() < 3)
        raise(Errc::EarSelectionFailure, "remainder degenerated");
    if (polygon_area(out).sign() <= 0)
        raise(Errc::Internal, "remainder polygon not CCW");
    return out;
}

} // namespace tubeways
