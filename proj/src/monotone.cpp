#include "tubeways/monotone.hpp"

#include "tubeways/errors.hpp"

#include <algorithm>

namespace tubeways {

namespace {

// Vertical extent of a weak-monotone polyline at x, or nullopt outside its
// x-domain. A single value unless the polyline has a vertical piece at x.
std::optional<Interval> path_at(const Polyline& path, const Rational& x) {
    const auto& v = path.vertices;
    if (v.empty() || x < v.front().x || x > v.back().x)
        return std::nullopt;
    std::optional<Interval> out;
    auto add = [&out](const Rational& y) {
        if (!out)
            out = Interval{y, y};
        else {
            if (y < out->lo)
                out->lo = y;
            if (y > out->hi)
                out->hi = y;
        }
    };
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[i + 1];
        if (a.x == b.x) {
            if (a.x == x) {
                add(a.y);
                add(b.y);
            }
            continue;
        }
        if (a.x <= x && x <= b.x)
            add(line_y_at(a, b, x));
    }
    if (!out && v.front().x == x)
        add(v.front().y);
    return out;
}

struct Carrier {
    enum class Kind { Bottom, Path } kind = Kind::Bottom;
    int path = -1;        // index into pre_paths (draw rank)
    std::size_t piece = 0; // current piece of that path
};

// First point at x >= from_x where `path` rises through the bottom line of
// the tube; used while the greedy rides the bottom side.
struct RiseEvent {
    Rational x;
    Rational y;
    std::size_t piece;
};

std::optional<RiseEvent> first_rise(const Polyline& path, const Point& bl, const Point& br,
                                    const Rational& from_x, const Rational& until_x) {
    const auto& v = path.vertices;
    auto ell = [&](const Rational& x) { return line_y_at(bl, br, x); };
    std::optional<RiseEvent> best;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[i + 1];
        if (a.x == b.x) {
            // a rising vertical can shoot up through the bottom line
            if (b.y > a.y && a.x >= from_x && a.x <= until_x) {
                Rational e = ell(a.x);
                if (a.y <= e && e < b.y) {
                    RiseEvent ev{a.x, e, i};
                    if (!best || ev.x < best->x)
                        best = ev;
                }
            }
            continue;
        }
        if (b.x <= from_x || a.x > until_x)
            continue;
        Rational ha = a.y - ell(a.x);
        Rational hb = b.y - ell(b.x);
        if (!(hb.sign() > 0))
            continue;
        if (ha.sign() > 0)
            continue; // already above at the piece start
        // ha <= 0 < hb: the zero sits on this piece
        Rational zx = ha.is_zero() ? a.x : a.x + (b.x - a.x) * (-ha) / (hb - ha);
        if (zx < from_x || zx > until_x)
            continue;
        RiseEvent ev{zx, ell(zx), i};
        if (!best || ev.x < best->x)
            best = ev;
    }
    return best;
}

struct ClearanceUnits {
    Rational dy; // vertical displacement unit
    Rational dx; // horizontal nudge unit for climb verticals
};

ClearanceUnits clearance_units(const Instance& inst) {
    const std::size_t n = inst.tubes.size();
    struct Line {
        Point a, b;
    };
    std::vector<Line> lines;
    std::vector<Rational> xs;
    std::vector<std::pair<Rational, Rational>> seg_endpoints; // (x, y)
    for (const Tube& t : inst.tubes) {
        lines.push_back({Point{t.left.x, t.left.y_lo}, Point{t.right.x, t.right.y_lo}});
        lines.push_back({Point{t.left.x, t.left.y_hi}, Point{t.right.x, t.right.y_hi}});
        for (const VSeg* s : {&t.left, &t.right}) {
            xs.push_back(s->x);
            seg_endpoints.push_back({s->x, s->y_lo});
            seg_endpoints.push_back({s->x, s->y_hi});
        }
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Rational dx1 = lines[i].b.x - lines[i].a.x, dy1 = lines[i].b.y - lines[i].a.y;
            Rational dx2 = lines[j].b.x - lines[j].a.x, dy2 = lines[j].b.y - lines[j].a.y;
            Rational denom = dy1 * dx2 - dy2 * dx1;
            if (denom.is_zero())
                continue; // parallel
            Rational c1 = lines[i].a.y * dx1 - lines[i].a.x * dy1; // dx*y - dy*x = c
            Rational c2 = lines[j].a.y * dx2 - lines[j].a.x * dy2;
            Rational x = (c2 * dx1 - c1 * dx2) / denom;
            xs.push_back(x);
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::optional<Rational> min_gap;
    for (const Rational& x : xs) {
        std::vector<Rational> ys;
        for (const Line& ln : lines)
            ys.push_back(line_y_at(ln.a, ln.b, x));
        for (const auto& [sx, sy] : seg_endpoints)
            if (sx == x)
                ys.push_back(sy);
        std::sort(ys.begin(), ys.end());
        for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
            Rational gap = ys[i + 1] - ys[i];
            if (gap.sign() > 0 && (!min_gap || gap < *min_gap))
                min_gap = gap;
        }
    }
    std::optional<Rational> min_xgap;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        Rational gap = xs[i + 1] - xs[i];
        if (gap.sign() > 0 && (!min_xgap || gap < *min_xgap))
            min_xgap = gap;
    }
    Rational denom(8 * static_cast<std::int64_t>(std::max<std::size_t>(n, 1)));
    ClearanceUnits u;
    u.dy = (min_gap ? *min_gap : Rational(1)) / denom;
    u.dx = (min_xgap ? *min_xgap : Rational(1)) / denom;
    return u;
}

} // namespace

Rational clearance_delta(const Instance& inst) { return clearance_units(inst).dy; }

GreedyStep greedy_path(const Instance& inst, const std::vector<int>& order_prefix,
                       const std::vector<Polyline>& pre_paths, int tube_index) {
    const Tube& tube = inst.tubes[static_cast<std::size_t>(tube_index)];
    const Point bl{tube.left.x, tube.left.y_lo};
    const Point br{tube.right.x, tube.right.y_lo};
    const Point tl{tube.left.x, tube.left.y_hi};
    const Point tr{tube.right.x, tube.right.y_hi};
    const Rational& xl = tube.left.x;
    const Rational& xr = tube.right.x;
    (void)order_prefix;

    GreedyStep out;
    auto fail = [&](const std::string& why) {
        out.ok = false;
        out.fail_reason = why;
        return out;
    };
    auto inside = [&](const Point& p) { return point_in_polygon(p, tube.region) != Containment::Outside; };
    auto ell = [&](const Rational& x) { return line_y_at(bl, br, x); };
    auto top = [&](const Rational& x) { return line_y_at(tl, tr, x); };

    Polyline path;
    auto append = [&](const Point& p) {
        if (!path.vertices.empty() && path.vertices.back() == p)
            return true;
        if (!inside(p))
            return false;
        path.vertices.push_back(p);
        return true;
    };

    // start: highest intersection of the left segment with an earlier path
    Rational start_y = tube.left.y_lo;
    Carrier carrier;
    for (std::size_t j = 0; j < pre_paths.size(); ++j) {
        auto iv = path_at(pre_paths[j], xl);
        if (!iv)
            continue;
        Rational hi = Rational::min(iv->hi, tube.left.y_hi);
        Rational lo = Rational::max(iv->lo, tube.left.y_lo);
        if (lo > hi)
            continue;
        if (carrier.kind == Carrier::Kind::Bottom || hi >= start_y) {
            start_y = hi;
            carrier.kind = Carrier::Kind::Path;
            carrier.path = static_cast<int>(j);
        }
    }
    Point cur{xl, start_y};
    if (!append(cur))
        return fail("start point outside tube");

    auto locate_on = [&](int k, const Point& p) -> std::size_t {
        const auto& v = pre_paths[static_cast<std::size_t>(k)].vertices;
        std::size_t found = v.size();
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (point_on_segment(p, Segment{v[i], v[i + 1]}))
                found = i; // prefer the later piece when p is a shared vertex
        if (found == v.size())
            raise(Errc::Internal, "greedy position not on its carrier path");
        return found;
    };
    if (carrier.kind == Carrier::Kind::Path)
        carrier.piece = locate_on(carrier.path, cur);

    // climb events: earlier paths that begin inside this tube, above us
    std::vector<bool> start_done(pre_paths.size(), false);
    for (std::size_t j = 0; j < pre_paths.size(); ++j) {
        const Rational& sx = pre_paths[j].vertices.front().x;
        if (sx <= xl || sx > xr)
            start_done[j] = true;
    }
    auto next_start = [&](const Rational& after) -> std::optional<std::pair<Rational, int>> {
        std::optional<std::pair<Rational, int>> best;
        for (std::size_t j = 0; j < pre_paths.size(); ++j) {
            if (start_done[j])
                continue;
            const Rational& sx = pre_paths[j].vertices.front().x;
            if (sx <= after)
                continue;
            if (!best || sx < best->first)
                best = {sx, static_cast<int>(j)};
        }
        return best;
    };

    // Climb from (x, level) toward path j's start point; stops at the lowest
    // intervening path. Appends nothing when no climb is needed.
    enum class Climb { Failed, Climbed, Skipped };
    auto climb_at = [&](const Rational& x, int start_j, const Rational& level) -> Climb {
        Rational target = pre_paths[static_cast<std::size_t>(start_j)].vertices.front().y;
        start_done[static_cast<std::size_t>(start_j)] = true;
        if (target <= level)
            return Climb::Skipped; // the start is at or below us
        if (target > top(x))
            return Climb::Skipped; // starts above this tube: pass underneath
        int ride = start_j;
        for (std::size_t k = 0; k < pre_paths.size(); ++k) {
            if (static_cast<int>(k) == start_j)
                continue;
            auto iv = path_at(pre_paths[k], x);
            if (!iv || iv->hi <= level)
                continue;
            // lowest reachable point of path k at x without crossing it
            Rational low = iv->lo > level ? iv->lo : level;
            if (low < target || (low == target && static_cast<int>(k) > ride)) {
                target = low;
                ride = static_cast<int>(k);
            }
        }
        if (!append(Point{x, level}) || !append(Point{x, target}))
            return Climb::Failed;
        carrier.kind = Carrier::Kind::Path;
        carrier.path = ride;
        carrier.piece = locate_on(ride, Point{x, target});
        return Climb::Climbed;
    };

    const std::size_t step_guard = 64 * (pre_paths.size() + 2) * (pre_paths.size() + 2) + 256;
    std::size_t steps = 0;

    auto drop_down = [&](const Rational& dx, const Rational& dy) -> bool {
        // land on the highest structure at or below (dx, dy) that continues
        // rightward; paths win ties against the bottom side, higher rank wins
        // among paths
        Rational best = ell(dx);
        if (best > dy)
            return false; // below the bottom side: the greedy has escaped
        int best_path = -1;
        for (std::size_t k = 0; k < pre_paths.size(); ++k) {
            if (pre_paths[k].vertices.back().x <= dx)
                continue; // exhausted: riding it cannot progress
            auto iv = path_at(pre_paths[k], dx);
            if (!iv || iv->lo > dy)
                continue;
            Rational cand = Rational::min(iv->hi, dy);
            if (cand < best)
                continue;
            if (cand > best || best_path < static_cast<int>(k)) {
                best = cand;
                best_path = static_cast<int>(k);
            }
        }
        if (!append(Point{dx, best}))
            return false;
        Carrier next;
        if (best_path >= 0) {
            next.kind = Carrier::Kind::Path;
            next.path = best_path;
            next.piece = locate_on(best_path, Point{dx, best});
        }
        carrier = next;
        return true;
    };

    while (true) {
        if (++steps > step_guard)
            raise(Errc::Internal, "greedy construction did not terminate");
        Point pos = path.vertices.back();
        if (pos.x == xr)
            break;

        if (carrier.kind == Carrier::Kind::Bottom) {
            std::optional<RiseEvent> best;
            int best_path = -1;
            for (std::size_t k = 0; k < pre_paths.size(); ++k) {
                auto ev = first_rise(pre_paths[k], bl, br, pos.x, xr);
                if (!ev)
                    continue;
                if (ev->x == pos.x && ev->y != pos.y)
                    continue;
                if (ev->x < pos.x)
                    continue;
                if (!best || ev->x < best->x || (ev->x == best->x && static_cast<int>(k) > best_path)) {
                    best = ev;
                    best_path = static_cast<int>(k);
                }
            }
            auto st = next_start(pos.x);
            if (st && (!best || st->first < best->x)) {
                Climb c = climb_at(st->first, st->second, ell(st->first));
                if (c == Climb::Failed)
                    return fail("climb leaves the tube");
                continue; // Skipped: same carrier, the start is marked done
            }
            if (!best) {
                if (!append(Point{xr, ell(xr)}))
                    return fail("bottom side leaves the tube");
                break;
            }
            if (!append(Point{best->x, best->y}))
                return fail("rise point outside tube");
            carrier.kind = Carrier::Kind::Path;
            carrier.path = best_path;
            carrier.piece = best->piece;
            continue;
        }

        // riding an earlier path
        const auto& pv = pre_paths[static_cast<std::size_t>(carrier.path)].vertices;
        if (carrier.piece + 1 >= pv.size()) {
            // carrier exhausted at its final vertex: drop
            if (!drop_down(pos.x, pos.y))
                return fail("drop from a path end leaves the tube");
            continue;
        }
        const Point& b = pv[carrier.piece + 1];
        if (b.x <= pos.x && b == pos) {
            ++carrier.piece;
            continue;
        }
        Segment sub{pos, b};
        bool vertical = sub.a.x == sub.b.x;

        // event: reaching the tube's right side
        std::optional<Point> end_event;
        if (!vertical && sub.a.x < xr && xr <= sub.b.x)
            end_event = Point{xr, line_y_at(sub.a, sub.b, xr)};

        // event: hitting the bottom side from above (h falling through zero)
        std::optional<Point> bottom_event;
        if (vertical) {
            Rational e = ell(sub.a.x);
            if (sub.b.y < sub.a.y && sub.b.y <= e && e <= sub.a.y)
                bottom_event = Point{sub.a.x, e};
        } else if (sub.a.x < sub.b.x) {
            Rational ha = sub.a.y - ell(sub.a.x);
            Rational hb = sub.b.y - ell(sub.b.x);
            if ((ha.sign() > 0 && hb.sign() <= 0) || (ha.is_zero() && hb.sign() < 0)) {
                Rational zx = sub.a.x + (sub.b.x - sub.a.x) * ha / (ha - hb);
                bottom_event = Point{zx, ell(zx)};
            }
        }

        // event: an earlier path starts inside the tube ahead of us
        std::optional<std::pair<Rational, int>> start_event;
        if (!vertical) {
            auto st = next_start(pos.x);
            if (st && st->first <= sub.b.x && st->first <= xr)
                start_event = st;
        }

        // earliest event wins; the carrier piece end is the fallback
        struct Pending {
            Rational x;
            int kind; // 0 end, 1 bottom, 2 start
        };
        std::optional<Pending> first;
        auto consider = [&](const Rational& x, int kind) {
            if (!first || x < first->x || (x == first->x && kind < first->kind))
                first = Pending{x, kind};
        };
        if (end_event)
            consider(end_event->x, 0);
        if (bottom_event)
            consider(bottom_event->x, 1);
        if (start_event)
            consider(start_event->first, 2);

        if (first && first->kind == 0) {
            if (!append(*end_event))
                return fail("carrier leaves the tube at its right side");
            break;
        }
        if (first && first->kind == 1) {
            if (!append(*bottom_event))
                return fail("bottom hit outside tube");
            carrier.kind = Carrier::Kind::Bottom;
            continue;
        }
        if (first && first->kind == 2) {
            Rational sx = start_event->first;
            Rational sy = line_y_at(sub.a, sub.b, sx);
            Climb c = climb_at(sx, start_event->second, sy);
            if (c == Climb::Failed)
                return fail("climb leaves the tube");
            continue; // Skipped: stay on this carrier piece
        }
        if (!append(b))
            return fail("carrier leaves the tube");
        ++carrier.piece;
    }

    // arrival must be on the right segment
    Point last = path.vertices.back();
    if (last.x != xr || last.y < tube.right.y_lo || last.y > tube.right.y_hi)
        return fail("arrival off the right segment");
    out.ok = true;
    out.pre = std::move(path);
    return out;
}

namespace {

// Clearance displacement: shift the whole path up by rank*dy. Vertical pieces
// additionally move sideways by rank*dx with a short horizontal connector --
// climbs to the left (before the started path exists), drops to the right
// (after the followed path has ended) -- so paths sharing vertical structure
// stay strictly disjoint.
Polyline displace(const Polyline& pre, int rank, const ClearanceUnits& u) {
    Rational dy = Rational(rank) * u.dy;
    Rational dx = Rational(rank) * u.dx;
    Polyline out;
    const auto& v = pre.vertices;
    auto push = [&out](const Point& p) {
        if (out.vertices.empty() || !(out.vertices.back() == p))
            out.vertices.push_back(p);
    };
    for (std::size_t i = 0; i < v.size(); ++i) {
        Point p{v[i].x, v[i].y + dy};
        bool vertical_next = i + 1 < v.size() && v[i + 1].x == v[i].x;
        if (vertical_next && rank > 0) {
            if (v[i + 1].y > v[i].y && i > 0 && !out.vertices.empty() &&
                out.vertices.back().x < v[i].x - dx) {
                // climb: shorten the incoming piece, rise at x - rank*dx, and
                // reconnect horizontally at the climb top
                const Point& prev = out.vertices.back();
                Rational nx = v[i].x - dx;
                Rational ny = line_y_at(prev, p, nx);
                push(Point{nx, ny});
                push(Point{nx, v[i + 1].y + dy});
                push(Point{v[i + 1].x, v[i + 1].y + dy});
                ++i;
                continue;
            }
            if (v[i + 1].y < v[i].y && i + 2 < v.size() && v[i + 2].x > v[i].x + dx) {
                // drop: overshoot horizontally, descend at x + rank*dx onto
                // the shifted continuation piece
                Rational nx = v[i].x + dx;
                Point lo{v[i + 1].x, v[i + 1].y + dy};
                Point nxt{v[i + 2].x, v[i + 2].y + dy};
                Rational ny = line_y_at(lo, nxt, nx);
                push(p);
                push(Point{nx, p.y});
                push(Point{nx, ny});
                ++i;
                continue;
            }
        }
        push(p);
    }
    return out;
}

bool paths_disjoint(const Polyline& a, const Polyline& b) {
    for (std::size_t i = 0; i + 1 < a.vertices.size(); ++i) {
        Segment sa{a.vertices[i], a.vertices[i + 1]};
        for (std::size_t j = 0; j + 1 < b.vertices.size(); ++j) {
            if (segments_intersect_closed(sa, Segment{b.vertices[j], b.vertices[j + 1]}))
                return false;
        }
    }
    return true;
}

bool displaced_path_valid(const Instance& inst, int tube_index, const Polyline& displaced,
                          const std::vector<Polyline>& earlier_displaced) {
    const Tube& tube = inst.tubes[static_cast<std::size_t>(tube_index)];
    const Point& first = displaced.vertices.front();
    const Point& last = displaced.vertices.back();
    if (first.x != tube.left.x || first.y < tube.left.y_lo || first.y > tube.left.y_hi)
        return false;
    if (last.x != tube.right.x || last.y < tube.right.y_lo || last.y > tube.right.y_hi)
        return false;
    for (const Point& p : displaced.vertices)
        if (point_in_polygon(p, tube.region) == Containment::Outside)
            return false;
    for (std::size_t i = 0; i + 1 < displaced.vertices.size(); ++i)
        if (displaced.vertices[i + 1].x < displaced.vertices[i].x)
            return false;
    for (const Polyline& other : earlier_displaced)
        if (!paths_disjoint(displaced, other))
            return false;
    return true;
}

} // namespace

MonotoneDecision decide_monotone(const Instance& inst) {
    return decide_monotone(inst, classify_instance(inst));
}

MonotoneDecision decide_monotone(const Instance& inst, const ClassificationSummary& summary) {
    (void)inst;
    MonotoneDecision d;
    if (!summary.full_cross_pairs.empty()) {
        d.solvable = false;
        d.full_cross = summary.full_cross_pairs.front();
        return d;
    }
    if (auto cycle = find_cycle(summary.graph)) {
        d.solvable = false;
        d.cycle = *cycle;
        return d;
    }
    d.solvable = true;
    d.order = topological_order(summary.graph);
    return d;
}

DrawResult draw_monotone(const Instance& inst, const std::vector<int>& order) {
    if (order.size() != inst.tubes.size())
        raise(Errc::Internal, "draw order size mismatch");
    DrawResult res;
    res.order = order;
    ClearanceUnits units = clearance_units(inst);
    res.delta = units.dy;
    std::vector<Polyline> displaced;
    for (std::size_t r = 0; r < order.size(); ++r) {
        GreedyStep step = greedy_path(inst, order, res.pre_paths, order[r]);
        if (!step.ok)
            raise(Errc::ConstructionFailure,
                  "tube " + std::to_string(order[r]) + " at rank " + std::to_string(r) + ": " +
                      step.fail_reason);
        res.pre_paths.push_back(step.pre);
        displaced.push_back(displace(step.pre, static_cast<int>(r), units));
    }
    res.solution.paths.assign(inst.tubes.size(), Polyline{});
    for (std::size_t r = 0; r < order.size(); ++r)
        res.solution.paths[static_cast<std::size_t>(order[r])] = displaced[r];
    ValidationReport rep = validate_solution(inst, res.solution, PathMode::Monotone);
    if (!rep.ok()) {
        std::string why = "displaced solution fails validation:";
        for (const auto& v : rep.violations)
            why += " [" + violation_to_string(v) + "]";
        raise(Errc::ConstructionFailure, why);
    }
    return res;
}

namespace {

bool oracle_search(const Instance& inst, const ClearanceUnits& units, std::vector<int>& order,
                   std::vector<Polyline>& pre_paths, std::vector<Polyline>& displaced,
                   std::vector<bool>& used) {
    const std::size_t n = inst.tubes.size();
    if (order.size() == n)
        return true;
    for (int t = 0; t < static_cast<int>(n); ++t) {
        if (used[static_cast<std::size_t>(t)])
            continue;
        GreedyStep step = greedy_path(inst, order, pre_paths, t);
        if (!step.ok)
            continue;
        Polyline disp = displace(step.pre, static_cast<int>(order.size()), units);
        if (!displaced_path_valid(inst, t, disp, displaced))
            continue;
        order.push_back(t);
        pre_paths.push_back(std::move(step.pre));
        displaced.push_back(std::move(disp));
        used[static_cast<std::size_t>(t)] = true;
        if (oracle_search(inst, units, order, pre_paths, displaced, used))
            return true;
        used[static_cast<std::size_t>(t)] = false;
        displaced.pop_back();
        pre_paths.pop_back();
        order.pop_back();
    }
    return false;
}

} // namespace

bool oracle_monotone(const Instance& inst) {
    if (inst.tubes.size() > 8)
        raise(Errc::CapExceeded, "oracle_monotone enumerates permutations; n <= 8 required");
    if (inst.tubes.empty())
        return true;
    ClearanceUnits units = clearance_units(inst);
    std::vector<int> order;
    std::vector<Polyline> pre_paths, displaced;
    std::vector<bool> used(inst.tubes.size(), false);
    return oracle_search(inst, units, order, pre_paths, displaced, used);
}

} // namespace tubeways
