#include "tubeways/earcut.hpp"

#include "tubeways/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace tubeways {

namespace {

bool anchor_meets_region(const VSeg& anchor, const Polygon& region) {
    if (anchor.y_lo > anchor.y_hi)
        return false;
    for (const Interval& iv : cross_section(region, anchor.x))
        if (iv.overlaps(anchor.y_interval()))
            return true;
    return false;
}

// Shorten an anchor by the part of the ear covering its vertical line. The
// surviving anchor must stay a single interval; empty is reported as such.
struct AnchorTrim {
    VSeg anchor;
    bool empty = false;
};

AnchorTrim trim_anchor(const VSeg& anchor, const Polygon& ear) {
    AnchorTrim out{anchor, false};
    for (const Interval& iv : cross_section(ear, anchor.x)) {
        VSeg& a = out.anchor;
        if (out.empty)
            return out;
        if (iv.hi < a.y_lo || iv.lo > a.y_hi)
            continue;
        bool covers_low = iv.lo <= a.y_lo;
        bool covers_high = iv.hi >= a.y_hi;
        if (covers_low && covers_high) {
            out.empty = true;
        } else if (covers_low) {
            a.y_lo = iv.hi; // the cut boundary stays on the truncated region
        } else if (covers_high) {
            a.y_hi = iv.lo;
        } else {
            raise(Errc::EarSelectionFailure, "ear would split an anchor segment");
        }
    }
    return out;
}

int owner_anchor_dir(const TruncatedTube& cut, bool left_intersects) {
    (void)cut;
    return left_intersects ? 0 : 1;
}

// Index of the difference component containing the (closed) non-intersecting
// anchor; exactly one must contain it.
std::size_t anchor_component(const Overlay& ov, const VSeg& keep_anchor) {
    Point probe{keep_anchor.x, (keep_anchor.y_lo + keep_anchor.y_hi) / Rational(2)};
    std::optional<std::size_t> found;
    const auto& comps = ov.difference_components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (point_in_polygon(probe, comps[i]) != Containment::Outside) {
            if (found)
                raise(Errc::EarSelectionFailure, "anchor probe lies in two components");
            found = i;
        }
    }
    if (!found)
        raise(Errc::EarSelectionFailure, "no difference component contains the kept anchor");
    return *found;
}

} // namespace

std::optional<Polygon> find_ear(const TruncatedTube& cut, const TruncatedTube& other,
                                bool cut_left_anchor_intersects) {
    if (transversal_crossing_count(cut.region, other.region) <= 2)
        return std::nullopt;
    Overlay ov(cut.region, other.region);
    const VSeg& keep = cut_left_anchor_intersects ? cut.right_anchor : cut.left_anchor;
    std::size_t keep_idx = anchor_component(ov, keep);
    for (std::size_t i = 0; i < ov.difference_components().size(); ++i)
        if (i != keep_idx)
            return ov.difference_components()[i];
    raise(Errc::Internal, "more than two boundary crossings but no ear component");
}

TruncatedTube cut_ear(const TruncatedTube& tube, const Polygon& ear) {
    // The ear's boundary alternates between one run along the tube's boundary
    // and one inner chain; splice the inner chain in place of the run.
    const std::size_t ne = ear.size();
    const std::size_t nr = tube.region.size();
    auto on_region_boundary = [&](const Point& a, const Point& b) {
        Point mid{(a.x + b.x) / Rational(2), (a.y + b.y) / Rational(2)};
        bool pa = false, pb = false, pm = false;
        for (std::size_t i = 0; i < nr; ++i) {
            Segment e{tube.region[i], tube.region[(i + 1) % nr]};
            pa = pa || point_on_segment(a, e);
            pb = pb || point_on_segment(b, e);
            pm = pm || point_on_segment(mid, e);
        }
        return pa && pb && pm;
    };
    std::vector<bool> edge_on_boundary(ne);
    for (std::size_t i = 0; i < ne; ++i)
        edge_on_boundary[i] = on_region_boundary(ear[i], ear[(i + 1) % ne]);
    // rotate so that the boundary run starts at index 0
    std::size_t start = ne;
    for (std::size_t i = 0; i < ne; ++i) {
        if (edge_on_boundary[i] && !edge_on_boundary[(i + ne - 1) % ne]) {
            if (start != ne)
                raise(Errc::EarSelectionFailure, "ear touches the tube boundary along two runs");
            start = i;
        }
    }
    if (start == ne)
        raise(Errc::EarSelectionFailure, "ear has no run along the tube boundary");
    std::size_t run_len = 0;
    while (run_len < ne && edge_on_boundary[(start + run_len) % ne])
        ++run_len;
    if (run_len == ne)
        raise(Errc::EarSelectionFailure, "ear boundary lies entirely on the tube");
    // run: vertices p = ear[start] .. q = ear[start+run_len]; inner chain q..p
    Point p = ear[start];
    Point q = ear[(start + run_len) % ne];

    // walk the tube boundary, replacing the p..q stretch with the inner chain
    // (traversed from p to q, i.e. the ear's chain reversed)
    std::vector<Point> inner;
    for (std::size_t k = 0; k <= ne - run_len; ++k)
        inner.push_back(ear[(start + run_len + k) % ne]); // q ... p along the ear
    std::reverse(inner.begin(), inner.end());             // p ... q

    // find the region edge positions of p and q
    auto locate = [&](const Point& pt) -> std::size_t {
        for (std::size_t i = 0; i < nr; ++i)
            if (point_on_segment(pt, Segment{tube.region[i], tube.region[(i + 1) % nr]}))
                return i;
        raise(Errc::EarSelectionFailure, "splice point not on the tube boundary");
    };
    std::size_t ep = locate(p);
    std::size_t eq = locate(q);

    Polygon out;
    // inner chain from p to q
    for (const Point& v : inner)
        out.push_back(v);
    // continue along the region boundary from q's edge around to p
    std::size_t i = eq;
    while (true) {
        Point corner = tube.region[(i + 1) % nr];
        i = (i + 1) % nr;
        if (i == ep) {
            // p lies on this edge's span; stop before re-adding p
            if (corner != p && point_on_segment(corner, Segment{out.back(), p})) {
                // corner sits between q-side walk and p: keep it
                out.push_back(corner);
            } else if (corner != p) {
                out.push_back(corner);
            }
            break;
        }
        out.push_back(corner);
        if (out.size() > nr + ne + 4)
            raise(Errc::EarSelectionFailure, "splice walk failed to close");
    }
    // clean collinear and duplicate vertices
    Polygon cleaned;
    const std::size_t m = out.size();
    for (std::size_t k = 0; k < m; ++k) {
        const Point& prev = out[(k + m - 1) % m];
        const Point& cur = out[k];
        const Point& nxt = out[(k + 1) % m];
        if (cur == prev)
            continue;
        if (orient(prev, cur, nxt) == 0 && cur != nxt)
            continue;
        cleaned.push_back(cur);
    }
    if (cleaned.size() < 3)
        raise(Errc::EarSelectionFailure, "cut degenerates the tube region");
    Rational expect = polygon_area(tube.region) - polygon_area(ear);
    if (polygon_area(cleaned) != expect)
        raise(Errc::EarSelectionFailure, "spliced region area mismatch");

    TruncatedTube out_tube = tube;
    out_tube.region = std::move(cleaned);
    AnchorTrim lt = trim_anchor(tube.left_anchor, ear);
    AnchorTrim rt = trim_anchor(tube.right_anchor, ear);
    if (lt.empty || rt.empty)
        raise(Errc::EmptyAnchor, "ear removes a whole anchor segment");
    out_tube.left_anchor = lt.anchor;
    out_tube.right_anchor = rt.anchor;
    return out_tube;
}

std::string arbitrary_answer_name(ArbitraryDecision::Answer a) {
    switch (a) {
    case ArbitraryDecision::Answer::Yes: return "yes";
    case ArbitraryDecision::Answer::No: return "no";
    case ArbitraryDecision::Answer::Unsupported: return "unsupported";
    }
    return "?";
}

ArbitraryDecision decide_arbitrary(const Instance& inst, const EarcutOptions& opts) {
    const int n = static_cast<int>(inst.tubes.size());
    ArbitraryDecision out;
    ClassificationSummary summary = classify_instance(inst);
    if (!summary.double_pairs.empty()) {
        out.answer = ArbitraryDecision::Answer::Unsupported;
        out.double_pair = summary.double_pairs.front();
        return out;
    }

    std::vector<TruncatedTube> state;
    for (int i = 0; i < n; ++i) {
        const Tube& t = inst.tubes[static_cast<std::size_t>(i)];
        state.push_back(TruncatedTube{t.region, t.left, t.right, i});
    }
    // pairs that can ever interact: regions met initially (regions only shrink)
    std::vector<std::pair<int, int>> live_pairs;
    struct SingleInfo {
        int owner;
        bool owner_left_seg;
    };
    std::vector<std::vector<std::optional<SingleInfo>>> single(
        static_cast<std::size_t>(n), std::vector<std::optional<SingleInfo>>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const PairRelation& r = summary.relation[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (r.kind == PairRelation::Kind::Single || r.kind == PairRelation::Kind::FullCross)
                live_pairs.push_back({i, j});
            if (r.kind == PairRelation::Kind::Single)
                single[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    SingleInfo{r.seg_owner, r.owner_left_seg};
        }
    }

    const int cap = 4 * n * n + 16;
    int cuts = 0;
    while (true) {
        // 1) any full crossing among the current truncated tubes decides No
        for (auto [i, j] : live_pairs) {
            const TruncatedTube& a = state[static_cast<std::size_t>(i)];
            const TruncatedTube& b = state[static_cast<std::size_t>(j)];
            if (!polygon_intersection_nonempty(a.region, b.region))
                continue;
            if (anchor_meets_region(a.left_anchor, b.region) ||
                anchor_meets_region(a.right_anchor, b.region) ||
                anchor_meets_region(b.left_anchor, a.region) ||
                anchor_meets_region(b.right_anchor, a.region))
                continue;
            out.answer = ArbitraryDecision::Answer::No;
            out.obstruction = std::make_pair(i, j);
            out.truncated = state;
            return out;
        }
        // 2) first pair that is not yet a pseudo-disk pair
        std::optional<std::pair<int, int>> to_cut;
        for (auto [i, j] : live_pairs) {
            if (!single[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                continue;
            if (transversal_crossing_count(state[static_cast<std::size_t>(i)].region,
                                           state[static_cast<std::size_t>(j)].region) > 2) {
                to_cut = std::make_pair(i, j);
                break;
            }
        }
        if (!to_cut)
            break;

        auto [i, j] = *to_cut;
        const SingleInfo& info = *single[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        int cut_idx = info.owner;
        int other_idx = cut_idx == i ? j : i;
        TruncatedTube& cut_tube = state[static_cast<std::size_t>(cut_idx)];
        const TruncatedTube& other = state[static_cast<std::size_t>(other_idx)];

        Overlay ov(cut_tube.region, other.region);
        const VSeg& keep = info.owner_left_seg ? cut_tube.right_anchor : cut_tube.left_anchor;
        std::size_t keep_idx = anchor_component(ov, keep);
        std::vector<std::size_t> ears;
        for (std::size_t c = 0; c < ov.difference_components().size(); ++c)
            if (c != keep_idx)
                ears.push_back(c);
        if (ears.empty())
            raise(Errc::Internal, "pair needs a cut but has no ear component");

        Rational area_before = polygon_area(cut_tube.region);
        Polygon new_region = ov.remainder_without(ears);

        // anchors lose whatever the ears covered
        bool anchor_gone = false;
        VSeg la = cut_tube.left_anchor, ra = cut_tube.right_anchor;
        for (std::size_t c : ears) {
            AnchorTrim lt = trim_anchor(la, ov.difference_components()[c]);
            AnchorTrim rt = trim_anchor(ra, ov.difference_components()[c]);
            if (lt.empty || rt.empty) {
                anchor_gone = true;
                break;
            }
            la = lt.anchor;
            ra = rt.anchor;
        }
        if (anchor_gone) {
            out.answer = ArbitraryDecision::Answer::No;
            out.empty_anchor_tube = cut_idx;
            out.truncated = state;
            return out;
        }

        cut_tube.region = std::move(new_region);
        cut_tube.left_anchor = la;
        cut_tube.right_anchor = ra;
        Rational area_after = polygon_area(cut_tube.region);
        if (!(area_after < area_before))
            raise(Errc::Internal, "cut did not decrease the region area");
        for (std::size_t c : ears) {
            CutEvent ev;
            ev.pair = {i, j};
            ev.cut_tube = cut_idx;
            ev.ear = ov.difference_components()[c];
            ev.area_before = area_before;
            ev.area_after = area_after;
            out.trace.push_back(ev);
            ++cuts;
            if (opts.on_cut)
                opts.on_cut(state, ev);
        }
        if (transversal_crossing_count(cut_tube.region, other.region) > 2)
            raise(Errc::Internal, "pair still crosses more than twice after cutting all its ears");
        if (cuts > cap)
            raise(Errc::Internal, "cut count exceeded the n^2 cap");
    }

    out.answer = ArbitraryDecision::Answer::Yes;
    out.truncated = state;
    return out;
}

std::string serialize_truncated(const std::vector<TruncatedTube>& tubes) {
    using nlohmann::json;
    json polygons = json::array();
    json anchors = json::array();
    for (const TruncatedTube& t : tubes) {
        json poly = json::array();
        for (const Point& p : t.region)
            poly.push_back(json::array({p.x.to_string(), p.y.to_string()}));
        polygons.push_back(poly);
        auto seg = [](const VSeg& s) {
            return json{{"x", s.x.to_string()}, {"ylo", s.y_lo.to_string()}, {"yhi", s.y_hi.to_string()}};
        };
        anchors.push_back(json{{"left", seg(t.left_anchor)}, {"right", seg(t.right_anchor)}});
    }
    return json{{"polygons", polygons}, {"anchors", anchors}}.dump();
}

} // namespace tubeways
