#include "tubeways/classify.hpp"

#include "tubeways/errors.hpp"

#include <algorithm>
#include <queue>

namespace tubeways {

const char* relation_kind_name(PairRelation::Kind k) {
    switch (k) {
    case PairRelation::Kind::NoInteraction: return "no-interaction";
    case PairRelation::Kind::OrderedDisjoint: return "ordered-disjoint";
    case PairRelation::Kind::FullCross: return "full-cross";
    case PairRelation::Kind::Single: return "single";
    case PairRelation::Kind::Double: return "double";
    }
    return "?";
}

namespace {

bool vseg_intersects_region(const VSeg& s, const Polygon& region) {
    for (const Interval& iv : cross_section(region, s.x))
        if (iv.overlaps(s.y_interval()))
            return true;
    return false;
}

// The one nonempty cross-section interval of a convex tube region.
Interval convex_section(const Polygon& region, const Rational& x) {
    auto ivs = cross_section(region, x);
    if (ivs.size() != 1)
        raise(Errc::Internal, "convex region should cut to one interval at x = " + x.to_string());
    return ivs[0];
}

// Index of the tube whose cross-section lies higher at x; sections must be
// disjoint there.
int upper_at(const Tube& a, int ia, const Tube& b, int ib, const Rational& x) {
    Interval sa = convex_section(a.region, x);
    Interval sb = convex_section(b.region, x);
    if (sa.hi < sb.lo)
        return ib;
    if (sb.hi < sa.lo)
        return ia;
    raise(Errc::AmbiguousOrder, "cross-sections overlap at reference x = " + x.to_string());
}

} // namespace

PairRelation classify_pair(const Tube& a, int ia, const Tube& b, int ib) {
    check_pair_general_position(a.region, b.region);

    bool x_overlap = a.x_range().overlaps(b.x_range());
    bool regions_meet = x_overlap && polygon_intersection_nonempty(a.region, b.region);

    if (!regions_meet) {
        if (!x_overlap)
            return PairRelation{PairRelation::Kind::NoInteraction};
        Rational lo = Rational::max(a.left.x, b.left.x);
        Rational hi = Rational::min(a.right.x, b.right.x);
        Rational mid = (lo + hi) / Rational(2);
        PairRelation r{PairRelation::Kind::OrderedDisjoint};
        r.upper = upper_at(a, ia, b, ib, mid);
        return r;
    }

    struct Hit {
        int owner;
        bool left_seg;
        const VSeg* seg;
    };
    std::vector<Hit> hits;
    if (vseg_intersects_region(a.left, b.region))
        hits.push_back({ia, true, &a.left});
    if (vseg_intersects_region(a.right, b.region))
        hits.push_back({ia, false, &a.right});
    if (vseg_intersects_region(b.left, a.region))
        hits.push_back({ib, true, &b.left});
    if (vseg_intersects_region(b.right, a.region))
        hits.push_back({ib, false, &b.right});

    if (hits.empty())
        return PairRelation{PairRelation::Kind::FullCross};
    if (hits.size() >= 2)
        return PairRelation{PairRelation::Kind::Double};

    // single intersection: derive the forced vertical order
    const Hit& h = hits[0];
    const Tube& owner = h.owner == ia ? a : b;
    const Tube& host = h.owner == ia ? b : a;
    const Rational x_star = h.seg->x;
    const Rational other_x = h.left_seg ? owner.right.x : owner.left.x;
    Rational x_ref;
    if (host.left.x < other_x && other_x < host.right.x) {
        x_ref = other_x;
    } else {
        // host's x-range endpoint on the side of the owner's other segment
        x_ref = other_x < x_star ? host.left.x : host.right.x;
    }

    PairRelation r{PairRelation::Kind::Single};
    r.seg_owner = h.owner;
    r.owner_left_seg = h.left_seg;
    r.at_x = x_star;
    r.upper = upper_at(a, ia, b, ib, x_ref);
    return r;
}

ClassificationSummary classify_instance(const Instance& inst) {
    const int n = static_cast<int>(inst.tubes.size());
    ClassificationSummary out;
    out.relation.assign(n, std::vector<PairRelation>(n, PairRelation{PairRelation::Kind::NoInteraction}));
    out.graph.n = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            PairRelation r = classify_pair(inst.tubes[i], i, inst.tubes[j], j);
            out.relation[i][j] = r;
            switch (r.kind) {
            case PairRelation::Kind::OrderedDisjoint:
            case PairRelation::Kind::Single: {
                int up = r.upper;
                int lo = up == i ? j : i;
                out.graph.edges.push_back({lo, up});
                break;
            }
            case PairRelation::Kind::FullCross:
                out.full_cross_pairs.push_back({i, j});
                break;
            case PairRelation::Kind::Double:
                out.double_pairs.push_back({i, j});
                break;
            case PairRelation::Kind::NoInteraction:
                break;
            }
        }
    }
    std::sort(out.graph.edges.begin(), out.graph.edges.end());
    return out;
}

OrderGraph build_order_graph(const Instance& inst) { return classify_instance(inst).graph; }

std::vector<std::vector<int>> OrderGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges)
        adj[static_cast<std::size_t>(u)].push_back(v);
    for (auto& nb : adj)
        std::sort(nb.begin(), nb.end());
    return adj;
}

std::optional<std::vector<int>> find_cycle(const OrderGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> state(static_cast<std::size_t>(g.n), 0); // 0 new, 1 on stack, 2 done
    std::vector<int> stack;

    std::optional<std::vector<int>> found;
    auto dfs = [&](auto&& self, int v) -> bool {
        state[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (found)
                return true;
            if (state[static_cast<std::size_t>(w)] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                found = std::vector<int>(it, stack.end());
                return true;
            }
            if (state[static_cast<std::size_t>(w)] == 0 && self(self, w))
                return true;
        }
        stack.pop_back();
        state[static_cast<std::size_t>(v)] = 2;
        return false;
    };
    for (int v = 0; v < g.n && !found; ++v)
        if (state[static_cast<std::size_t>(v)] == 0)
            dfs(dfs, v);
    return found;
}

std::vector<int> topological_order(const OrderGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> indeg(static_cast<std::size_t>(g.n), 0);
    for (auto [u, v] : g.edges)
        ++indeg[static_cast<std::size_t>(v)];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < g.n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0)
            ready.push(v);
    std::vector<int> order;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : adj[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0)
                ready.push(w);
    }
    if (static_cast<int>(order.size()) != g.n)
        raise(Errc::Internal, "topological_order on a cyclic graph");
    return order;
}

} // namespace tubeways
