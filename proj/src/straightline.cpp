#include "tubeways/straightline.hpp"

#include "tubeways/errors.hpp"

#include <algorithm>
#include <map>

namespace tubeways {

namespace {

// orient((x1,a),(x2,b),(x3,c)) with fixed x's is linear in a, b, c:
//   (x2-x1)(c-a) - (b-a)(x3-x1)
// = a(x3-x2) + b(x1-x3) + c(x2-x1)
LinearForm orient_form(const Rational& x1, int va, const Rational& x2, int vb, const Rational& x3,
                       int vc, int sign) {
    LinearForm f;
    Rational s(sign);
    f.terms.push_back({va, s * (x3 - x2)});
    f.terms.push_back({vb, s * (x1 - x3)});
    f.terms.push_back({vc, s * (x2 - x1)});
    f.constant = Rational(0);
    return f;
}

} // namespace

std::vector<std::vector<LinearForm>> pair_disjuncts(const Instance& inst, int i, int j) {
    const Tube& a = inst.tubes[static_cast<std::size_t>(i)];
    const Tube& b = inst.tubes[static_cast<std::size_t>(j)];
    if (!a.x_range().overlaps(b.x_range()))
        return {};
    if (!polygon_intersection_nonempty(a.region, b.region))
        return {}; // chords live inside the regions and can never meet
    int al = 2 * i, ar = 2 * i + 1, bl = 2 * j, br = 2 * j + 1;
    std::vector<std::vector<LinearForm>> out;
    // both endpoints of chord j weakly left / weakly right of chord i's line
    for (int s : {+1, -1}) {
        out.push_back({orient_form(a.left.x, al, a.right.x, ar, b.left.x, bl, s),
                       orient_form(a.left.x, al, a.right.x, ar, b.right.x, br, s)});
    }
    for (int s : {+1, -1}) {
        out.push_back({orient_form(b.left.x, bl, b.right.x, br, a.left.x, al, s),
                       orient_form(b.left.x, bl, b.right.x, br, a.right.x, ar, s)});
    }
    return out;
}

namespace {

// Exact primal simplex (two phases, Bland's rule) for
//   maximize obj . x   subject to  A x <= b,  x >= 0.
// Returns the optimum and an optimal x, or nullopt when infeasible;
// Internal error on an unbounded objective (our callers always bound it).
struct LpTableau {
    // rows: constraints; columns: structural + slack variables, then b
    std::vector<std::vector<Rational>> t;
    std::vector<Rational> obj; // objective row (maximize), size cols
    Rational obj_const;
    std::vector<int> basis;
    std::size_t rows, cols;

    void pivot(std::size_t r, std::size_t c) {
        Rational p = t[r][c];
        for (auto& v : t[r])
            v /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || t[i][c].is_zero())
                continue;
            Rational f = t[i][c];
            for (std::size_t j = 0; j <= cols; ++j)
                t[i][j] -= f * t[r][j];
        }
        if (!obj[c].is_zero()) {
            Rational f = obj[c];
            for (std::size_t j = 0; j < cols; ++j)
                obj[j] -= f * t[r][j];
            obj_const += f * t[r][cols];
        }
        basis[r] = static_cast<int>(c);
    }

    // Bland's rule; returns false when optimal, throws when unbounded.
    bool step() {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (obj[j].sign() > 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols)
            return false;
        std::size_t leave = rows;
        std::optional<Rational> best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter].sign() <= 0)
                continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (!best || ratio < *best ||
                (ratio == *best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == rows)
            raise(Errc::Internal, "simplex objective unbounded");
        pivot(leave, enter);
        return true;
    }
};

struct LpResult {
    Rational optimum;
    std::vector<Rational> x; // structural variables only
};

std::optional<LpResult> exact_lp_max(const std::vector<std::vector<Rational>>& a,
                                     const std::vector<Rational>& b,
                                     const std::vector<Rational>& objective) {
    const std::size_t m = a.size();
    const std::size_t n = objective.size();
    LpTableau tab;
    tab.rows = m;
    tab.cols = n + m; // structural + slack
    tab.t.assign(m, std::vector<Rational>(tab.cols + 1, Rational(0)));
    tab.basis.assign(m, 0);
    bool need_phase1 = false;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            tab.t[i][j] = a[i][j];
        tab.t[i][n + i] = Rational(1);
        tab.t[i][tab.cols] = b[i];
        tab.basis[i] = static_cast<int>(n + i);
        if (b[i].sign() < 0)
            need_phase1 = true;
    }
    if (need_phase1) {
        // auxiliary variable column x0 with coefficient -1 everywhere
        for (std::size_t i = 0; i < m; ++i)
            tab.t[i].insert(tab.t[i].begin() + static_cast<std::ptrdiff_t>(tab.cols), Rational(-1));
        ++tab.cols;
        std::size_t x0 = tab.cols - 1;
        tab.obj.assign(tab.cols, Rational(0));
        tab.obj[x0] = Rational(-1); // maximize -x0
        tab.obj_const = Rational(0);
        // make the dictionary feasible: pivot x0 into the worst row
        std::size_t worst = 0;
        for (std::size_t i = 1; i < m; ++i)
            if (tab.t[i][tab.cols] < tab.t[worst][tab.cols])
                worst = i;
        tab.pivot(worst, x0);
        while (tab.step()) {
        }
        if (tab.obj_const.sign() < 0)
            return std::nullopt; // infeasible
        // drive x0 out of the basis if it lingers at value zero
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis[i] == static_cast<int>(x0)) {
                for (std::size_t j = 0; j < tab.cols; ++j) {
                    if (j != x0 && !tab.t[i][j].is_zero()) {
                        tab.pivot(i, j);
                        break;
                    }
                }
                break;
            }
        }
        // remove the x0 column
        for (std::size_t i = 0; i < m; ++i)
            tab.t[i].erase(tab.t[i].begin() + static_cast<std::ptrdiff_t>(x0));
        --tab.cols;
        for (std::size_t i = 0; i < m; ++i)
            if (tab.basis[i] > static_cast<int>(x0))
                --tab.basis[i];
    }
    // phase 2: install the real objective expressed over the current basis
    tab.obj.assign(tab.cols, Rational(0));
    tab.obj_const = Rational(0);
    for (std::size_t j = 0; j < n; ++j)
        tab.obj[j] = objective[j];
    for (std::size_t i = 0; i < m; ++i) {
        int bv = tab.basis[i];
        if (bv >= 0 && bv < static_cast<int>(tab.cols) && !tab.obj[static_cast<std::size_t>(bv)].is_zero()) {
            Rational f = tab.obj[static_cast<std::size_t>(bv)];
            for (std::size_t j = 0; j < tab.cols; ++j)
                tab.obj[j] -= f * tab.t[i][j];
            tab.obj_const += f * tab.t[i][tab.cols];
        }
    }
    while (tab.step()) {
    }
    LpResult res;
    res.optimum = tab.obj_const;
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] >= 0 && tab.basis[i] < static_cast<int>(n))
            res.x[static_cast<std::size_t>(tab.basis[i])] = tab.t[i][tab.cols];
    return res;
}

} // namespace

std::optional<std::vector<Rational>> feasible(const BranchSystem& sys, int num_vars) {
    // y_i = u_i - v_i with u, v >= 0; tau is the common slack of the strict
    // rows. Strict-feasible iff the maximal tau is positive.
    bool any_strict = false;
    for (const LinearForm& f : sys)
        any_strict = any_strict || f.strict;
    const std::size_t nu = static_cast<std::size_t>(num_vars);
    const std::size_t nvars = 2 * nu + (any_strict ? 1 : 0);
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (const LinearForm& f : sys) {
        // sum a_i y_i + k >= sigma*tau  ->  -sum a_i u + sum a_i v + sigma*tau <= k
        std::vector<Rational> row(nvars, Rational(0));
        for (const auto& [var, coeff] : f.terms) {
            row[static_cast<std::size_t>(var)] -= coeff;
            row[nu + static_cast<std::size_t>(var)] += coeff;
        }
        if (f.strict)
            row[2 * nu] = Rational(1);
        a.push_back(std::move(row));
        b.push_back(f.constant);
    }
    std::vector<Rational> objective(nvars, Rational(0));
    if (any_strict) {
        std::vector<Rational> cap(nvars, Rational(0));
        cap[2 * nu] = Rational(1);
        a.push_back(std::move(cap)); // tau <= 1
        b.push_back(Rational(1));
        objective[2 * nu] = Rational(1);
    }
    auto lp = exact_lp_max(a, b, objective);
    if (!lp)
        return std::nullopt;
    if (any_strict && lp->optimum.sign() <= 0)
        return std::nullopt;
    std::vector<Rational> ys(nu);
    for (std::size_t i = 0; i < nu; ++i)
        ys[i] = lp->x[i] - lp->x[nu + i];
    return ys;
}

namespace {

Rational intersection_area(const Tube& a, const Tube& b) {
    if (!polygon_intersection_nonempty(a.region, b.region))
        return Rational(0);
    // area(A) - area(A \ B); falls back to 0 on degenerate contact, which is
    // only used as a branch-ordering heuristic
    try {
        Rational diff(0);
        for (const Polygon& c : polygon_difference_components(a.region, b.region))
            diff += polygon_area(c);
        return polygon_area(a.region) - diff;
    } catch (const Error&) {
        return Rational(0);
    }
}

struct Branching {
    std::vector<std::pair<int, int>> pairs; // constrained pairs, widest overlap first
    std::vector<std::vector<std::vector<LinearForm>>> disjuncts;
};

bool search(const Branching& br, std::size_t depth, BranchSystem& stack, int num_vars,
            bool strict_pass, long& explored, std::vector<int>& choice) {
    ++explored;
    if (!feasible(stack, num_vars))
        return false;
    if (depth == br.pairs.size())
        return true;
    for (std::size_t d = 0; d < br.disjuncts[depth].size(); ++d) {
        const auto& dj = br.disjuncts[depth][d];
        std::size_t mark = stack.size();
        for (LinearForm f : dj) {
            f.strict = strict_pass;
            stack.push_back(std::move(f));
        }
        choice.push_back(static_cast<int>(d));
        if (search(br, depth + 1, stack, num_vars, strict_pass, explored, choice))
            return true;
        choice.pop_back();
        stack.resize(mark);
    }
    return false;
}

} // namespace

StraightDecision decide_straight(const Instance& inst, int cap) {
    const int n = static_cast<int>(inst.tubes.size());
    const int num_vars = 2 * n;
    StraightDecision out;

    Branching br;
    std::vector<std::pair<Rational, std::pair<int, int>>> weighted;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto dj = pair_disjuncts(inst, i, j);
            if (dj.empty())
                continue;
            weighted.push_back({intersection_area(inst.tubes[static_cast<std::size_t>(i)],
                                                  inst.tubes[static_cast<std::size_t>(j)]),
                                {i, j}});
        }
    }
    std::sort(weighted.begin(), weighted.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return b.first < a.first; // descending area
        return a.second < b.second;
    });
    out.constrained_pairs = static_cast<int>(weighted.size());
    if (out.constrained_pairs > cap)
        raise(Errc::CapExceeded, "instance has " + std::to_string(weighted.size()) +
                                     " constrained pairs, cap is " + std::to_string(cap));
    for (const auto& [area, pr] : weighted) {
        br.pairs.push_back(pr);
        br.disjuncts.push_back(pair_disjuncts(inst, pr.first, pr.second));
    }

    BranchSystem base;
    for (int t = 0; t < n; ++t) {
        const Tube& tube = inst.tubes[static_cast<std::size_t>(t)];
        for (int side = 0; side < 2; ++side) {
            const VSeg& s = side == 0 ? tube.left : tube.right;
            int v = 2 * t + side;
            LinearForm above;
            above.terms.push_back({v, Rational(1)});
            above.constant = -s.y_lo;
            base.push_back(above); // y_v >= y_lo
            LinearForm below;
            below.terms.push_back({v, Rational(-1)});
            below.constant = s.y_hi;
            base.push_back(below); // y_v <= y_hi
        }
    }

    auto to_solution = [&](const std::vector<Rational>& ys) {
        Solution sol;
        for (int t = 0; t < n; ++t) {
            const Tube& tube = inst.tubes[static_cast<std::size_t>(t)];
            Polyline line;
            line.vertices.push_back(Point{tube.left.x, ys[static_cast<std::size_t>(2 * t)]});
            line.vertices.push_back(Point{tube.right.x, ys[static_cast<std::size_t>(2 * t + 1)]});
            sol.paths.push_back(std::move(line));
        }
        return sol;
    };

    // strict pass first: a strictly disjoint witness also decides the weak
    // question, and it is the witness the validator accepts
    {
        BranchSystem stack = base;
        std::vector<int> choice;
        if (search(br, 0, stack, num_vars, true, out.branches_explored, choice)) {
            auto ys = feasible(stack, num_vars);
            if (!ys)
                raise(Errc::Internal, "strict branch lost feasibility");
            out.feasible = true;
            out.witness = to_solution(*ys);
            out.witness_strict = true;
            return out;
        }
    }
    {
        BranchSystem stack = base;
        std::vector<int> choice;
        if (search(br, 0, stack, num_vars, false, out.branches_explored, choice)) {
            auto ys = feasible(stack, num_vars);
            if (!ys)
                raise(Errc::Internal, "weak branch lost feasibility");
            out.feasible = true;
            out.witness = to_solution(*ys);
            out.witness_strict = false;
            return out;
        }
    }
    return out;
}

std::vector<std::vector<int>> enumerate_discrete(const Instance& inst, const TubeOptions& options) {
    const std::size_t n = inst.tubes.size();
    if (options.chords_per_tube.size() != n)
        raise(Errc::ParseError, "options must list chords for every tube");
    std::vector<std::vector<Segment>> chords(n);
    for (std::size_t t = 0; t < n; ++t) {
        const Tube& tube = inst.tubes[t];
        for (const auto& [yl, yr] : options.chords_per_tube[t]) {
            if (yl < tube.left.y_lo || yl > tube.left.y_hi || yr < tube.right.y_lo || yr > tube.right.y_hi)
                raise(Errc::ParseError, "option chord endpoint off its segment");
            chords[t].push_back(Segment{Point{tube.left.x, yl}, Point{tube.right.x, yr}});
        }
    }
    std::vector<std::vector<int>> result;
    std::vector<int> pick(n, 0);
    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == n) {
            result.push_back(pick);
            return;
        }
        for (int c = 0; c < static_cast<int>(chords[t].size()); ++c) {
            bool ok = true;
            for (std::size_t u = 0; u < t && ok; ++u) {
                if (segments_properly_cross(chords[t][static_cast<std::size_t>(c)],
                                            chords[u][static_cast<std::size_t>(pick[u])]))
                    ok = false;
            }
            if (!ok)
                continue;
            pick[t] = c;
            self(self, t + 1);
        }
    };
    rec(rec, 0);
    return result;
}

} // namespace tubeways
