#include "roman/dp_solver.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <tuple>

namespace roman {

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Base: return "base";
        case CaseTag::A1_00: return "A1(0,0)";
        case CaseTag::A2_y1: return "A2(.,1)";
        case CaseTag::A3_02: return "A3(0,2)";
        case CaseTag::A4_x1: return "A4(1,.)";
        case CaseTag::A5_20: return "A5(2,0)";
        case CaseTag::A6_22: return "A6(2,2)";
        case CaseTag::B2_y1: return "B2(.,1)";
        case CaseTag::B3_x1: return "B3(1,.)";
    }
    return "?";
}

std::vector<int> min_stab_greedy(const std::vector<Interval>& intervals_sorted_by_hi) {
    for (const auto& iv : intervals_sorted_by_hi)
        if (iv.empty() || iv.lo > iv.hi) throw EmptyInterval("degenerate interval in stab input");
    std::vector<Interval> ivs = intervals_sorted_by_hi;
    std::stable_sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) { return a.hi < b.hi; });
    std::vector<int> q;
    int last = 0;
    for (const auto& iv : ivs) {
        if (!q.empty() && iv.lo <= last) continue;  // already stabbed
        last = iv.hi;
        q.push_back(last);
    }
    return q;
}

GapInstance gap_instance_for(const GraphView& view, int v, int excluded_x) {
    GapInstance gap;
    const int lv = view.min_neighbor_x(v);
    const int hv = view.max_neighbor_x(v);
    if (lv == 0 || lv == hv) return gap;
    for (int b = lv + 1; b < hv; ++b) {
        if (view.has_edge(v, b)) continue;
        Interval iv = view.interval_y(b);
        if (!iv.empty() && iv.hi >= excluded_x) iv.hi = excluded_x - 1;  // the excluded top is never a cover
        if (!iv.empty() && iv.lo > iv.hi) iv = {};
        gap.s1_intervals.push_back(iv);
    }
    return gap;
}

GapCover min_gap_cover(const GapInstance& gap) {
    GapCover cover;
    cover.covered.assign(gap.s1_intervals.size(), false);

    std::vector<Interval> full;
    for (const auto& iv : gap.s1_intervals) {
        if (iv.empty())
            cover.cost += 1;  // isolated member takes Roman value 1
        else
            full.push_back(iv);
    }
    if (full.empty()) return cover;

    const auto points = gap.s2_points();
    const int r = static_cast<int>(points.size());

    // f[a]: cheapest cover of everything finishing before chosen point a,
    // with point a chosen (a = 0 means none yet). An interval strictly
    // between two consecutive chosen points cannot be stabbed and pays 1.
    const auto inside = [&](int b, int a) {
        int cnt = 0;
        for (const auto& iv : full)
            if ((b == 0 || iv.lo > points[static_cast<std::size_t>(b - 1)]) &&
                iv.hi < points[static_cast<std::size_t>(a - 1)])
                ++cnt;
        return cnt;
    };
    const auto tail = [&](int a) {
        int cnt = 0;
        for (const auto& iv : full)
            if (a == 0 || iv.lo > points[static_cast<std::size_t>(a - 1)]) ++cnt;
        return cnt;
    };

    std::vector<int> f(static_cast<std::size_t>(r) + 1, kInfinity);
    std::vector<int> parent(static_cast<std::size_t>(r) + 1, -1);
    f[0] = 0;
    for (int a = 1; a <= r; ++a) {
        for (int b = a - 1; b >= 0; --b) {
            const int cand = f[static_cast<std::size_t>(b)] + 2 + inside(b, a);
            if (cand < f[static_cast<std::size_t>(a)]) {
                f[static_cast<std::size_t>(a)] = cand;
                parent[static_cast<std::size_t>(a)] = b;
            }
        }
    }
    int best_a = -1;
    int best = kInfinity;
    for (int a = r; a >= 0; --a) {  // ties prefer covering by 2s
        const int cand = f[static_cast<std::size_t>(a)] + tail(a);
        if (cand < best) {
            best = cand;
            best_a = a;
        }
    }
    cover.cost += best;
    for (int a = best_a; a > 0; a = parent[static_cast<std::size_t>(a)])
        cover.two_points.push_back(points[static_cast<std::size_t>(a - 1)]);
    std::sort(cover.two_points.begin(), cover.two_points.end());

    for (std::size_t z = 0; z < gap.s1_intervals.size(); ++z) {
        const Interval& iv = gap.s1_intervals[z];
        if (iv.empty()) continue;
        for (int p : cover.two_points)
            if (iv.contains(p)) {
                cover.covered[z] = true;
                break;
            }
    }
    return cover;
}

Rds1Result rds1(const GraphView& view, int v, int excluded_x) {
    Rds1Result res;
    const int lv = view.min_neighbor_x(v);
    const int hv = view.max_neighbor_x(v);
    if (lv == 0 || lv == hv) return res;

    std::vector<int> members;  // Y indices of S1
    GapInstance gap;
    for (int b = lv + 1; b < hv; ++b) {
        if (view.has_edge(v, b)) continue;
        Interval iv = view.interval_y(b);
        if (!iv.empty() && iv.hi >= excluded_x) iv.hi = excluded_x - 1;
        if (!iv.empty() && iv.lo > iv.hi) iv = {};
        members.push_back(b);
        gap.s1_intervals.push_back(iv);
    }
    GapCover cover = min_gap_cover(gap);
    res.cost = cover.cost;
    for (std::size_t z = 0; z < members.size(); ++z)
        res.partial.push_back({VertexRef{false, members[z]}, cover.covered[z] ? Label{0} : Label{1}});
    for (int p : cover.two_points) res.partial.push_back({VertexRef{true, p}, Label{2}});
    return res;
}

AssignR1Result assign_r1(const GraphView& view, int w) {
    AssignR1Result res;
    for (int b : view.gap_vertices_of_top_x())
        if (b > w) res.labeled.push_back(b);
    res.cost = static_cast<int>(res.labeled.size());
    return res;
}

namespace {

struct CandKey {
    int value = kInfinity;
    int s = 0;
    int t = 0;
    int u = 0;
    int v = 0;

    auto tie() const { return std::tie(value, s, t, u, v); }
    friend bool operator<(const CandKey& a, const CandKey& b) { return a.tie() < b.tie(); }
    friend bool operator==(const CandKey& a, const CandKey& b) { return a.tie() == b.tie(); }
};

using Cursor = std::optional<CandKey>;

bool after_cursor(const CandKey& key, const Cursor& cursor) { return !cursor || *cursor < key; }

RomanAssignment extend_to(const RomanAssignment& a, int x_count, int y_count) {
    RomanAssignment out = a;
    while (out.x_count() < x_count) out.push_x(0);
    while (out.y_count() < y_count) out.push_y(0);
    return out;
}

// Everything a single fill_cell invocation needs.
struct FillContext {
    const AugmentedGraph& g;
    DpTable& table;
    const SolveOptions& opts;
    SolveStats& stats;
    int i;
    int j;
    GraphView view;
    bool edge;

    int l_yj = 0;                 // lo of y_j's interval
    int l_xi = 0;                 // min Y index adjacent to x_i within the view
    std::vector<int> u_list;      // N_view(x_i) \ {y_j}
    std::vector<int> gaps;        // gap vertices of x_i in the view, ascending
    int v_lo = 0, v_hi = 0;       // N_view(y_j) \ {x_i} = [v_lo, v_hi]
    std::vector<Rds1Result> rds1_by_v;  // indexed by v - v_lo

    FillContext(const AugmentedGraph& g_, DpTable& t_, const SolveOptions& o_, SolveStats& s_, int i_, int j_)
        : g(g_), table(t_), opts(o_), stats(s_), i(i_), j(j_), view(g_, i_, j_), edge(g_.has_edge(i_, j_)) {
        if (!edge) return;
        l_yj = g.neighbors_y(j).lo;
        l_xi = view.min_neighbor_x(i);
        for (int b : g.neighbors_x(i)) {
            if (b >= j) break;
            u_list.push_back(b);
        }
        gaps = view.gap_vertices_of_top_x();
        v_lo = l_yj;
        v_hi = i - 1;
        if (!u_list.empty() && v_lo <= v_hi) {
            rds1_by_v.reserve(static_cast<std::size_t>(v_hi - v_lo + 1));
            for (int v = v_lo; v <= v_hi; ++v) rds1_by_v.push_back(rds1(view, v, i));
        }
    }

    int gaps_above(int w) const {
        return static_cast<int>(gaps.end() - std::upper_bound(gaps.begin(), gaps.end(), w));
    }
    // # of 1-labeled x_a with a in [lo, s] of the stored labeling of (s,t).
    int ones_x_range(const DpCell& cell, int lo, int s) const {
        return cell.ones_prefix_x[static_cast<std::size_t>(s)] - cell.ones_prefix_x[static_cast<std::size_t>(lo - 1)];
    }
};

// ---- per-case candidate scans (minimal key strictly after the cursor) ----

Cursor scan_extend_y1(const FillContext& c, const Cursor& cursor) {
    CandKey key{c.table.at(c.i, c.j - 1).value + 1, c.i, c.j - 1, 0, 0};
    if (!after_cursor(key, cursor)) return std::nullopt;
    return key;
}

Cursor scan_extend_x1(const FillContext& c, const Cursor& cursor) {
    CandKey key{c.table.at(c.i - 1, c.j).value + 1, c.i - 1, c.j, 0, 0};
    if (!after_cursor(key, cursor)) return std::nullopt;
    return key;
}

Cursor scan_02(const FillContext& c, const Cursor& cursor) {
    const int r_hi = c.opts.relaxed_ranges ? c.i - 1 : c.i - 2;
    Cursor best;
    for (int r = c.l_yj - 1; r <= r_hi; ++r) {
        const DpCell& sub = c.table.at(r, c.j - 1);
        const int psi = c.ones_x_range(sub, c.l_yj, r);
        CandKey key{2 + sub.value - psi, r, c.j - 1, 0, 0};
        if (after_cursor(key, cursor) && (!best || key < *best)) best = key;
    }
    return best;
}

Cursor scan_20(const FillContext& c, const Cursor& cursor) {
    Cursor best;
    for (int w = c.l_xi - 1; w <= c.j - 1; ++w) {
        const DpCell& sub = c.table.at(c.i - 1, w);
        const int psi = sub.ones_adjacent_y[static_cast<std::size_t>(c.i)];
        CandKey key{2 + c.gaps_above(w) + sub.value - psi, c.i - 1, w, 0, 0};
        if (after_cursor(key, cursor) && (!best || key < *best)) best = key;
    }
    return best;
}

Cursor scan_22(const FillContext& c, const Cursor& cursor) {
    Cursor best;
    for (int s = c.l_yj - 1; s <= c.i - 1; ++s) {
        for (int t = c.l_xi - 1; t <= c.j - 1; ++t) {
            const DpCell& sub = c.table.at(s, t);
            const int psi_x_side = sub.ones_adjacent_y[static_cast<std::size_t>(c.i)];
            const int psi_y_side = c.ones_x_range(sub, c.l_yj, s);
            CandKey key{4 + c.gaps_above(t) + sub.value - psi_x_side - psi_y_side, s, t, 0, 0};
            if (after_cursor(key, cursor) && (!best || key < *best)) best = key;
        }
    }
    return best;
}

Cursor scan_00(const FillContext& c, const Cursor& cursor) {
    if (c.u_list.empty() || c.v_lo > c.v_hi) return std::nullopt;
    Cursor best;
    for (int v = c.v_lo; v <= c.v_hi; ++v) {
        const Rds1Result& rds = c.rds1_by_v[static_cast<std::size_t>(v - c.v_lo)];
        const int t_lo = c.view.min_neighbor_x(v) - 1;
        for (int u : c.u_list) {
            const int l_u = c.g.neighbors_y(u).lo;
            for (int s = l_u - 1; s <= c.i - 1; ++s) {
                for (int t = t_lo; t <= c.j - 1; ++t) {
                    const DpCell& sub = c.table.at(s, t);
                    const int psi_u = c.ones_x_range(sub, l_u, s);
                    const int psi_v = sub.ones_adjacent_y[static_cast<std::size_t>(v)];
                    const int formula = 4 + rds.cost + sub.value - psi_u - psi_v;

                    // The published formula charges full price for the 2s on
                    // u and v and for the gap cover even when those vertices
                    // already carry labels inside the subproblem. The cell
                    // invariant is value == weight of the stored labeling,
                    // so score by the exact overlay weight instead.
                    int corr = 0;
                    const RomanAssignment& lab = sub.labeling;
                    for (const auto& p : rds.partial) {
                        const int idx = p.vertex.index;
                        if (!p.vertex.on_x) {
                            if (idx == u)
                                corr -= p.label;  // overridden by u -> 2
                            else if (idx <= t)
                                corr -= lab.y(idx);
                        } else if (idx <= s) {
                            corr -= lab.x(idx);
                            if (lab.x(idx) == 1 && idx >= l_u) corr += 1;  // counted in psi_u, not reset
                        }
                    }
                    if (v <= s) {
                        corr -= lab.x(v);
                        if (lab.x(v) == 1 && v >= l_u) corr += 1;
                    }
                    if (u <= t) {
                        corr -= lab.y(u);
                        if (lab.y(u) == 1 && c.g.has_edge(v, u)) corr += 1;  // counted in psi_v, not reset
                    }

                    CandKey key{formula + corr, s, t, u, v};
                    if (after_cursor(key, cursor) && (!best || key < *best)) best = key;
                }
            }
        }
    }
    return best;
}

// ---- labeling builders ----

RomanAssignment build_extend_y1(const FillContext& c) {
    RomanAssignment out = c.table.at(c.i, c.j - 1).labeling;
    out.push_y(1);
    return out;
}

RomanAssignment build_extend_x1(const FillContext& c) {
    RomanAssignment out = c.table.at(c.i - 1, c.j).labeling;
    out.push_x(1);
    return out;
}

RomanAssignment build_02(const FillContext& c, const CandKey& key) {
    const int r = key.s;
    const DpCell& sub = c.table.at(r, c.j - 1);
    std::vector<PatchEntry> patch{{VertexRef{false, c.j}, Label{2}}};
    std::vector<VertexRef> resets;
    for (int a = c.l_yj; a <= r; ++a)
        if (sub.labeling.x(a) == 1) resets.push_back(VertexRef{true, a});
    return overlay(extend_to(sub.labeling, c.i + 1, c.j + 1), patch, resets);
}

RomanAssignment build_20(const FillContext& c, const CandKey& key) {
    const int w = key.t;
    const DpCell& sub = c.table.at(c.i - 1, w);
    std::vector<PatchEntry> patch{{VertexRef{true, c.i}, Label{2}}};
    for (int b : c.gaps)
        if (b > w) patch.push_back({VertexRef{false, b}, Label{1}});
    std::vector<VertexRef> resets;
    for (int b : c.g.neighbors_x(c.i)) {
        if (b > w) break;
        if (sub.labeling.y(b) == 1) resets.push_back(VertexRef{false, b});
    }
    return overlay(extend_to(sub.labeling, c.i + 1, c.j + 1), patch, resets);
}

RomanAssignment build_22(const FillContext& c, const CandKey& key) {
    const DpCell& sub = c.table.at(key.s, key.t);
    std::vector<PatchEntry> patch{{VertexRef{true, c.i}, Label{2}}, {VertexRef{false, c.j}, Label{2}}};
    for (int b : c.gaps)
        if (b > key.t) patch.push_back({VertexRef{false, b}, Label{1}});
    std::vector<VertexRef> resets;
    for (int a = c.l_yj; a <= key.s; ++a)
        if (sub.labeling.x(a) == 1) resets.push_back(VertexRef{true, a});
    for (int b : c.g.neighbors_x(c.i)) {
        if (b > key.t) break;
        if (sub.labeling.y(b) == 1) resets.push_back(VertexRef{false, b});
    }
    return overlay(extend_to(sub.labeling, c.i + 1, c.j + 1), patch, resets);
}

RomanAssignment build_00(const FillContext& c, const CandKey& key) {
    const DpCell& sub = c.table.at(key.s, key.t);
    const Rds1Result& rds = c.rds1_by_v[static_cast<std::size_t>(key.v - c.v_lo)];

    // Patch order: gap cover first, then the defining 2s of the pair (u, v)
    // so they win any overlap with S1/S2.
    std::vector<PatchEntry> patch = rds.partial;
    patch.push_back({VertexRef{false, key.u}, Label{2}});
    patch.push_back({VertexRef{true, key.v}, Label{2}});

    std::vector<char> touched_x(static_cast<std::size_t>(c.i + 1), 0);
    std::vector<char> touched_y(static_cast<std::size_t>(c.j + 1), 0);
    for (const auto& p : patch)
        (p.vertex.on_x ? touched_x : touched_y)[static_cast<std::size_t>(p.vertex.index)] = 1;

    std::vector<VertexRef> resets;
    const int l_u = c.g.neighbors_y(key.u).lo;
    for (int a = l_u; a <= key.s; ++a)
        if (sub.labeling.x(a) == 1 && !touched_x[static_cast<std::size_t>(a)]) resets.push_back(VertexRef{true, a});
    for (int b : c.g.neighbors_x(key.v)) {
        if (b > key.t) break;
        if (sub.labeling.y(b) == 1 && !touched_y[static_cast<std::size_t>(b)]) resets.push_back(VertexRef{false, b});
    }
    return overlay(extend_to(sub.labeling, c.i + 1, c.j + 1), patch, resets);
}

enum CaseIndex { kA1 = 0, kA2, kA3, kA4, kA5, kA6, kCaseCount };

void finalize_cell(DpCell& cell, const AugmentedGraph& g, int i, int j) {
    cell.ones_prefix_x.assign(static_cast<std::size_t>(i) + 1, 0);
    for (int a = 1; a <= i; ++a)
        cell.ones_prefix_x[static_cast<std::size_t>(a)] =
            cell.ones_prefix_x[static_cast<std::size_t>(a - 1)] + (cell.labeling.x(a) == 1 ? 1 : 0);
    std::vector<int> diff(static_cast<std::size_t>(g.m()) + 2, 0);
    for (int b = 1; b <= j; ++b) {
        if (cell.labeling.y(b) != 1) continue;
        const Interval iv = g.neighbors_y(b);
        if (iv.empty()) continue;
        ++diff[static_cast<std::size_t>(iv.lo)];
        --diff[static_cast<std::size_t>(iv.hi) + 1];
    }
    cell.ones_adjacent_y.assign(static_cast<std::size_t>(g.m()) + 1, 0);
    int run = 0;
    for (int a = 1; a <= g.m(); ++a) {
        run += diff[static_cast<std::size_t>(a)];
        cell.ones_adjacent_y[static_cast<std::size_t>(a)] = run;
    }
}

void fill_cell(const AugmentedGraph& g, DpTable& table, const SolveOptions& opts, SolveStats& stats, int i,
               int j) {
    FillContext ctx(g, table, opts, stats, i, j);

    struct CaseSlot {
        CaseTag tag;
        Cursor (*scan)(const FillContext&, const Cursor&);
        RomanAssignment (*build)(const FillContext&, const CandKey&);
    };
    // Tie order is the declaration order below.
    std::vector<CaseSlot> cases;
    if (ctx.edge) {
        cases = {
            {CaseTag::A1_00, scan_00, build_00},
            {CaseTag::A2_y1, scan_extend_y1, [](const FillContext& c, const CandKey&) { return build_extend_y1(c); }},
            {CaseTag::A3_02, scan_02, build_02},
            {CaseTag::A4_x1, scan_extend_x1, [](const FillContext& c, const CandKey&) { return build_extend_x1(c); }},
            {CaseTag::A5_20, scan_20, build_20},
            {CaseTag::A6_22, scan_22, build_22},
        };
    } else {
        cases = {
            {CaseTag::B2_y1, scan_extend_y1, [](const FillContext& c, const CandKey&) { return build_extend_y1(c); }},
            {CaseTag::B3_x1, scan_extend_x1, [](const FillContext& c, const CandKey&) { return build_extend_x1(c); }},
        };
    }

    std::vector<Cursor> cursors(cases.size());
    std::vector<Cursor> current(cases.size());
    for (std::size_t k = 0; k < cases.size(); ++k) current[k] = cases[k].scan(ctx, cursors[k]);

    while (true) {
        int pick = -1;
        for (std::size_t k = 0; k < cases.size(); ++k) {
            if (!current[k]) continue;
            if (pick < 0 || current[k]->value < current[static_cast<std::size_t>(pick)]->value) pick = static_cast<int>(k);
        }
        if (pick < 0) throw InternalError("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") has no admissible candidate");
        const CandKey key = *current[static_cast<std::size_t>(pick)];
        RomanAssignment lab = cases[static_cast<std::size_t>(pick)].build(ctx, key);

        const bool weight_ok = lab.weight() == key.value;
        const bool valid = weight_ok && is_valid_rdf(ctx.view, lab);
        if (!weight_ok)
            ++stats.candidates_discarded_weight;
        else if (!valid)
            ++stats.candidates_discarded_invalid;
        if (weight_ok && valid) {
            DpCell& cell = table.at(i, j);
            cell.value = key.value;
            cell.tag = cases[static_cast<std::size_t>(pick)].tag;
            cell.labeling = std::move(lab);

            // 1-extension over a subcell that labels the partner 2 can tie
            // other cases but never strictly beat all of them.
            bool guard_shape = false;
            if (ctx.edge && cell.tag == CaseTag::A2_y1 && table.at(i, j - 1).labeling.x(i) == 2) guard_shape = true;
            if (ctx.edge && cell.tag == CaseTag::A4_x1 && table.at(i - 1, j).labeling.y(j) == 2) guard_shape = true;
            if (guard_shape) {
                bool strict = true;
                for (std::size_t k = 0; k < cases.size(); ++k) {
                    if (static_cast<int>(k) == pick || !current[k]) continue;
                    if (current[k]->value <= cell.value) strict = false;
                }
                if (strict) ++stats.lemma3_guard_hits;
            }

            finalize_cell(cell, g, i, j);
            return;
        }
        cursors[static_cast<std::size_t>(pick)] = key;
        current[static_cast<std::size_t>(pick)] = cases[static_cast<std::size_t>(pick)].scan(ctx, cursors[static_cast<std::size_t>(pick)]);
    }
}

}  // namespace

SolveResult solve(const AugmentedGraph& g, const SolveOptions& opts) {
    if (!g.base().is_normalized()) throw Error("solve requires the graph in normal form; call normalized() first");
    const int m = g.m();
    const int n = g.n();
    SolveResult res{0, {}, DpTable(m, n), {}};

    for (int i = 0; i <= m; ++i) {
        DpCell& cell = res.table.at(i, 0);
        cell.value = 2 + i;
        cell.tag = CaseTag::Base;
        cell.labeling = RomanAssignment::all_ones(i + 1, 1);
        finalize_cell(cell, g, i, 0);
    }
    for (int j = 1; j <= n; ++j) {
        DpCell& cell = res.table.at(0, j);
        cell.value = 2 + j;
        cell.tag = CaseTag::Base;
        cell.labeling = RomanAssignment::all_ones(1, j + 1);
        finalize_cell(cell, g, 0, j);
    }

    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) fill_cell(g, res.table, opts, res.stats, i, j);

    const DpCell& final_cell = res.table.at(m, n);
    const GraphView full(g, m, n);
    if (auto bad = first_violation(full, final_cell.labeling)) {
        const auto& v = bad->vertex;
        throw InvalidWitness(m, n, std::string(v.on_x ? "x" : "y") + std::to_string(v.index));
    }
    if (final_cell.labeling.weight() != final_cell.value)
        throw InvalidWitness(m, n, "weight mismatch");
    res.rdn = final_cell.value - 2;
    res.witness = final_cell.labeling;
    return res;
}

}  // namespace roman
