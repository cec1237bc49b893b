#include "roman/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace roman {

namespace {

// Closed neighborhood masks over V = X u Y with x_i at bit i-1 and y_j at
// bit m+j-1.
std::vector<std::uint64_t> closed_neighborhoods(const ConvexBipartiteGraph& g) {
    const int m = g.m();
    const int n = g.n();
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(m + n));
    for (int i = 1; i <= m; ++i) {
        std::uint64_t mask = 1ULL << (i - 1);
        for (int j : g.x_neighbors(i)) mask |= 1ULL << (m + j - 1);
        nb[static_cast<std::size_t>(i - 1)] = mask;
    }
    for (int j = 1; j <= n; ++j) {
        std::uint64_t mask = 1ULL << (m + j - 1);
        const Interval& iv = g.interval(j);
        for (int i = iv.lo; i != 0 && i <= iv.hi; ++i) mask |= 1ULL << (i - 1);
        nb[static_cast<std::size_t>(m + j - 1)] = mask;
    }
    return nb;
}

RomanAssignment assignment_from_two_set(const ConvexBipartiteGraph& g, std::uint64_t two_set,
                                        std::uint64_t dominated) {
    const int m = g.m();
    const int n = g.n();
    RomanAssignment a = RomanAssignment::filled(m + 1, n + 1, 1);
    for (int i = 1; i <= m; ++i) {
        const std::uint64_t bit = 1ULL << (i - 1);
        if (two_set & bit)
            a.set_x(i, 2);
        else if (dominated & bit)
            a.set_x(i, 0);
    }
    for (int j = 1; j <= n; ++j) {
        const std::uint64_t bit = 1ULL << (m + j - 1);
        if (two_set & bit)
            a.set_y(j, 2);
        else if (dominated & bit)
            a.set_y(j, 0);
    }
    return a;
}

}  // namespace

OracleResult oracle_solve(const ConvexBipartiteGraph& g, const OracleOptions& opts) {
    const int m = g.m();
    const int n = g.n();
    const int v = m + n;
    if (v > opts.subset_cap)
        throw TooLarge("oracle limited to " + std::to_string(opts.subset_cap) + " vertices, got " +
                       std::to_string(v));
    const auto nb = closed_neighborhoods(g);

    OracleResult res;
    int best = -1;
    std::uint64_t best_set = 0;
    std::uint64_t best_dominated = 0;
    const std::uint64_t all = (v == 64) ? ~0ULL : ((1ULL << v) - 1);
    for (std::uint64_t s = 0; s < (1ULL << v); ++s) {
        std::uint64_t dominated = 0;
        std::uint64_t rest = s;
        while (rest) {
            const int b = std::countr_zero(rest);
            rest &= rest - 1;
            dominated |= nb[static_cast<std::size_t>(b)];
        }
        const int cost = 2 * std::popcount(s) + std::popcount(all & ~dominated);
        if (best < 0 || cost < best) {
            best = cost;
            best_set = s;
            best_dominated = dominated;
        }
    }
    res.optimum = best;
    res.witness = assignment_from_two_set(g, best_set, best_dominated & ~best_set);

    if (opts.enumerate_all) {
        if (v > opts.enumerate_cap)
            throw TooLarge("all-optima enumeration limited to " + std::to_string(opts.enumerate_cap) +
                           " vertices, got " + std::to_string(v));
        std::vector<Label> labels(static_cast<std::size_t>(v), 0);
        // Odometer over 3^v labelings.
        while (true) {
            int w = 0;
            for (Label l : labels) w += l;
            if (w == best) {
                std::uint64_t two_mask = 0;
                for (int b = 0; b < v; ++b)
                    if (labels[static_cast<std::size_t>(b)] == 2) two_mask |= 1ULL << b;
                std::uint64_t covered = two_mask;
                std::uint64_t rest = two_mask;
                while (rest) {
                    const int b = std::countr_zero(rest);
                    rest &= rest - 1;
                    covered |= nb[static_cast<std::size_t>(b)];
                }
                bool valid = true;
                for (int b = 0; b < v && valid; ++b)
                    if (labels[static_cast<std::size_t>(b)] == 0 && !(covered & (1ULL << b))) valid = false;
                if (valid) {
                    ++res.all_optima_count;
                    if (res.all_optima.size() < opts.all_optima_cap) {
                        RomanAssignment a = RomanAssignment::filled(m + 1, n + 1, 1);
                        for (int i = 1; i <= m; ++i) a.set_x(i, labels[static_cast<std::size_t>(i - 1)]);
                        for (int j = 1; j <= n; ++j) a.set_y(j, labels[static_cast<std::size_t>(m + j - 1)]);
                        res.all_optima.push_back(std::move(a));
                    } else {
                        res.all_optima_overflow = true;
                    }
                }
            }
            int pos = 0;
            while (pos < v && labels[static_cast<std::size_t>(pos)] == 2) {
                labels[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == v) break;
            ++labels[static_cast<std::size_t>(pos)];
        }
    }
    return res;
}

int oracle_optimum_by_enumeration(const ConvexBipartiteGraph& g, int cap) {
    const int m = g.m();
    const int n = g.n();
    const int v = m + n;
    if (v > cap) throw TooLarge("enumeration limited to " + std::to_string(cap) + " vertices");
    const auto nb = closed_neighborhoods(g);
    std::vector<Label> labels(static_cast<std::size_t>(v), 0);
    int best = -1;
    while (true) {
        std::uint64_t two_mask = 0;
        int w = 0;
        for (int b = 0; b < v; ++b) {
            w += labels[static_cast<std::size_t>(b)];
            if (labels[static_cast<std::size_t>(b)] == 2) two_mask |= 1ULL << b;
        }
        std::uint64_t covered = two_mask;
        std::uint64_t rest = two_mask;
        while (rest) {
            const int b = std::countr_zero(rest);
            rest &= rest - 1;
            covered |= nb[static_cast<std::size_t>(b)];
        }
        bool valid = true;
        for (int b = 0; b < v && valid; ++b)
            if (labels[static_cast<std::size_t>(b)] == 0 && !(covered & (1ULL << b))) valid = false;
        if (valid && (best < 0 || w < best)) best = w;
        int pos = 0;
        while (pos < v && labels[static_cast<std::size_t>(pos)] == 2) {
            labels[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == v) break;
        ++labels[static_cast<std::size_t>(pos)];
    }
    return best;
}

int min_stab_bruteforce(const std::vector<Interval>& intervals) {
    std::vector<int> points;
    for (const auto& iv : intervals) {
        if (iv.empty() || iv.lo > iv.hi) throw EmptyInterval("degenerate interval in stab instance");
        for (int p = iv.lo; p <= iv.hi; ++p) points.push_back(p);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() > 12) throw TooLarge("stab brute force limited to 12 candidate points");
    const int r = static_cast<int>(points.size());
    int best = r + 1;
    for (std::uint32_t c = 0; c < (1u << r); ++c) {
        const int size = std::popcount(c);
        if (size >= best) continue;
        bool ok = true;
        for (const auto& iv : intervals) {
            bool stabbed = false;
            for (int p = 0; p < r && !stabbed; ++p)
                if ((c & (1u << p)) && iv.contains(points[static_cast<std::size_t>(p)])) stabbed = true;
            if (!stabbed) {
                ok = false;
                break;
            }
        }
        if (ok) best = size;
    }
    return best;
}

std::vector<int> GapInstance::s2_points() const {
    std::vector<int> points;
    for (const auto& iv : s1_intervals)
        for (int p = iv.lo; p != 0 && p <= iv.hi; ++p) points.push_back(p);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

int rds1_bruteforce(const GapInstance& gap) {
    const auto points = gap.s2_points();
    const int k = static_cast<int>(gap.s1_intervals.size());
    const int r = static_cast<int>(points.size());
    if (k + r > 12) throw TooLarge("rds1 brute force limited to 12 vertices");
    // Vertices: S1 members then S2 points; labels via odometer.
    const int v = k + r;
    std::vector<Label> labels(static_cast<std::size_t>(v), 0);
    int best = -1;
    while (true) {
        int w = 0;
        for (Label l : labels) w += l;
        if (best < 0 || w < best) {
            bool valid = true;
            for (int z = 0; z < k && valid; ++z) {
                if (labels[static_cast<std::size_t>(z)] >= 1) continue;
                bool covered = false;
                for (int p = 0; p < r && !covered; ++p)
                    if (labels[static_cast<std::size_t>(k + p)] == 2 &&
                        gap.s1_intervals[static_cast<std::size_t>(z)].contains(points[static_cast<std::size_t>(p)]))
                        covered = true;
                if (!covered) valid = false;
            }
            if (valid) best = w;
        }
        int pos = 0;
        while (pos < v && labels[static_cast<std::size_t>(pos)] == 2) {
            labels[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == v) break;
        ++labels[static_cast<std::size_t>(pos)];
    }
    return best < 0 ? 0 : best;
}

}  // namespace roman
