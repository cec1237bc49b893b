#include "roman/instance_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace roman {

namespace {

struct Line {
    int number;  // 1-based position in the input
    std::string_view text;
};

// Significant lines only: comments and blank lines dropped.
std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size()) {
            if (number == 0) break;  // empty input
            break;
        }
        std::size_t nl = text.find('\n', pos);
        std::size_t end = (nl == std::string_view::npos) ? text.size() : nl;
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        bool blank = line.find_first_not_of(" \t") == std::string_view::npos;
        if (!blank && line[line.find_first_not_of(" \t")] != '#') out.push_back({number, line});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

std::vector<long long> parse_ints(const Line& line, const char* what) {
    std::vector<long long> vals;
    const std::string_view s = line.text;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
        if (pos >= s.size()) break;
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
        if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t'))
            throw ParseError(line.number, std::string("expected ") + what + ", got '" + std::string(s) + "'");
        vals.push_back(v);
        pos = static_cast<std::size_t>(ptr - s.data());
    }
    return vals;
}

}  // namespace

ConvexBipartiteGraph parse_cbg(std::string_view text) {
    const auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError(1, "empty input, expected header 'm n'");
    const auto header = parse_ints(lines[0], "integers");
    if (header.size() != 2) throw ParseError(lines[0].number, "header must be exactly 'm n'");
    const long long m = header[0];
    const long long n = header[1];
    if (m < 0 || n < 0 || m > 1000000 || n > 1000000)
        throw ParseError(lines[0].number, "m and n must be nonnegative and sane");
    if (static_cast<long long>(lines.size()) - 1 != n)
        throw WrongLineCount("expected " + std::to_string(n) + " interval lines, got " +
                             std::to_string(lines.size() - 1));
    std::vector<Interval> intervals;
    intervals.reserve(static_cast<std::size_t>(n));
    for (long long j = 1; j <= n; ++j) {
        const Line& line = lines[static_cast<std::size_t>(j)];
        const auto vals = parse_ints(line, "interval 'lo hi'");
        if (vals.size() != 2) throw ParseError(line.number, "interval line must be exactly 'lo hi'");
        if (vals[0] < 0 || vals[1] < 0 || vals[0] > m || vals[1] > m)
            throw IntervalOutOfRange("line " + std::to_string(line.number) + ": interval (" +
                                     std::to_string(vals[0]) + "," + std::to_string(vals[1]) +
                                     ") out of range for m=" + std::to_string(m));
        intervals.push_back({static_cast<int>(vals[0]), static_cast<int>(vals[1])});
    }
    return ConvexBipartiteGraph::from_intervals(static_cast<int>(m), static_cast<int>(n), std::move(intervals));
}

std::string serialize_cbg(const ConvexBipartiteGraph& g) {
    std::ostringstream out;
    out << g.m() << ' ' << g.n() << '\n';
    for (int j = 1; j <= g.n(); ++j) {
        const Interval& iv = g.interval(j);
        out << iv.lo << ' ' << iv.hi << '\n';
    }
    return out.str();
}

namespace {

std::vector<Label> parse_rdf_side(const Line& line, char tag, int count) {
    const std::string_view s = line.text;
    const std::string prefix = std::string(1, tag) + ":";
    if (s.substr(0, 2) != prefix) throw ParseError(line.number, "expected line to start with '" + prefix + "'");
    Line rest{line.number, s.substr(2)};
    const auto vals = parse_ints(rest, "labels");
    if (static_cast<int>(vals.size()) != count)
        throw DimensionMismatch("expected " + std::to_string(count) + " labels on line " +
                                std::to_string(line.number) + ", got " + std::to_string(vals.size()));
    std::vector<Label> labels;
    labels.reserve(vals.size());
    for (long long v : vals) {
        if (v < 0 || v > 2) throw ParseError(line.number, "label " + std::to_string(v) + " not in {0,1,2}");
        labels.push_back(static_cast<Label>(v));
    }
    return labels;
}

}  // namespace

RomanAssignment parse_rdf(std::string_view text, int m, int n) {
    const auto lines = significant_lines(text);
    if (lines.size() != 2) throw WrongLineCount("RDF must have exactly 2 significant lines");
    const auto xs = parse_rdf_side(lines[0], 'X', m);
    const auto ys = parse_rdf_side(lines[1], 'Y', n);
    RomanAssignment a = RomanAssignment::filled(1, 1, 1);  // sentinels
    for (Label l : xs) a.push_x(l);
    for (Label l : ys) a.push_y(l);
    return a;
}

std::string serialize_rdf(const RomanAssignment& a) {
    std::ostringstream out;
    out << "X:";
    for (int i = 1; i < a.x_count(); ++i) out << ' ' << static_cast<int>(a.x(i));
    out << "\nY:";
    for (int j = 1; j < a.y_count(); ++j) out << ' ' << static_cast<int>(a.y(j));
    out << '\n';
    return out.str();
}

}  // namespace roman
