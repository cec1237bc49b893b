#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "roman/graph.hpp"

namespace roman {

// Roman value of a vertex: 0, 1 or 2.
using Label = std::uint8_t;

// Reference to a vertex of either partite set. Index 0 is the sentinel.
struct VertexRef {
    bool on_x = true;
    int index = 0;

    friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

// Total labeling of G[X_i, Y_j] including the sentinels at index 0.
// The weight is cached and kept in sync by the mutators.
class RomanAssignment {
public:
    RomanAssignment() = default;

    // All vertices labeled `fill`; sizes include the sentinel slot.
    static RomanAssignment filled(int x_count, int y_count, Label fill);
    // The base-case labeling: everything 1 (sentinels included).
    static RomanAssignment all_ones(int x_count, int y_count) { return filled(x_count, y_count, 1); }

    int x_count() const { return static_cast<int>(x_.size()); }  // i + 1
    int y_count() const { return static_cast<int>(y_.size()); }

    Label x(int a) const { return x_[static_cast<std::size_t>(a)]; }
    Label y(int b) const { return y_[static_cast<std::size_t>(b)]; }
    Label get(VertexRef v) const { return v.on_x ? x(v.index) : y(v.index); }

    void set_x(int a, Label l);
    void set_y(int b, Label l);
    void set(VertexRef v, Label l) { v.on_x ? set_x(v.index, l) : set_y(v.index, l); }

    // Appends a vertex labeled `l` at the top of a partite set.
    void push_x(Label l);
    void push_y(Label l);

    // Sum of all labels, sentinels included.
    int weight() const { return weight_; }
    // Sum excluding the two sentinel slots.
    int real_weight() const { return weight_ - x_[0] - y_[0]; }

    friend bool operator==(const RomanAssignment&, const RomanAssignment&) = default;

private:
    std::vector<Label> x_;
    std::vector<Label> y_;
    int weight_ = 0;
};

inline int weight(const RomanAssignment& a) { return a.weight(); }

// First vertex violating the Roman domination condition.
struct Violation {
    VertexRef vertex;
    friend bool operator==(const Violation&, const Violation&) = default;
};

// A labeling is a valid Roman dominating function on the view iff every
// 0-labeled vertex has a 2-labeled neighbor inside the view. Returns the
// lowest-index violator, X side scanned before Y. Throws DimensionMismatch
// if the assignment does not cover exactly the view's vertices.
std::optional<Violation> first_violation(const GraphView& view, const RomanAssignment& a);
inline bool is_valid_rdf(const GraphView& view, const RomanAssignment& a) {
    return !first_violation(view, a).has_value();
}

struct PatchEntry {
    VertexRef vertex;
    Label label;
};

// Applies `patch` to `base`, then sets every vertex in `resets` to 0.
// Reset targets must be labeled 1 when the reset is applied; anything else
// signals a psi-set computation bug and throws ResetOfNonOne.
RomanAssignment overlay(const RomanAssignment& base, const std::vector<PatchEntry>& patch,
                        const std::vector<VertexRef>& resets);

}  // namespace roman
