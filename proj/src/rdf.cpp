#include "roman/rdf.hpp"

#include <string>

namespace roman {

RomanAssignment RomanAssignment::filled(int x_count, int y_count, Label fill) {
    RomanAssignment a;
    a.x_.assign(static_cast<std::size_t>(x_count), fill);
    a.y_.assign(static_cast<std::size_t>(y_count), fill);
    a.weight_ = (x_count + y_count) * fill;
    return a;
}

void RomanAssignment::set_x(int a, Label l) {
    if (a < 0 || a >= x_count()) throw IndexOutOfRange("x label index " + std::to_string(a));
    weight_ += l - x_[static_cast<std::size_t>(a)];
    x_[static_cast<std::size_t>(a)] = l;
}

void RomanAssignment::set_y(int b, Label l) {
    if (b < 0 || b >= y_count()) throw IndexOutOfRange("y label index " + std::to_string(b));
    weight_ += l - y_[static_cast<std::size_t>(b)];
    y_[static_cast<std::size_t>(b)] = l;
}

void RomanAssignment::push_x(Label l) {
    x_.push_back(l);
    weight_ += l;
}

void RomanAssignment::push_y(Label l) {
    y_.push_back(l);
    weight_ += l;
}

std::optional<Violation> first_violation(const GraphView& view, const RomanAssignment& a) {
    if (a.x_count() != view.top_i() + 1 || a.y_count() != view.top_j() + 1)
        throw DimensionMismatch("assignment is " + std::to_string(a.x_count()) + "+" +
                                std::to_string(a.y_count()) + " labels, view needs " +
                                std::to_string(view.top_i() + 1) + "+" + std::to_string(view.top_j() + 1));
    for (int i = 0; i <= view.top_i(); ++i) {
        if (a.x(i) != 0) continue;
        bool dominated = false;
        if (i >= 1) {
            for (int b : view.graph().neighbors_x(i)) {
                if (b > view.top_j()) break;
                if (a.y(b) == 2) {
                    dominated = true;
                    break;
                }
            }
        }
        if (!dominated) return Violation{VertexRef{true, i}};
    }
    for (int j = 0; j <= view.top_j(); ++j) {
        if (a.y(j) != 0) continue;
        bool dominated = false;
        const Interval iv = view.interval_y(j);
        for (int i = iv.lo; i != 0 && i <= iv.hi; ++i) {
            if (a.x(i) == 2) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return Violation{VertexRef{false, j}};
    }
    return std::nullopt;
}

RomanAssignment overlay(const RomanAssignment& base, const std::vector<PatchEntry>& patch,
                        const std::vector<VertexRef>& resets) {
    RomanAssignment out = base;
    for (const auto& p : patch) out.set(p.vertex, p.label);
    for (const auto& v : resets) {
        if (out.get(v) != 1)
            throw ResetOfNonOne("reset target " + std::string(v.on_x ? "x" : "y") + std::to_string(v.index) +
                                " has label " + std::to_string(out.get(v)));
        out.set(v, 0);
    }
    return out;
}

}  // namespace roman
