#pragma once

#include <stdexcept>
#include <string>

namespace roman {

// Base class for all errors raised by the library. The CLI maps these to
// stable exit codes; tests match on concrete types.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntervalOutOfRange : Error {
    using Error::Error;
};

struct SizeMismatch : Error {
    using Error::Error;
};

// Raised by from_edge_list when a Y vertex's neighborhood has a hole in the
// given X order. `y` is the offending Y index, `gap_x` the first missing
// X index inside its span (both 1-based).
struct NotConvex : Error {
    int y;
    int gap_x;
    NotConvex(int y_, int gap_x_)
        : Error("y" + std::to_string(y_) + " is not convex: hole at x" + std::to_string(gap_x_)),
          y(y_),
          gap_x(gap_x_) {}
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// A reset targeted a vertex that is not labeled 1; signals a bug in the
// computation of a psi set.
struct ResetOfNonOne : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& reason)
        : Error("line " + std::to_string(line_) + ": " + reason), line(line_) {}
};

struct WrongLineCount : Error {
    using Error::Error;
};

struct EmptyInterval : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

// An invariant that is proven to hold was observed broken; always a bug in
// this library, never a property of the input.
struct InternalError : Error {
    using Error::Error;
};

// A DP cell's reconstructed labeling failed validation on its view.
struct InvalidWitness : Error {
    int i;
    int j;
    std::string vertex;
    InvalidWitness(int i_, int j_, std::string vertex_)
        : Error("cell (" + std::to_string(i_) + "," + std::to_string(j_) + "): labeling invalid at " + vertex_),
          i(i_),
          j(j_),
          vertex(std::move(vertex_)) {}
};

}  // namespace roman
