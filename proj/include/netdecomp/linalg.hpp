#pragma once

#include <vector>

#include "netdecomp/matrix.hpp"

namespace netdecomp {

struct PivotPos {
    int row;
    int col;
    bool operator==(const PivotPos&) const = default;
};

struct RrefResult {
    Mat reduced;
    ElemOpLog log;                 // replaying on the input reproduces `reduced`
    std::vector<PivotPos> pivots;  // in scan order
};

// Reduced echelon form along the chosen axis. Pivoting is purely positional:
// for rows, scan columns left to right and take the topmost unused row with a
// nonzero entry; no magnitude heuristics (exact arithmetic needs none).
RrefResult rref(const Mat& m, OpAxis axis = OpAxis::rows);

int rank(const Mat& m);

// True iff v (1 x m.cols()) lies in the row space of m,
// i.e. rank(stack(m, v)) == rank(m).
bool row_space_contains(const Mat& m, const Mat& v);

// Columns form a basis of { x : m x = 0 }; count = cols - rank.
Mat null_space(const Mat& m);

// Exact inverse; throws SingularMatrix when rank < dimension.
Mat invert(const Mat& m);

// Greedy completion to a square invertible matrix: append standard-basis
// lines e_i in increasing i, keeping each that strictly increases rank.
// Returns only the appended rows (axis = rows) or columns (axis = columns).
// The input's own lines must already be independent.
Mat complete_to_full_rank(const Mat& m, OpAxis axis = OpAxis::rows);

// Incremental row-span tracker used by the greedy scans; kept public because
// several modules need "does this row grow the span" queries in sequence.
class RowSpan {
public:
    explicit RowSpan(int cols) : cols_(cols) {}
    int dimension() const { return static_cast<int>(rows_.size()); }
    bool contains(const Mat& row) const;
    // Adds `row` to the span; returns true iff the dimension grew.
    bool insert(const Mat& row);

private:
    int cols_;
    std::vector<std::vector<Rational>> rows_;  // reduced: each has a pivot col
    std::vector<int> pivot_cols_;
};

}  // namespace netdecomp
