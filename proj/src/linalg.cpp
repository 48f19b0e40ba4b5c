#include "netdecomp/linalg.hpp"

#include <algorithm>

#include "netdecomp/errors.hpp"

namespace netdecomp {

namespace {

// Row-axis reduced echelon form; the column variant transposes around it.
RrefResult rref_rows(const Mat& input) {
    RrefResult res;
    res.reduced = input;
    Mat& m = res.reduced;
    int next_row = 0;
    for (int col = 0; col < m.cols() && next_row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = next_row; r < m.rows(); ++r) {
            if (!m(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != next_row) {
            ElemOp op{ElemOp::Kind::swap, OpAxis::rows, next_row, pivot, Rational()};
            apply_op(m, op);
            res.log.push_back(op);
        }
        if (!m(next_row, col).is_one()) {
            ElemOp op{ElemOp::Kind::scale, OpAxis::rows, next_row, 0,
                      inverse(m(next_row, col))};
            apply_op(m, op);
            res.log.push_back(op);
        }
        for (int r = 0; r < m.rows(); ++r) {
            if (r == next_row || m(r, col).is_zero()) continue;
            ElemOp op{ElemOp::Kind::add_multiple, OpAxis::rows, r, next_row, -m(r, col)};
            apply_op(m, op);
            res.log.push_back(op);
        }
        res.pivots.push_back({next_row, col});
        ++next_row;
    }
    return res;
}

ElemOp transpose_op(ElemOp op) {
    op.axis = op.axis == OpAxis::rows ? OpAxis::columns : OpAxis::rows;
    return op;
}

}  // namespace

RrefResult rref(const Mat& m, OpAxis axis) {
    if (axis == OpAxis::rows) return rref_rows(m);
    RrefResult t = rref_rows(m.transpose());
    RrefResult res;
    res.reduced = t.reduced.transpose();
    res.log.reserve(t.log.size());
    for (const auto& op : t.log) res.log.push_back(transpose_op(op));
    res.pivots.reserve(t.pivots.size());
    for (const auto& p : t.pivots) res.pivots.push_back({p.col, p.row});
    return res;
}

int rank(const Mat& m) { return static_cast<int>(rref_rows(m).pivots.size()); }

bool row_space_contains(const Mat& m, const Mat& v) {
    if (v.rows() != 1 || v.cols() != m.cols())
        throw DimensionMismatch("row_space_contains expects a 1x" +
                                std::to_string(m.cols()) + " vector");
    return rank(Mat::vstack(m, v)) == rank(m);
}

Mat null_space(const Mat& m) {
    RrefResult r = rref_rows(m);
    std::vector<int> pivot_col(m.cols(), -1);
    for (const auto& p : r.pivots) pivot_col[p.col] = p.row;
    int free_count = m.cols() - static_cast<int>(r.pivots.size());
    Mat basis(m.cols(), free_count);
    int k = 0;
    for (int j = 0; j < m.cols(); ++j) {
        if (pivot_col[j] >= 0) continue;
        basis(j, k) = Rational(1);
        for (const auto& p : r.pivots) basis(p.col, k) = -r.reduced(p.row, j);
        ++k;
    }
    return basis;
}

Mat invert(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("invert expects a square matrix");
    const int n = m.rows();
    RrefResult r = rref_rows(Mat::hstack(m, Mat::identity(n)));
    for (int i = 0; i < n; ++i) {
        if (i >= static_cast<int>(r.pivots.size()) || r.pivots[i].col != i)
            throw SingularMatrix("matrix of rank below its dimension");
    }
    std::vector<int> right(n);
    for (int j = 0; j < n; ++j) right[j] = n + j;
    return r.reduced.select_cols(right);
}

bool RowSpan::contains(const Mat& row) const {
    std::vector<Rational> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = row(0, j);
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational c = v[pivot_cols_[r]];  // by value: the loop below mutates v
        if (c.is_zero()) continue;
        for (int j = 0; j < cols_; ++j) v[j] -= c * rows_[r][j];
    }
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

bool RowSpan::insert(const Mat& row) {
    std::vector<Rational> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = row(0, j);
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational c = v[pivot_cols_[r]];  // by value: the loop below mutates v
        if (c.is_zero()) continue;
        for (int j = 0; j < cols_; ++j) v[j] -= c * rows_[r][j];
    }
    int pivot = -1;
    for (int j = 0; j < cols_; ++j) {
        if (!v[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0) return false;
    Rational inv = inverse(v[pivot]);
    for (int j = 0; j < cols_; ++j) v[j] *= inv;
    rows_.push_back(std::move(v));
    pivot_cols_.push_back(pivot);
    return true;
}

Mat complete_to_full_rank(const Mat& m, OpAxis axis) {
    const Mat work = axis == OpAxis::rows ? m : m.transpose();
    const int n = work.cols();
    RowSpan span(n);
    for (int i = 0; i < work.rows(); ++i) {
        if (!span.insert(work.row(i)))
            throw InvariantViolation("complete_to_full_rank: input lines are dependent");
    }
    Mat appended(0, n);
    for (int i = 0; i < n && span.dimension() < n; ++i) {
        Mat e(1, n);
        e(0, i) = Rational(1);
        if (span.insert(e)) appended = Mat::vstack(appended, e);
    }
    return axis == OpAxis::rows ? appended : appended.transpose();
}

}  // namespace netdecomp
