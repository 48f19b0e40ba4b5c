#include "netdecomp/matrix.hpp"

#include <sstream>
#include <utility>

#include "netdecomp/errors.hpp"

namespace netdecomp {

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    data_.assign(static_cast<size_t>(rows) * cols, Rational());
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Mat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw DimensionMismatch("ragged row in matrix literal");
        int j = 0;
        for (long long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DimensionMismatch("ragged row in matrix literal");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Mat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs(k, j);
                if (!b.is_zero()) out(i, j) += a * b;
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    Mat out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    Mat out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

bool Mat::operator==(const Mat& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool Mat::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
        }
    return true;
}

Mat Mat::row(int r) const {
    Mat out(1, cols_);
    for (int j = 0; j < cols_; ++j) out(0, j) = (*this)(r, j);
    return out;
}

Mat Mat::col(int c) const {
    Mat out(rows_, 1);
    for (int i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, c);
    return out;
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
    Mat out(static_cast<int>(idx.size()), cols_);
    for (int i = 0; i < out.rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
    return out;
}

Mat Mat::select_cols(const std::vector<int>& idx) const {
    Mat out(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < out.cols_; ++j) out(i, j) = (*this)(i, idx[j]);
    return out;
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
    if (top.rows_ > 0 && bottom.rows_ > 0 && top.cols_ != bottom.cols_)
        throw DimensionMismatch("vstack column mismatch");
    int cols = top.rows_ > 0 ? top.cols_ : bottom.cols_;
    Mat out(top.rows_ + bottom.rows_, cols);
    for (int i = 0; i < top.rows_; ++i)
        for (int j = 0; j < cols; ++j) out(i, j) = top(i, j);
    for (int i = 0; i < bottom.rows_; ++i)
        for (int j = 0; j < cols; ++j) out(top.rows_ + i, j) = bottom(i, j);
    return out;
}

Mat Mat::hstack(const Mat& left, const Mat& right) {
    if (left.cols_ > 0 && right.cols_ > 0 && left.rows_ != right.rows_)
        throw DimensionMismatch("hstack row mismatch");
    int rows = left.cols_ > 0 ? left.rows_ : right.rows_;
    Mat out(rows, left.cols_ + right.cols_);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < left.cols_; ++j) out(i, j) = left(i, j);
        for (int j = 0; j < right.cols_; ++j) out(i, left.cols_ + j) = right(i, j);
    }
    return out;
}

void Mat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void Mat::scale_row(int i, const Rational& c) {
    if (c.is_zero()) throw InvariantViolation("scaling a row by zero");
    for (int k = 0; k < cols_; ++k) (*this)(i, k) *= c;
}

void Mat::add_row_multiple(int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    for (int k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void Mat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void Mat::scale_col(int i, const Rational& c) {
    if (c.is_zero()) throw InvariantViolation("scaling a column by zero");
    for (int r = 0; r < rows_; ++r) (*this)(r, i) *= c;
}

void Mat::add_col_multiple(int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    for (int r = 0; r < rows_; ++r) (*this)(r, i) += c * (*this)(r, j);
}

std::string Mat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << '[';
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j);
        }
        os << "]\n";
    }
    return os.str();
}

void apply_op(Mat& m, const ElemOp& op) {
    const bool on_rows = op.axis == OpAxis::rows;
    switch (op.kind) {
        case ElemOp::Kind::swap:
            on_rows ? m.swap_rows(op.i, op.j) : m.swap_cols(op.i, op.j);
            break;
        case ElemOp::Kind::scale:
            on_rows ? m.scale_row(op.i, op.factor) : m.scale_col(op.i, op.factor);
            break;
        case ElemOp::Kind::add_multiple:
            on_rows ? m.add_row_multiple(op.i, op.j, op.factor)
                    : m.add_col_multiple(op.i, op.j, op.factor);
            break;
    }
}

void replay(Mat& m, const ElemOpLog& log) {
    for (const auto& op : log) apply_op(m, op);
}

}  // namespace netdecomp
