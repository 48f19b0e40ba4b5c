#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "netdecomp/rational.hpp"

namespace netdecomp {

// Dense row-major matrix of exact rationals. Empty shapes (0 rows and/or
// 0 columns) are legal and have rank 0.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols);

    static Mat identity(int n);
    static Mat from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static Mat from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    Mat transpose() const;
    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    bool operator==(const Mat& rhs) const;
    bool is_zero() const;
    bool is_identity() const;

    Mat row(int r) const;
    Mat col(int c) const;
    // Submatrix by explicit index lists; indices may repeat or reorder.
    Mat select_rows(const std::vector<int>& idx) const;
    Mat select_cols(const std::vector<int>& idx) const;

    static Mat vstack(const Mat& top, const Mat& bottom);
    static Mat hstack(const Mat& left, const Mat& right);

    void swap_rows(int i, int j);
    void scale_row(int i, const Rational& c);                     // c != 0
    void add_row_multiple(int i, int j, const Rational& c);       // row i += c * row j
    void swap_cols(int i, int j);
    void scale_col(int i, const Rational& c);
    void add_col_multiple(int i, int j, const Rational& c);       // col i += c * col j

    std::string str() const;  // one bracketed row per line, for diagnostics

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

enum class OpAxis { rows, columns };

// One elementary transformation, tagged with the axis it acts on.
struct ElemOp {
    enum class Kind { swap, scale, add_multiple };
    Kind kind;
    OpAxis axis;
    int i = 0;             // target line
    int j = 0;             // other line (swap, add_multiple)
    Rational factor;       // scale: i *= factor; add_multiple: i += factor * j
};

// Replaying the log on the original matrix reproduces the transformed one.
using ElemOpLog = std::vector<ElemOp>;

void apply_op(Mat& m, const ElemOp& op);
void replay(Mat& m, const ElemOpLog& log);

}  // namespace netdecomp
