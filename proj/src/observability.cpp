#include "netdecomp/observability.hpp"

#include <algorithm>
#include <numeric>

#include "netdecomp/errors.hpp"

namespace netdecomp {

Mat build_O(const NetworkSystem& sys) {
    const int n = sys.node_count();
    Mat o(0, n);
    Mat block = sys.c();
    for (int k = 0; k < n; ++k) {
        o = Mat::vstack(o, block);
        if (k + 1 < n) block = block * sys.a();
    }
    return o;
}

QExtraction extract_Q(const Mat& o) {
    QExtraction out;
    RowSpan row_span(o.cols());
    out.Q = Mat(0, o.cols());
    for (int r = 0; r < o.rows(); ++r) {
        Mat row = o.row(r);
        if (row_span.insert(row)) {
            out.Q = Mat::vstack(out.Q, row);
            out.row_indices.push_back(r);
        }
    }
    const int q = out.Q.rows();
    RowSpan col_span(q);
    for (int c = 0; c < o.cols() && static_cast<int>(out.h_columns.size()) < q; ++c) {
        if (col_span.insert(out.Q.col(c).transpose())) out.h_columns.push_back(c);
    }
    if (static_cast<int>(out.h_columns.size()) != q)
        throw InvariantViolation("extract_Q: column scan found fewer than q independent columns");
    return out;
}

namespace {

// Applies a row permutation of the top `count` rows as logged swaps.
void permute_rows(Mat& w, const std::vector<int>& target, int count, ElemOpLog& ops) {
    std::vector<int> cur(count);
    std::iota(cur.begin(), cur.end(), 0);
    for (int pos = 0; pos < count; ++pos) {
        int at = -1;
        for (int p = pos; p < count; ++p)
            if (cur[p] == target[pos]) {
                at = p;
                break;
            }
        if (at == pos) continue;
        ElemOp op{ElemOp::Kind::swap, OpAxis::rows, pos, at, Rational()};
        apply_op(w, op);
        ops.push_back(op);
        std::swap(cur[pos], cur[at]);
    }
}

bool trailing_block_is_zero(const Mat& w, int qk) {
    for (int r = 0; r < qk; ++r)
        for (int c = qk; c < w.cols(); ++c)
            if (!w(r, c).is_zero()) return false;
    return true;
}

}  // namespace

ObservableReduction reduce_to_observable(const Mat& q_mat, const std::vector<int>& h_columns) {
    const int q = q_mat.rows();
    const int n = q_mat.cols();
    if (static_cast<int>(h_columns.size()) != q)
        throw InvariantViolation("reduce_to_observable: need exactly q leading columns");

    // Working order: the chosen leading columns, then the rest ascending.
    std::vector<char> used(n, 0);
    std::vector<int> order = h_columns;
    for (int c : h_columns) {
        if (c < 0 || c >= n || used[c])
            throw InvariantViolation("reduce_to_observable: bad leading column set");
        used[c] = 1;
    }
    for (int c = 0; c < n; ++c)
        if (!used[c]) order.push_back(c);

    Mat w = q_mat.select_cols(order);
    std::vector<int> head(q);
    std::iota(head.begin(), head.end(), 0);
    if (rank(w.select_cols(head)) != q)
        throw InvariantViolation("reduce_to_observable: leading block is singular");

    ObservableReduction red;
    int qk = q;
    for (int k = 1; !trailing_block_is_zero(w, qk); ++k) {
        IterationRecord rec;
        rec.k = k;
        rec.q_k = qk;

        // Row reduction: sweep the trailing columns left to right, pivoting on
        // the bottom-most eligible row, and clear each pivot column from every
        // other active row. Non-pivot rows end with a zero trailing block.
        std::vector<char> is_pivot(qk, 0);
        std::vector<int> pivot_rows;  // in pivot-column order
        for (int col = qk; col < n; ++col) {
            int pivot = -1;
            for (int r = qk - 1; r >= 0; --r)
                if (!is_pivot[r] && !w(r, col).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            is_pivot[pivot] = 1;
            pivot_rows.push_back(pivot);
            for (int r = 0; r < qk; ++r) {
                if (r == pivot || w(r, col).is_zero()) continue;
                ElemOp op{ElemOp::Kind::add_multiple, OpAxis::rows, r, pivot,
                          -w(r, col) / w(pivot, col)};
                apply_op(w, op);
                rec.row_ops.push_back(op);
            }
        }
        rec.f_k = static_cast<int>(pivot_rows.size());
        const int q_next = qk - rec.f_k;

        // Independent pivot rows sink to the bottom of the active block.
        std::vector<int> target;
        for (int r = 0; r < qk; ++r)
            if (!is_pivot[r]) target.push_back(r);
        target.insert(target.end(), pivot_rows.begin(), pivot_rows.end());
        permute_rows(w, target, qk, rec.row_ops);

        // Greedy leading-column selection over the surviving rows; rejected
        // columns move right and become the next trailing block.
        RowSpan span(q_next);
        std::vector<int> selected, rejected;
        for (int col = 0; col < qk; ++col) {
            Mat col_vec(1, q_next);
            for (int r = 0; r < q_next; ++r) col_vec(0, r) = w(r, col);
            if (static_cast<int>(selected.size()) < q_next && span.insert(col_vec))
                selected.push_back(col);
            else
                rejected.push_back(col);
        }
        if (static_cast<int>(selected.size()) != q_next)
            throw InvariantViolation(
                "reduce_to_observable: leading block lost rank during reduction");

        std::vector<int> colperm = selected;
        colperm.insert(colperm.end(), rejected.begin(), rejected.end());
        for (int c = qk; c < n; ++c) colperm.push_back(c);
        w = w.select_cols(colperm);
        std::vector<int> new_order(n);
        for (int j = 0; j < n; ++j) new_order[j] = order[colperm[j]];
        order = std::move(new_order);
        rec.column_permutation = std::move(colperm);

        red.trace.push_back(std::move(rec));
        qk = q_next;
    }

    red.observable_set.assign(order.begin(), order.begin() + qk);
    std::sort(red.observable_set.begin(), red.observable_set.end());
    red.reduced = std::move(w);
    red.column_order = std::move(order);
    return red;
}

NodeSet observable_oracle(const NetworkSystem& sys) {
    const Mat o = build_O(sys);
    NodeSet out;
    for (int i = 0; i < sys.node_count(); ++i) {
        Mat e(1, sys.node_count());
        e(0, i) = Rational(1);
        if (row_space_contains(o, e)) out.push_back(i);
    }
    return out;
}

Mat observability_transform(const ObservableReduction& red) {
    const int q = red.reduced.rows();
    const int n = red.reduced.cols();
    const int m = static_cast<int>(red.observable_set.size());

    // Back to original column order.
    std::vector<int> inverse_order(n);
    for (int j = 0; j < n; ++j) inverse_order[red.column_order[j]] = j;
    Mat full(q, n);
    for (int r = 0; r < q; ++r)
        for (int j = 0; j < n; ++j) full(r, j) = red.reduced(r, inverse_order[j]);

    Mat upper(0, n);
    if (m > 0) {
        std::vector<int> top_rows(m);
        std::iota(top_rows.begin(), top_rows.end(), 0);
        Mat block = full.select_rows(top_rows).select_cols(red.observable_set);
        upper = invert(block) * full.select_rows(top_rows);
    }
    // Remaining rows: clearing the observable columns is a row operation
    // against the versor rows above, so the q-row span is unchanged.
    for (int r = m; r < q; ++r) {
        Mat row = full.row(r);
        for (int node : red.observable_set) row(0, node) = Rational();
        upper = Mat::vstack(upper, row);
    }
    return Mat::vstack(upper, complete_to_full_rank(upper, OpAxis::rows));
}

ObservabilityResult analyze_observability(const NetworkSystem& sys) {
    ObservabilityResult res;
    res.O = build_O(sys);
    QExtraction qe = extract_Q(res.O);
    res.q = qe.Q.rows();
    res.Q = std::move(qe.Q);
    res.h_columns = std::move(qe.h_columns);
    ObservableReduction red = reduce_to_observable(res.Q, res.h_columns);
    res.T = observability_transform(red);
    res.observable_set = std::move(red.observable_set);
    res.trace = std::move(red.trace);
    res.reduced = std::move(red.reduced);
    res.column_order = std::move(red.column_order);
    res.fingerprint = sys.fingerprint();
    return res;
}

}  // namespace netdecomp
