#include "netdecomp/controllability.hpp"

#include <algorithm>
#include <numeric>

#include "netdecomp/errors.hpp"
#include "netdecomp/linalg.hpp"

namespace netdecomp {

Mat build_K(const NetworkSystem& sys) {
    const int n = sys.node_count();
    Mat k(n, 0);
    Mat block = sys.b();
    for (int p = 0; p < n; ++p) {
        k = Mat::hstack(k, block);
        if (p + 1 < n) block = sys.a() * block;
    }
    return k;
}

KReduction reduce_K(const Mat& k_mat) {
    const int n = k_mat.rows();

    // Column basis: the first rank(K) linearly independent columns of K.
    RowSpan span(n);
    std::vector<int> picked;
    for (int c = 0; c < k_mat.cols(); ++c)
        if (span.insert(k_mat.col(c).transpose())) picked.push_back(c);
    Mat g = k_mat.select_cols(picked);
    const int q = static_cast<int>(picked.size());

    // Core membership straight from the definition: e_i inside the span.
    NodeSet core;
    for (int i = 0; i < n; ++i) {
        Mat e(1, n);
        e(0, i) = Rational(1);
        if (span.contains(e)) core.push_back(i);
    }
    const int h = static_cast<int>(core.size());

    // For each core row (ascending) pick the leftmost unused column with a
    // nonzero entry there, move it into the leading block and clear that row
    // from every other column. Non-pivot columns end zero on all core rows.
    for (int i = 0; i < h; ++i) {
        const int node = core[i];
        int pivot = -1;
        for (int c = i; c < q; ++c)
            if (!g(node, c).is_zero()) {
                pivot = c;
                break;
            }
        if (pivot < 0)
            throw InvariantViolation("reduce_K: no pivot column for a core row");
        g.swap_cols(i, pivot);
        if (!g(node, i).is_one()) g.scale_col(i, inverse(g(node, i)));
        for (int c = 0; c < q; ++c)
            if (c != i && !g(node, c).is_zero()) g.add_col_multiple(c, i, -g(node, c));
    }
    // Each leading column is the core versor plus a combination of trailing
    // columns (all zero on core rows), so subtracting that combination is a
    // column operation; the result is the versor itself.
    for (int i = 0; i < h; ++i) {
        for (int r = 0; r < n; ++r) g(r, i) = Rational();
        g(core[i], i) = Rational(1);
    }

    KReduction out;
    out.q = q;
    out.h = h;
    out.core = std::move(core);
    out.basis = std::move(g);
    return out;
}

namespace {

std::vector<int> column_tail(int from, int to) {
    std::vector<int> idx;
    for (int c = from; c < to; ++c) idx.push_back(c);
    return idx;
}

}  // namespace

C2Enumeration enumerate_c2(const KReduction& kr, std::uint64_t limit) {
    const int n = kr.basis.rows();
    const int need = kr.q - kr.h;
    const NodeSet rest0 = set_complement(kr.core, n);
    const Mat r_block =
        kr.basis.select_rows(rest0).select_cols(column_tail(kr.h, kr.q));

    C2Enumeration out;
    if (need == 0) {
        out.sets.push_back({});
        return out;
    }

    std::vector<int> idx(need);
    std::iota(idx.begin(), idx.end(), 0);
    const int pool = static_cast<int>(rest0.size());
    while (true) {
        Mat sub = r_block.select_rows(idx);
        if (rank(sub) == need) {
            if (out.sets.size() == limit) {
                out.truncated = true;
                break;
            }
            NodeSet s;
            for (int i : idx) s.push_back(rest0[i]);
            out.sets.push_back(std::move(s));
        }
        // next lexicographic combination
        int pos = need - 1;
        while (pos >= 0 && idx[pos] == pool - need + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int p = pos + 1; p < need; ++p) idx[p] = idx[p - 1] + 1;
    }
    if (out.sets.empty() && !out.truncated)
        throw InvariantViolation("enumerate_c2: no invertible completion found");
    return out;
}

PerturbationMap perturbed_map(const KReduction& kr, const NodeSet& c2) {
    const int n = kr.basis.rows();
    if (static_cast<int>(c2.size()) != kr.q - kr.h)
        throw InvalidChoice("completion set must have rank(K) - h nodes");
    const NodeSet rest0 = set_complement(kr.core, n);
    for (int v : c2)
        if (v < 0 || v >= n || !set_contains(rest0, v))
            throw InvalidChoice("completion set contains a core node or an unknown node");
    const std::vector<int> tail = column_tail(kr.h, kr.q);

    Mat r22 = kr.basis.select_rows(c2).select_cols(tail);
    Mat r22_inv;
    try {
        r22_inv = invert(r22);
    } catch (const SingularMatrix&) {
        throw InvalidChoice("completion set rows form a singular block");
    }

    PerturbationMap out;
    out.rest_nodes = set_difference(rest0, c2);
    Mat r32 = kr.basis.select_rows(out.rest_nodes).select_cols(tail);
    out.w = r32 * r22_inv;
    for (int r = 0; r < out.w.rows(); ++r) {
        bool nonzero = false;
        for (int c = 0; c < out.w.cols(); ++c)
            if (!out.w(r, c).is_zero()) {
                nonzero = true;
                break;
            }
        if (nonzero) out.perturbed.push_back(out.rest_nodes[r]);
    }
    return out;
}

ControlTransform controllability_transform(const KReduction& kr, const NodeSet& c2) {
    const int n = kr.basis.rows();
    const int q = kr.q;
    const int h = kr.h;
    const std::vector<int> tail = column_tail(h, q);
    const NodeSet rest = set_difference(set_complement(kr.core, n), c2);

    Mat r22 = kr.basis.select_rows(c2).select_cols(tail);
    Mat r32 = kr.basis.select_rows(rest).select_cols(tail);
    Mat r22_inv;
    try {
        r22_inv = invert(r22);
    } catch (const SingularMatrix&) {
        throw InvalidChoice("completion set rows form a singular block");
    }

    NodeSet order = kr.core;
    order.insert(order.end(), c2.begin(), c2.end());
    order.insert(order.end(), rest.begin(), rest.end());

    // Blocks in (core | c2 | rest) row order; the trailing diagonal block is
    // the greedy versor completion, which is always the identity here.
    Mat t_perm(n, n), t_inv_perm(n, n);
    for (int i = 0; i < h; ++i) {
        t_perm(i, i) = Rational(1);
        t_inv_perm(i, i) = Rational(1);
    }
    const int mid = q - h;
    Mat star = Mat(static_cast<int>(rest.size()), mid);
    if (mid > 0 && !rest.empty()) star = r32 * r22_inv;
    for (int i = 0; i < mid; ++i)
        for (int j = 0; j < mid; ++j) {
            t_perm(h + i, h + j) = r22(i, j);
            t_inv_perm(h + i, h + j) = r22_inv(i, j);
        }
    for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
        for (int j = 0; j < mid; ++j) {
            t_perm(q + i, h + j) = r32(i, j);
            t_inv_perm(q + i, h + j) = -star(i, j);
        }
        t_perm(q + i, q + i) = Rational(1);
        t_inv_perm(q + i, q + i) = Rational(1);
    }

    ControlTransform out;
    out.t = Mat(n, n);
    out.t_inv = Mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.t(order[i], j) = t_perm(i, j);
            out.t_inv(i, order[j]) = t_inv_perm(i, j);
        }
    return out;
}

std::vector<NodeSet> controllable_oracle(const Mat& k_mat, std::uint64_t subset_budget) {
    const int n = k_mat.rows();
    const int q = rank(k_mat);

    // C(n, q) with overflow-safe saturation.
    unsigned __int128 count = 1;
    for (int i = 1; i <= q; ++i) {
        count = count * static_cast<unsigned>(n - q + i) / static_cast<unsigned>(i);
        if (count > subset_budget)
            throw BudgetExceeded("subset count exceeds the enumeration budget");
    }

    std::vector<NodeSet> out;
    if (q == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> idx(q);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (rank(k_mat.select_rows(idx)) == q) out.emplace_back(idx.begin(), idx.end());
        int pos = q - 1;
        while (pos >= 0 && idx[pos] == n - q + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int p = pos + 1; p < q; ++p) idx[p] = idx[p - 1] + 1;
    }
    return out;
}

NodeSet downstream_of_drivers(const NetworkSystem& sys) {
    const Graph& g = sys.graph(GraphView::forward);
    std::vector<char> seen(sys.node_count(), 0);
    std::vector<int> stack;
    for (int m = 0; m < sys.driver_count(); ++m) {
        int d = sys.driver_node(m);
        if (!seen[d]) {
            seen[d] = 1;
            stack.push_back(d);
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& e : g.out(v))
            if (!seen[e.to]) {
                seen[e.to] = 1;
                stack.push_back(e.to);
            }
    }
    NodeSet out;
    for (int i = 0; i < sys.node_count(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

ControllabilityResult analyze_controllability(const NetworkSystem& sys,
                                              std::uint64_t choice_limit) {
    ControllabilityResult res;
    res.K = build_K(sys);
    KReduction kr = reduce_K(res.K);
    res.q = kr.q;
    res.h = kr.h;
    res.c1 = kr.core;
    res.basis = kr.basis;

    C2Enumeration en = enumerate_c2(kr, choice_limit);
    res.truncated = en.truncated;
    for (auto& c2 : en.sets) {
        PerturbationMap pm = perturbed_map(kr, c2);
        ControlTransform tf = controllability_transform(kr, c2);
        ControllableChoice choice;
        choice.c = set_union(kr.core, c2);
        choice.c2 = std::move(c2);
        choice.rest_nodes = std::move(pm.rest_nodes);
        choice.perturbed = std::move(pm.perturbed);
        choice.w = std::move(pm.w);
        choice.t = std::move(tf.t);
        choice.t_inv = std::move(tf.t_inv);
        res.choices.push_back(std::move(choice));
    }
    res.fingerprint = sys.fingerprint();
    return res;
}

}  // namespace netdecomp
