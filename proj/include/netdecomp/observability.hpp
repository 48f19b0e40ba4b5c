#pragma once

#include <cstdint>
#include <vector>

#include "netdecomp/linalg.hpp"
#include "netdecomp/matrix.hpp"
#include "netdecomp/nodeset.hpp"
#include "netdecomp/system.hpp"

namespace netdecomp {

// One pass of the iterative block reduction over the working matrix.
struct IterationRecord {
    int k = 0;
    int q_k = 0;                           // active block size entering the pass
    int f_k = 0;                           // rank of the trailing block
    ElemOpLog row_ops;
    std::vector<int> column_permutation;   // new position -> previous position
};

struct ObservableReduction {
    NodeSet observable_set;                // sorted original node indices
    std::vector<IterationRecord> trace;
    Mat reduced;                           // q x N, in final working column order
    std::vector<int> column_order;         // working position -> original column
};

// Stacked sensing matrix [C; CA; ...; CA^{N-1}], exact.
Mat build_O(const NetworkSystem& sys);

struct QExtraction {
    Mat Q;                        // first q linearly independent rows of O
    std::vector<int> h_columns;   // leftmost q column indices forming a full-rank block
    std::vector<int> row_indices; // which rows of O were kept
};
QExtraction extract_Q(const Mat& o);

// Peels rank off the trailing block until it vanishes. The surviving leading
// block's columns are the observable nodes; the trace records each pass.
// h_columns must index an invertible q x q block of Q.
ObservableReduction reduce_to_observable(const Mat& q_mat, const std::vector<int>& h_columns);

// Definition-level computation: nodes whose versor lies in rowspace(O).
NodeSet observable_oracle(const NetworkSystem& sys);

// Invertible N x N transform: the first |observable| rows are the versors of
// the observable nodes, the first q rows span rowspace(O), the remainder is
// the greedy versor completion.
Mat observability_transform(const ObservableReduction& red);

struct ObservabilityResult {
    Mat O;
    int q = 0;
    Mat Q;
    std::vector<int> h_columns;
    NodeSet observable_set;
    std::vector<IterationRecord> trace;
    Mat reduced;                        // final working matrix, q x N
    std::vector<int> column_order;
    Mat T;
    std::uint64_t fingerprint = 0;
};

ObservabilityResult analyze_observability(const NetworkSystem& sys);

}  // namespace netdecomp
