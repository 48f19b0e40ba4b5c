#pragma once

#include <cstdint>
#include <vector>

#include "netdecomp/matrix.hpp"
#include "netdecomp/nodeset.hpp"
#include "netdecomp/system.hpp"

namespace netdecomp {

// Horizontal stack [B, AB, A^2 B, ..., A^{N-1} B], exact.
Mat build_K(const NetworkSystem& sys);

struct KReduction {
    Mat basis;      // N x q column basis of range(K): identity block on the
                    // core rows, a full-column-rank block R on the others
    int q = 0;      // rank(K)
    int h = 0;      // |core|
    NodeSet core;   // nodes whose versor lies in range(K); unique
};

KReduction reduce_K(const Mat& k_mat);

struct C2Enumeration {
    std::vector<NodeSet> sets;  // lexicographic by node index
    bool truncated = false;     // true when the limit cut the enumeration short
};

// All completion sets S outside the core with |S| = q - h whose rows of R
// form an invertible block. At least one always exists.
C2Enumeration enumerate_c2(const KReduction& kr, std::uint64_t limit);

struct PerturbationMap {
    NodeSet rest_nodes;  // complement of core ∪ c2, sorted; rows of w
    NodeSet perturbed;   // rest nodes with a nonzero row of w
    Mat w;               // (N-q) x (q-h) forced-value map
};

// Forced values of the unreached nodes: for any target on core ∪ c2 the
// unique reachable completion satisfies x_rest = w * x_c2 (independent of the
// core part). Throws InvalidChoice when the c2 block is singular.
PerturbationMap perturbed_map(const KReduction& kr, const NodeSet& c2);

struct ControlTransform {
    Mat t;      // rows in original node order
    Mat t_inv;  // exact inverse; columns in original node order
};

ControlTransform controllability_transform(const KReduction& kr, const NodeSet& c2);

// Exhaustive check straight from the definition: every node set of size
// rank(K) whose rows of K have full rank. Throws BudgetExceeded when the
// subset count passes the budget.
std::vector<NodeSet> controllable_oracle(const Mat& k_mat, std::uint64_t subset_budget);

// Nodes reachable in the forward graph from any driver node (drivers included).
NodeSet downstream_of_drivers(const NetworkSystem& sys);

struct ControllableChoice {
    NodeSet c2;
    NodeSet c;  // core ∪ c2
    NodeSet rest_nodes;
    NodeSet perturbed;
    Mat w;
    Mat t;
    Mat t_inv;
};

struct ControllabilityResult {
    Mat K;
    int q = 0;
    int h = 0;
    NodeSet c1;
    Mat basis;
    std::vector<ControllableChoice> choices;
    bool truncated = false;
    std::uint64_t fingerprint = 0;
};

ControllabilityResult analyze_controllability(const NetworkSystem& sys,
                                              std::uint64_t choice_limit = 64);

}  // namespace netdecomp
