#pragma once

#include "netdecomp/controllability.hpp"
#include "netdecomp/nodeset.hpp"
#include "netdecomp/observability.hpp"

namespace netdecomp {

// Six-cell decomposition of the nodes for one controllable-set choice:
// (controllable | perturbed | neither) x (observable | not). Cells are
// pairwise disjoint and cover all nodes.
struct NodePartition {
    NodeSet chosen_c2;
    NodeSet controllable_observable;
    NodeSet perturbed_observable;
    NodeSet uncontrollable_observable;
    NodeSet controllable_unobservable;
    NodeSet perturbed_unobservable;
    NodeSet uncontrollable_unobservable;
};

// Throws MismatchedSystem when the two results carry different fingerprints.
NodePartition partition(const ObservabilityResult& obs, const ControllabilityResult& ctrl,
                        const ControllableChoice& choice);

}  // namespace netdecomp
