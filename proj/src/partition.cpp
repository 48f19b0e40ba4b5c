#include "netdecomp/partition.hpp"

#include "netdecomp/errors.hpp"

namespace netdecomp {

NodePartition partition(const ObservabilityResult& obs, const ControllabilityResult& ctrl,
                        const ControllableChoice& choice) {
    if (obs.fingerprint != ctrl.fingerprint)
        throw MismatchedSystem("observability and controllability results come from "
                               "different systems");
    const int n = obs.O.cols();
    const NodeSet& observable = obs.observable_set;
    const NodeSet unobservable = set_complement(observable, n);
    const NodeSet rest = set_difference(set_complement(choice.c, n), choice.perturbed);

    NodePartition out;
    out.chosen_c2 = choice.c2;
    out.controllable_observable = set_intersect(choice.c, observable);
    out.perturbed_observable = set_intersect(choice.perturbed, observable);
    out.uncontrollable_observable = set_intersect(rest, observable);
    out.controllable_unobservable = set_intersect(choice.c, unobservable);
    out.perturbed_unobservable = set_intersect(choice.perturbed, unobservable);
    out.uncontrollable_unobservable = set_intersect(rest, unobservable);
    return out;
}

}  // namespace netdecomp
