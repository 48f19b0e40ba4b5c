#include <doctest.h>

#include "fixtures.hpp"
#include "netdecomp/errors.hpp"
#include "netdecomp/partition.hpp"

using namespace netdecomp;

namespace {

NodeSet all_cells_union(const NodePartition& p) {
    NodeSet u = set_union(p.controllable_observable, p.perturbed_observable);
    u = set_union(u, p.uncontrollable_observable);
    u = set_union(u, p.controllable_unobservable);
    u = set_union(u, p.perturbed_unobservable);
    return set_union(u, p.uncontrollable_unobservable);
}

size_t cell_count_sum(const NodePartition& p) {
    return p.controllable_observable.size() + p.perturbed_observable.size() +
           p.uncontrollable_observable.size() + p.controllable_unobservable.size() +
           p.perturbed_unobservable.size() + p.uncontrollable_unobservable.size();
}

}  // namespace

TEST_CASE("partition of the chain fixture") {
    NetworkSystem sys = fixtures::chain3_system();
    ObservabilityResult obs = analyze_observability(sys);
    ControllabilityResult ctrl = analyze_controllability(sys);
    REQUIRE(ctrl.choices.size() == 2);

    // choice {v2}: v1 controllable+observable, v2 controllable, v3 perturbed
    NodePartition p = partition(obs, ctrl, ctrl.choices[0]);
    CHECK(p.chosen_c2 == NodeSet{1});
    CHECK(p.controllable_observable == NodeSet{0});
    CHECK(p.controllable_unobservable == NodeSet{1});
    CHECK(p.perturbed_unobservable == NodeSet{2});
    CHECK(p.perturbed_observable.empty());
    CHECK(p.uncontrollable_observable.empty());
    CHECK(p.uncontrollable_unobservable.empty());
}

TEST_CASE("fully controllable and observable network sits in one cell") {
    fixtures::Rng rng(181);
    const int n = 4;
    Mat b(n, n);
    for (int i = 0; i < n; ++i) b(i, i) = Rational(1);
    NetworkSystem sys = NetworkSystem::from_parts(fixtures::random_matrix(rng, n, n), b,
                                                  Mat::identity(n));
    ObservabilityResult obs = analyze_observability(sys);
    ControllabilityResult ctrl = analyze_controllability(sys);
    REQUIRE(ctrl.choices.size() == 1);
    NodePartition p = partition(obs, ctrl, ctrl.choices[0]);
    CHECK(p.controllable_observable == NodeSet{0, 1, 2, 3});
    CHECK(cell_count_sum(p) == 4);
}

TEST_CASE("no drivers reduces the partition to the observability split") {
    NetworkSystem sys = fixtures::star8_system();
    ObservabilityResult obs = analyze_observability(sys);
    ControllabilityResult ctrl = analyze_controllability(sys);
    REQUIRE(ctrl.choices.size() == 1);
    NodePartition p = partition(obs, ctrl, ctrl.choices[0]);
    CHECK(p.uncontrollable_observable == NodeSet{0, 1, 2, 3});
    CHECK(p.uncontrollable_unobservable == NodeSet{4, 5, 6, 7});
    CHECK(p.controllable_observable.empty());
    CHECK(p.perturbed_observable.empty());
}

TEST_CASE("cells are disjoint and cover every node") {
    fixtures::Rng rng(191);
    for (int t = 0; t < 100; ++t) {
        fixtures::SystemShape shape;
        shape.min_m = 0;
        shape.max_m = 2;
        NetworkSystem sys = fixtures::random_system(rng, shape);
        ObservabilityResult obs = analyze_observability(sys);
        ControllabilityResult ctrl = analyze_controllability(sys, 8);
        for (const auto& choice : ctrl.choices) {
            NodePartition p = partition(obs, ctrl, choice);
            CHECK(all_cells_union(p) == set_complement({}, sys.node_count()));
            CHECK(cell_count_sum(p) == static_cast<size_t>(sys.node_count()));
        }
    }
}

TEST_CASE("partition refuses results from different systems") {
    NetworkSystem chain = fixtures::chain3_system();
    NetworkSystem other = fixtures::star8_system();
    ObservabilityResult obs = analyze_observability(other);
    ControllabilityResult ctrl = analyze_controllability(chain);
    CHECK_THROWS_AS(partition(obs, ctrl, ctrl.choices[0]), MismatchedSystem);
}
