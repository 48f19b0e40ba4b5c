#include <doctest.h>

#include "fixtures.hpp"
#include "netdecomp/errors.hpp"
#include "netdecomp/linalg.hpp"
#include "netdecomp/observability.hpp"
#include "netdecomp/structure.hpp"

using namespace netdecomp;

TEST_CASE("pattern extraction") {
    CHECK(pattern_of(Mat(3, 4)).free_count() == 0);
    CHECK(pattern_of(Mat::identity(5)) == power_pattern(pattern_of(Mat::identity(5)), 3));
    CHECK(pattern_of(fixtures::star8_system().a()).free_count() == 9);
}

TEST_CASE("generic rank of simple patterns") {
    CHECK(generic_rank(pattern_of(Mat::identity(4))) == 4);
    CHECK(generic_rank(pattern_of(Mat(4, 4))) == 0);
    StructurePattern column(3, 1);
    column.set_free(0, 0, true);
    column.set_free(2, 0, true);
    CHECK(generic_rank(column) == 1);
}

TEST_CASE("generic rank of the example pattern matches random instantiations") {
    StructurePattern p = pattern_of(fixtures::star8_system().a());
    const int g = generic_rank(p);
    CHECK(g == 5);
    fixtures::Rng rng(59);
    int agree = 0;
    for (int t = 0; t < 50; ++t)
        if (rank(fixtures::instantiate_pattern(p, rng)) == g) ++agree;
    CHECK(agree >= 49);
}

TEST_CASE("generic rank equals exhaustive search on small patterns") {
    fixtures::Rng rng(61);
    for (int t = 0; t < 200; ++t) {
        StructurePattern p = fixtures::random_pattern(rng, 6);
        CHECK(generic_rank(p) == fixtures::matching_by_exhaustion(p));
    }
}

TEST_CASE("a realized rank never exceeds the generic rank") {
    fixtures::Rng rng(67);
    for (int t = 0; t < 200; ++t) {
        Mat m = fixtures::random_matrix(rng, static_cast<int>(rng.range(1, 8)),
                                        static_cast<int>(rng.range(1, 8)));
        CHECK(generic_rank(pattern_of(m)) >= rank(m));
    }
}

TEST_CASE("power pattern of a single edge dies out") {
    StructurePattern p(2, 2);
    p.set_free(1, 0, true);  // edge from node 1 into node 2, no self-loops
    CHECK(power_pattern(p, 1) == p);
    CHECK(power_pattern(p, 2).free_count() == 0);
}

TEST_CASE("power pattern covers the exact power, and matches when no cancellation") {
    const Mat a = fixtures::star8_system().a();
    Mat a2 = a * a;
    // all weights are positive here, so no cancellation can occur
    CHECK(power_pattern(pattern_of(a), 2) == pattern_of(a2));

    fixtures::Rng rng(71);
    for (int t = 0; t < 40; ++t) {
        const int n = static_cast<int>(rng.range(2, 8));
        Mat m = fixtures::random_matrix(rng, n, n);
        StructurePattern base = pattern_of(m);
        Mat power = Mat::identity(n);
        for (int k = 1; k <= n - 1; ++k) {
            power = power * m;
            StructurePattern exact = pattern_of(power);
            StructurePattern walks = power_pattern(base, k);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (exact.is_free(i, j)) CHECK(walks.is_free(i, j));
        }
    }
}

TEST_CASE("probe agrees with the baseline on the example network") {
    GenericityReport rep = genericity_probe(fixtures::star8_system(), 200, 0);
    CHECK(rep.samples == 200);
    CHECK(rep.baseline_set == NodeSet{0, 1, 2, 3});
    CHECK(rep.agreement_fraction >= Rational(99, 100));
}

TEST_CASE("probe is trivially stable under full sensing") {
    fixtures::Rng rng73(73);
    Mat a = fixtures::random_matrix(rng73, 4, 4);
    NetworkSystem sys = NetworkSystem::from_parts(a, Mat(4, 0), Mat::identity(4));
    GenericityReport rep = genericity_probe(sys, 25, 9);
    CHECK(rep.agreement_fraction == Rational(1));
    CHECK(rep.baseline_set == NodeSet{0, 1, 2, 3});
    CHECK(rep.disagreeing_samples.empty());
}

TEST_CASE("probe with a single sample reports zero or one") {
    GenericityReport rep = genericity_probe(fixtures::star8_system(), 1, 5);
    CHECK(rep.samples == 1);
    CHECK((rep.agreement_fraction == Rational(0) || rep.agreement_fraction == Rational(1)));
}

TEST_CASE("perturbation probe tallies forced nodes") {
    PerturbationFrequency f = perturbation_probe(fixtures::chain3_system(), 30, 3);
    REQUIRE(f.counts.size() == 1);
    CHECK(f.counts[0].first == 2);   // v3 is forced under the first completion
    CHECK(f.counts[0].second == 30);
    PerturbationFrequency g = perturbation_probe(fixtures::chain3_system(), 30, 3);
    CHECK(f.counts == g.counts);
}

TEST_CASE("probe is deterministic per seed") {
    NetworkSystem sys = fixtures::star8_system();
    GenericityReport a = genericity_probe(sys, 40, 12345);
    GenericityReport b = genericity_probe(sys, 40, 12345);
    CHECK(a.agreement_fraction == b.agreement_fraction);
    CHECK(a.baseline_set == b.baseline_set);
    REQUIRE(a.disagreeing_samples.size() == b.disagreeing_samples.size());
    for (size_t i = 0; i < a.disagreeing_samples.size(); ++i) {
        CHECK(a.disagreeing_samples[i].first == b.disagreeing_samples[i].first);
        CHECK(a.disagreeing_samples[i].second == b.disagreeing_samples[i].second);
    }
    GenericityReport c = genericity_probe(sys, 40, 54321);
    CHECK(c.samples == a.samples);  // different seed still runs the full set
}
