#include "netdecomp/structure.hpp"

#include "netdecomp/errors.hpp"
#include "netdecomp/controllability.hpp"
#include "netdecomp/observability.hpp"
#include "netdecomp/rng.hpp"

namespace netdecomp {

int StructurePattern::free_count() const {
    int n = 0;
    for (auto v : free) n += v != 0;
    return n;
}

StructurePattern pattern_of(const Mat& m) {
    StructurePattern p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) p.set_free(i, j, !m(i, j).is_zero());
    return p;
}

namespace {

// Kuhn's augmenting-path matching; rows on the left, columns on the right.
bool augment(const StructurePattern& p, int row, std::vector<char>& visited,
             std::vector<int>& col_match) {
    for (int c = 0; c < p.cols; ++c) {
        if (!p.is_free(row, c) || visited[c]) continue;
        visited[c] = 1;
        if (col_match[c] < 0 || augment(p, col_match[c], visited, col_match)) {
            col_match[c] = row;
            return true;
        }
    }
    return false;
}

}  // namespace

int generic_rank(const StructurePattern& p) {
    std::vector<int> col_match(p.cols, -1);
    int size = 0;
    for (int r = 0; r < p.rows; ++r) {
        std::vector<char> visited(p.cols, 0);
        if (augment(p, r, visited, col_match)) ++size;
    }
    return size;
}

StructurePattern power_pattern(const StructurePattern& p, int k) {
    if (p.rows != p.cols) throw DimensionMismatch("power_pattern expects a square pattern");
    if (k < 1) throw DimensionMismatch("power_pattern expects k >= 1");
    const int n = p.rows;
    StructurePattern result = p;
    for (int step = 1; step < k; ++step) {
        StructurePattern next(n, n);
        for (int i = 0; i < n; ++i)
            for (int m = 0; m < n; ++m) {
                if (!result.is_free(i, m)) continue;
                for (int j = 0; j < n; ++j)
                    if (p.is_free(m, j)) next.set_free(i, j, true);
            }
        result = std::move(next);
    }
    return result;
}

namespace {

// Fresh magnitude in [1, 10^6], original sign kept.
Rational resample_entry(const Rational& original, Rng& rng) {
    long long magnitude = rng.range(1, 1000000);
    return original.sign() < 0 ? Rational(-magnitude) : Rational(magnitude);
}

NetworkSystem resample_system(const NetworkSystem& sys, std::uint64_t seed, int sample) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(sample));
    const int n = sys.node_count();
    Mat a = sys.a();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!a(i, j).is_zero()) a(i, j) = resample_entry(a(i, j), rng);
    Mat b = sys.b();
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            if (!b(i, j).is_zero()) b(i, j) = resample_entry(b(i, j), rng);
    return NetworkSystem::from_parts(std::move(a), std::move(b), sys.c(), sys.labels());
}

}  // namespace

GenericityReport genericity_probe(const NetworkSystem& sys, int samples, std::uint64_t seed) {
    if (samples < 1) throw DimensionMismatch("genericity_probe expects samples >= 1");
    GenericityReport report;
    report.samples = samples;
    report.seed = seed;
    report.baseline_set = analyze_observability(sys).observable_set;

    int matches = 0;
    for (int s = 0; s < samples; ++s) {
        NodeSet observable =
            analyze_observability(resample_system(sys, seed, s)).observable_set;
        if (observable == report.baseline_set)
            ++matches;
        else
            report.disagreeing_samples.emplace_back(s, std::move(observable));
    }
    report.agreement_fraction = Rational(matches, samples);
    return report;
}

PerturbationFrequency perturbation_probe(const NetworkSystem& sys, int samples,
                                         std::uint64_t seed) {
    if (samples < 1) throw DimensionMismatch("perturbation_probe expects samples >= 1");
    PerturbationFrequency out;
    out.samples = samples;
    out.seed = seed;
    std::vector<int> counts(sys.node_count(), 0);
    for (int s = 0; s < samples; ++s) {
        ControllabilityResult res =
            analyze_controllability(resample_system(sys, seed, s), 1);
        for (int node : res.choices.front().perturbed) ++counts[node];
    }
    for (int i = 0; i < sys.node_count(); ++i)
        if (counts[i] > 0) out.counts.emplace_back(i, counts[i]);
    return out;
}

}  // namespace netdecomp
