#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "netdecomp/matrix.hpp"
#include "netdecomp/nodeset.hpp"
#include "netdecomp/system.hpp"

namespace netdecomp {

// Free/fixed mask of a structured matrix (true = free entry, false = fixed zero).
struct StructurePattern {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> free;

    StructurePattern() = default;
    StructurePattern(int r, int c)
        : rows(r), cols(c), free(static_cast<size_t>(r) * c, 0) {}

    bool is_free(int r, int c) const { return free[static_cast<size_t>(r) * cols + c] != 0; }
    void set_free(int r, int c, bool v) {
        free[static_cast<size_t>(r) * cols + c] = v ? 1 : 0;
    }
    int free_count() const;
    bool operator==(const StructurePattern&) const = default;
};

StructurePattern pattern_of(const Mat& m);

// Generic rank of the pattern: the size of a maximum bipartite matching with
// one edge per free entry (no two selected entries share a row or column).
int generic_rank(const StructurePattern& p);

// Pattern of the k-th power: entry (i, j) is free iff a walk of length
// exactly k exists from j to i, ignoring numeric cancellation.
StructurePattern power_pattern(const StructurePattern& p, int k);

struct GenericityReport {
    int samples = 0;
    std::uint64_t seed = 0;
    Rational agreement_fraction;                  // matches / samples, canonical
    NodeSet baseline_set;                         // observable nodes of the input
    std::vector<std::pair<int, NodeSet>> disagreeing_samples;
};

// Redraws every free entry of A (and every driver gain) with a fresh integer
// magnitude in [1, 10^6], keeping signs, then recomputes the observable set
// per sample and compares against the baseline. Deterministic given the seed.
GenericityReport genericity_probe(const NetworkSystem& sys, int samples, std::uint64_t seed);

struct PerturbationFrequency {
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<std::pair<int, int>> counts;  // node -> samples in which it was perturbed
};

// Same sample stream as genericity_probe; per sample, takes the first valid
// completion set and tallies which unreached nodes get dragged to a forced
// nonzero value.
PerturbationFrequency perturbation_probe(const NetworkSystem& sys, int samples,
                                         std::uint64_t seed);

}  // namespace netdecomp
