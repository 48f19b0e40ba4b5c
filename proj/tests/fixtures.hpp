#pragma once

// Shared fixtures, random generators and brute-force reference computations
// for the unit and acceptance suites. Everything here is deliberately
// independent of the code paths under test.

#include <functional>
#include <vector>

#include "netdecomp/linalg.hpp"
#include "netdecomp/matrix.hpp"
#include "netdecomp/rng.hpp"
#include "netdecomp/structure.hpp"
#include "netdecomp/system.hpp"

namespace fixtures {

using netdecomp::Mat;
using netdecomp::NetworkSystem;
using netdecomp::Rational;
using netdecomp::Rng;

// Eight-node example network: one sensor on node 1, no drivers.
inline NetworkSystem star8_system() {
    Mat a = Mat::from_rows({{0, 0, 0, 0, 3, 0, 0, 7},
                            {0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 2, 0, 0, 0, 0, 0},
                            {0, 8, 0, 0, 0, 0, 0, 0},
                            {0, 0, 1, 1, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 5, 4, 1}});
    Mat c(1, 8);
    c(0, 0) = Rational(1);
    return NetworkSystem::from_parts(std::move(a), Mat(8, 0), std::move(c));
}

// Its exact stacked sensing matrix.
inline Mat star8_O() {
    return Mat::from_rows({{1, 0, 0, 0, 0, 0, 0, 0},
                           {0, 0, 0, 0, 3, 0, 0, 7},
                           {0, 0, 3, 3, 0, 35, 28, 7},
                           {0, 24, 6, 0, 0, 35, 28, 7},
                           {0, 0, 12, 0, 0, 35, 28, 7},
                           {0, 0, 24, 0, 0, 35, 28, 7},
                           {0, 0, 48, 0, 0, 35, 28, 7},
                           {0, 0, 96, 0, 0, 35, 28, 7}});
}

// Three-node chain: driver on node 1, edges 1->2 (weight 2) and 1->3 (weight 3).
inline NetworkSystem chain3_system() {
    Mat a = Mat::from_rows({{0, 0, 0}, {2, 0, 0}, {3, 0, 0}});
    Mat b(3, 1);
    b(0, 0) = Rational(1);
    Mat c(1, 3);
    c(0, 0) = Rational(1);
    return NetworkSystem::from_parts(std::move(a), std::move(b), std::move(c));
}

inline Rational random_rational(Rng& rng) {
    long long num = rng.range(1, 9);
    if (rng.chance(1, 2)) num = -num;
    return Rational(num, rng.range(1, 9));
}

inline Mat random_matrix(Rng& rng, int rows, int cols) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (rng.chance(1, 2)) m(i, j) = random_rational(rng);
    return m;
}

struct SystemShape {
    int min_n = 2, max_n = 8;
    int min_p = 1, max_p = 3;
    int min_m = 0, max_m = 0;
};

// Random system with edge density drawn from {1/5, 1/2, 4/5}.
inline NetworkSystem random_system(Rng& rng, const SystemShape& shape = {}) {
    const int n = static_cast<int>(rng.range(shape.min_n, shape.max_n));
    const int density_num[] = {1, 1, 4};
    const int density_den[] = {5, 2, 5};
    const int d = static_cast<int>(rng.below(3));

    Mat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rng.chance(density_num[d], density_den[d])) a(i, j) = random_rational(rng);

    const int p = static_cast<int>(rng.range(shape.min_p, std::min(shape.max_p, n)));
    std::vector<int> nodes(n);
    for (int i = 0; i < n; ++i) nodes[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(nodes[i], nodes[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    Mat c(p, n);
    for (int s = 0; s < p; ++s) c(s, nodes[s]) = Rational(1);

    const int m = static_cast<int>(rng.range(shape.min_m, shape.max_m));
    Mat b(n, m);
    for (int j = 0; j < m; ++j)
        b(static_cast<int>(rng.below(n)), j) = random_rational(rng);

    return NetworkSystem::from_parts(std::move(a), std::move(b), std::move(c));
}

// Independent membership check: in reduced echelon form the coefficients of
// any row-space member are its values at the pivot columns, so reconstruct
// and compare instead of ranking.
inline bool member_by_reconstruction(const Mat& m, const Mat& v) {
    netdecomp::RrefResult rr = netdecomp::rref(m);
    Mat combo(1, m.cols());
    for (const auto& piv : rr.pivots) {
        const Rational& coeff = v(0, piv.col);
        if (coeff.is_zero()) continue;
        for (int j = 0; j < m.cols(); ++j) combo(0, j) += coeff * rr.reduced(piv.row, j);
    }
    return combo == v;
}

// Exhaustive maximum set of free entries, no two sharing a row or column.
inline int matching_by_exhaustion(const netdecomp::StructurePattern& p) {
    std::function<int(int, std::uint32_t)> go = [&](int row, std::uint32_t used) -> int {
        if (row == p.rows) return 0;
        int best = go(row + 1, used);
        for (int c = 0; c < p.cols; ++c) {
            if (!p.is_free(row, c) || (used >> c) & 1) continue;
            best = std::max(best, 1 + go(row + 1, used | (1u << c)));
        }
        return best;
    };
    return go(0, 0);
}

inline netdecomp::StructurePattern random_pattern(Rng& rng, int max_dim = 6) {
    const int rows = static_cast<int>(rng.range(1, max_dim));
    const int cols = static_cast<int>(rng.range(1, max_dim));
    netdecomp::StructurePattern p(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) p.set_free(i, j, rng.chance(2, 5));
    return p;
}

// Fresh instantiation of a pattern with integer entries in [1, 10^6].
inline Mat instantiate_pattern(const netdecomp::StructurePattern& p, Rng& rng) {
    Mat m(p.rows, p.cols);
    for (int i = 0; i < p.rows; ++i)
        for (int j = 0; j < p.cols; ++j)
            if (p.is_free(i, j)) m(i, j) = Rational(rng.range(1, 1000000));
    return m;
}

}  // namespace fixtures
