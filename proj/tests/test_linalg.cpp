#include <doctest.h>

#include "fixtures.hpp"
#include "netdecomp/errors.hpp"
#include "netdecomp/linalg.hpp"

using namespace netdecomp;

TEST_CASE("rref of the identity needs no operations") {
    RrefResult r = rref(Mat::identity(3));
    CHECK(r.reduced == Mat::identity(3));
    CHECK(r.log.empty());
    REQUIRE(r.pivots.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(r.pivots[i].row == i);
        CHECK(r.pivots[i].col == i);
    }
}

TEST_CASE("rref collapses proportional rows") {
    RrefResult r = rref(Mat::from_rows({{2, 4}, {1, 2}}));
    CHECK(r.reduced == Mat::from_rows({{1, 2}, {0, 0}}));
    REQUIRE(r.pivots.size() == 1);
    CHECK(r.pivots[0].row == 0);
    CHECK(r.pivots[0].col == 0);
}

TEST_CASE("rref of the example sensing matrix has six pivots") {
    CHECK(rref(fixtures::star8_O()).pivots.size() == 6);
}

TEST_CASE("rank basics") {
    CHECK(rank(Mat(4, 4)) == 0);
    CHECK(rank(fixtures::star8_O()) == 6);
    CHECK(rank(Mat(0, 5)) == 0);
    CHECK(rank(Mat(5, 0)) == 0);
}

TEST_CASE("rref is idempotent on both axes") {
    fixtures::Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        Mat m = fixtures::random_matrix(rng, static_cast<int>(rng.range(1, 8)),
                                        static_cast<int>(rng.range(1, 8)));
        for (OpAxis axis : {OpAxis::rows, OpAxis::columns}) {
            Mat once = rref(m, axis).reduced;
            CHECK(rref(once, axis).reduced == once);
        }
    }
}

TEST_CASE("replaying the log reproduces the reduced matrix") {
    fixtures::Rng rng(29);
    for (int t = 0; t < 50; ++t) {
        Mat m = fixtures::random_matrix(rng, static_cast<int>(rng.range(1, 9)),
                                        static_cast<int>(rng.range(1, 9)));
        for (OpAxis axis : {OpAxis::rows, OpAxis::columns}) {
            RrefResult r = rref(m, axis);
            Mat copy = m;
            replay(copy, r.log);
            CHECK(copy == r.reduced);
        }
    }
}

TEST_CASE("rank equals the rank of the transpose") {
    fixtures::Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        Mat m = fixtures::random_matrix(rng, static_cast<int>(rng.range(1, 10)),
                                        static_cast<int>(rng.range(1, 10)));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("row space membership") {
    Mat o = fixtures::star8_O();
    Mat e1(1, 8), e5(1, 8);
    e1(0, 0) = Rational(1);
    e5(0, 4) = Rational(1);
    CHECK(row_space_contains(o, e1));
    CHECK(!row_space_contains(o, e5));
    Mat any(1, 4);
    any(0, 2) = Rational(5, 3);
    CHECK(row_space_contains(Mat::identity(4), any));
    CHECK_THROWS_AS(row_space_contains(o, Mat(1, 3)), DimensionMismatch);
}

TEST_CASE("membership agrees with reconstruction from pivot rows") {
    fixtures::Rng rng(37);
    for (int t = 0; t < 150; ++t) {
        Mat m = fixtures::random_matrix(rng, static_cast<int>(rng.range(1, 7)),
                                        static_cast<int>(rng.range(1, 7)));
        Mat v(1, m.cols());
        if (rng.chance(1, 2)) {
            // random combination of rows: guaranteed member
            for (int r = 0; r < m.rows(); ++r) {
                Rational c = fixtures::random_rational(rng);
                for (int j = 0; j < m.cols(); ++j) v(0, j) += c * m(r, j);
            }
        } else {
            v = fixtures::random_matrix(rng, 1, m.cols());
        }
        CHECK(row_space_contains(m, v) == fixtures::member_by_reconstruction(m, v));
    }
}

TEST_CASE("null space basics") {
    CHECK(null_space(Mat::identity(4)).cols() == 0);

    Mat line = Mat::from_rows({{1, 1}});
    Mat basis = null_space(line);
    REQUIRE(basis.cols() == 1);
    CHECK((line * basis).is_zero());
    CHECK(basis(0, 0) == -basis(1, 0));

    Mat o = fixtures::star8_O();
    Mat ob = null_space(o);
    REQUIRE(ob.cols() == 2);
    CHECK((o * ob).is_zero());
    for (int c = 0; c < 2; ++c)
        for (int r = 0; r < 4; ++r) CHECK(ob(r, c).is_zero());
    CHECK(rank(ob) == 2);
}

TEST_CASE("inverse basics") {
    CHECK(invert(Mat::identity(3)) == Mat::identity(3));
    Mat diag_inv(2, 2);
    diag_inv(0, 0) = Rational(1, 2);
    diag_inv(1, 1) = Rational(1, 4);
    CHECK(invert(Mat::from_rows({{2, 0}, {0, 4}})) == diag_inv);
    Mat upper = Mat::from_rows({{1, 1}, {0, 1}});
    CHECK(invert(upper) == Mat::from_rows({{1, -1}, {0, 1}}));
    CHECK_THROWS_AS(invert(Mat::from_rows({{1, 2}, {2, 4}})), SingularMatrix);
    CHECK_THROWS_AS(invert(Mat(2, 3)), DimensionMismatch);
}

TEST_CASE("random invertible matrices invert exactly on both sides") {
    fixtures::Rng rng(41);
    int done = 0;
    while (done < 40) {
        int n = static_cast<int>(rng.range(1, 10));
        Mat m = fixtures::random_matrix(rng, n, n);
        if (rank(m) != n) continue;
        Mat inv = invert(m);
        CHECK((m * inv).is_identity());
        CHECK((inv * m).is_identity());
        ++done;
    }
}

TEST_CASE("greedy completion appends the expected versors") {
    Mat single = Mat::from_rows({{1, 0, 0}});
    Mat app = complete_to_full_rank(single, OpAxis::rows);
    REQUIRE(app.rows() == 2);
    CHECK(app.row(0) == Mat::from_rows({{0, 1, 0}}));
    CHECK(app.row(1) == Mat::from_rows({{0, 0, 1}}));

    // Reduced 6x8 block with identity on the first four coordinates.
    Mat qbar = Mat::from_rows({{1, 0, 0, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 3, 7, 0, 0},
                               {0, 0, 0, 0, 0, 7, 28, 35}});
    Mat appended = complete_to_full_rank(qbar, OpAxis::rows);
    REQUIRE(appended.rows() == 2);
    Mat e5(1, 8), e7(1, 8);
    e5(0, 4) = Rational(1);
    e7(0, 6) = Rational(1);
    CHECK(appended.row(0) == e5);
    CHECK(appended.row(1) == e7);
    CHECK(rank(Mat::vstack(qbar, appended)) == 8);

    Mat empty(0, 2);
    Mat full = complete_to_full_rank(empty, OpAxis::rows);
    CHECK(full == Mat::identity(2));

    Mat col = Mat::from_rows({{1}, {0}, {0}});
    Mat cols = complete_to_full_rank(col, OpAxis::columns);
    CHECK(cols.rows() == 3);
    CHECK(cols.cols() == 2);
    CHECK(rank(Mat::hstack(col, cols)) == 3);
}

TEST_CASE("completion rejects dependent input lines") {
    CHECK_THROWS_AS(complete_to_full_rank(Mat::from_rows({{1, 2}, {2, 4}}), OpAxis::rows),
                    InvariantViolation);
}
