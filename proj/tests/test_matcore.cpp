#include <doctest.h>

#include "hullcert/matcore.hpp"
#include "support.hpp"

using namespace hullcert;
using testsupport::det_cofactor;
using testsupport::rand_matrix;

TEST_CASE("sign_of applies the two-parameter zero band") {
    CHECK(sign_of(0.0, 1.0) == Sign3::Zero);
    CHECK(sign_of(5e-10, 1.0) == Sign3::Zero);
    CHECK(sign_of(-3.0, 1.0) == Sign3::Negative);
    CHECK(sign_of(3e-9, 1.0) == Sign3::Positive);
    CHECK(sign_of(-3e-9, 1.0) == Sign3::Negative);
    // scale widens the band
    CHECK(sign_of(5e-7, 1.0e3) == Sign3::Zero);
    CHECK(sign_of(5e-7, 1.0, Tolerance{1e-12, 1e-12}) == Sign3::Positive);
}

TEST_CASE("matrix construction validates shape and finiteness") {
    CHECK_THROWS_AS(Matrix(0, 2), DimensionError);
    CHECK_THROWS_AS(Matrix(2, 2, {1.0, 2.0, 3.0}), DimensionError);
    CHECK_THROWS_AS(Matrix(1, 2, {1.0, std::numeric_limits<double>::infinity()}), Error);
    const Matrix m{{1.0, 2.0}, {3.0, 4.0}};
    CHECK(m(1, 0) == 3.0);
    CHECK(m.max_abs() == 4.0);
}

TEST_CASE("determinant matches closed forms") {
    CHECK(determinant(Matrix{{-1, 2}, {2, -1}}) == -3.0);
    CHECK(determinant(Matrix::identity(3)) == 1.0);
    CHECK(determinant(Matrix{{1, 2}, {2, 1}}) == -3.0);
    CHECK(determinant(Matrix{{7}}) == 7.0);
    CHECK_THROWS_AS(determinant(Matrix(2, 3)), DimensionError);
}

TEST_CASE("determinant agrees with the cofactor oracle on random matrices") {
    std::mt19937_64 g(7001);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 1 + static_cast<int>(g() % 6);
        const Matrix m = rand_matrix(g, n, n, -5.0, 5.0);
        const double lu = determinant(m);
        const double oracle = det_cofactor(m);
        CHECK(lu == doctest::Approx(oracle).epsilon(1e-9).scale(std::max(1.0, std::abs(oracle))));
    }
}

TEST_CASE("submatrix reads the induced block") {
    const Matrix m{{1, 2}, {3, 4}};
    CHECK(submatrix(m, IndexSet::of({0}), IndexSet::of({1})) == Matrix{{2}});
    CHECK(submatrix(m, IndexSet::full(2), IndexSet::full(2)) == m);
    const Matrix m3{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    CHECK(submatrix(m3, IndexSet::of({0, 2}), IndexSet::of({0, 2})) == Matrix{{1, 3}, {7, 9}});
    CHECK_THROWS_AS(submatrix(m, IndexSet::of({2}), IndexSet::of({0})), DimensionError);
}

TEST_CASE("principal minors enumerate size-then-lex with exact values") {
    const auto minors = principal_minors(Matrix{{-1, 2}, {2, -1}});
    REQUIRE(minors.size() == 3);
    CHECK(minors[0].subset == IndexSet::of({0}));
    CHECK(minors[0].value == -1.0);
    CHECK(minors[1].subset == IndexSet::of({1}));
    CHECK(minors[1].value == -1.0);
    CHECK(minors[2].subset == IndexSet::of({0, 1}));
    CHECK(minors[2].value == -3.0);

    const auto id = principal_minors(Matrix::identity(2));
    for (const auto& pm : id) CHECK(pm.value == 1.0);

    const double third = 1.0 / 3.0;
    const auto ap = principal_minors(Matrix{{third, -2 * third}, {-2 * third, third}});
    CHECK(ap[0].value == doctest::Approx(third).epsilon(1e-12));
    CHECK(ap[1].value == doctest::Approx(third).epsilon(1e-12));
    CHECK(ap[2].value == doctest::Approx(-third).epsilon(1e-12));
}

TEST_CASE("principal minor stream has 2^n - 1 items and matches per-subset determinants") {
    std::mt19937_64 g(7002);
    for (int rep = 0; rep < 80; ++rep) {
        const int n = 2 + static_cast<int>(g() % 4);
        const Matrix m = rand_matrix(g, n, n, -3.0, 3.0);
        const auto minors = principal_minors(m);
        CHECK(static_cast<int>(minors.size()) == (1 << n) - 1);
        // order: sizes ascending, lexicographic inside a size
        for (std::size_t k = 1; k < minors.size(); ++k) {
            const auto &a = minors[k - 1].subset, &b = minors[k].subset;
            const bool ordered = a.size() < b.size() || (a.size() == b.size() && a.indices() < b.indices());
            CHECK(ordered);
        }
        for (const auto& pm : minors)
            CHECK(pm.value == determinant(submatrix(m, pm.subset, pm.subset)));
        // the full-set minor is the determinant itself, same code path
        CHECK(minors.back().value == determinant(m));
    }
}

TEST_CASE("principal minors respect the dimension cap") {
    CHECK_THROWS_AS(principal_minors(Matrix(17, 17)), ComplexityError);
    CHECK_THROWS_AS(principal_minors(Matrix(5, 5), 4), ComplexityError);
}

TEST_CASE("inverse matches hand values and flags singularity") {
    const Matrix inv = inverse(Matrix{{-1, -2}, {-2, -1}});
    const double third = 1.0 / 3.0;
    CHECK(inv(0, 0) == doctest::Approx(third).epsilon(1e-12));
    CHECK(inv(0, 1) == doctest::Approx(-2 * third).epsilon(1e-12));
    CHECK(inv(1, 0) == doctest::Approx(-2 * third).epsilon(1e-12));
    CHECK(inv(1, 1) == doctest::Approx(third).epsilon(1e-12));

    CHECK(inverse(Matrix::identity(4)) == Matrix::identity(4));
    CHECK_THROWS_AS(inverse(Matrix{{1, 1}, {1, 1}}), SingularMatrixError);
}

TEST_CASE("determinant of inverse is reciprocal on random invertible matrices") {
    std::mt19937_64 g(7003);
    int tested = 0;
    while (tested < 200) {
        const int n = 1 + static_cast<int>(g() % 6);
        const Matrix m = rand_matrix(g, n, n, -2.0, 2.0);
        Matrix inv(1, 1);
        try {
            inv = inverse(m);
        } catch (const Error&) {
            continue;
        }
        ++tested;
        CHECK(determinant(m) * determinant(inv) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("null space basis spans the kernel") {
    const auto one = null_space_basis(Matrix{{1, 1}, {1, 1}});
    REQUIRE(one.size() == 1);
    CHECK(one[0][0] == doctest::Approx(-one[0][1]).epsilon(1e-12));
    CHECK(max_abs(one[0]) > 0.0);

    CHECK(null_space_basis(Matrix::identity(3)).empty());

    const auto two = null_space_basis(Matrix{{1, 2, 3}});
    REQUIRE(two.size() == 2);
    for (const auto& v : two)
        CHECK(v[0] + 2 * v[1] + 3 * v[2] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("null space vectors satisfy the residual bound on random low-rank matrices") {
    std::mt19937_64 g(7004);
    for (int rep = 0; rep < 100; ++rep) {
        const int m = 2 + static_cast<int>(g() % 4);
        const int n = 2 + static_cast<int>(g() % 4);
        const int r = 1 + static_cast<int>(g() % std::min(m, n));
        Matrix low(m, n);
        const Matrix left = rand_matrix(g, m, r, -2.0, 2.0);
        const Matrix right = rand_matrix(g, r, n, -2.0, 2.0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int k = 0; k < r; ++k) s += left(i, k) * right(k, j);
                low(i, j) = s;
            }
        const auto basis = null_space_basis(low);
        CHECK(static_cast<int>(basis.size()) >= n - r);
        for (const auto& v : basis) {
            const auto mv = low * v;
            CHECK(max_abs(mv) <= 1e-6 * std::max(1.0, low.max_abs()) * max_abs(v));
        }
    }
}
