#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holodet/det.hpp"
#include "oracle.hpp"

using namespace holodet;

namespace {

SymMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
    SymMatrix m;
    m.n = static_cast<int>(rows.size());
    m.entries.assign(m.n, std::vector<MuPoly>(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m.entries[i][j] = MuPoly(rat(rows[i][j]));
    return m;
}

MuRat row_dot(const SymMatrix& m, int row, const std::vector<MuRat>& c) {
    MuRat s;
    for (int j = 0; j < m.n; ++j) s += MuRat(m.entries[row][j]) * c[j];
    return s;
}

}  // namespace

TEST_CASE("Bareiss agrees with Laplace expansion") {
    oracle::Rng rng(11);
    // Constant random matrices up to 5x5.
    for (int n = 0; n <= 5; ++n)
        for (int t = 0; t < 6; ++t) {
            SymMatrix m = rng.matrix(n, 0);
            CHECK(determinant(m) == oracle::laplace_det(m));
        }
    // Symbolic random matrices up to 4x4.
    for (int n = 1; n <= 4; ++n)
        for (int t = 0; t < 4; ++t) {
            SymMatrix m = rng.matrix(n, 2);
            CHECK(determinant(m) == oracle::laplace_det(m));
        }
    // Families, both symbolic and specialized.
    for (int n = 1; n <= 5; ++n) {
        SymMatrix m = build_matrix(andrews_family(), n);
        CHECK(determinant(m) == oracle::laplace_det(m));
        CHECK(determinant(m) == determinant(m.transposed()));
        SymMatrix s = build_matrix(xin_family(1, 1), n, rat(13, 5));
        CHECK(determinant(s) == oracle::laplace_det(s));
    }
    CHECK(determinant(build_matrix(andrews_family(), 0)) == MuPoly::one());
}

TEST_CASE("minors") {
    SymMatrix m = int_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    CHECK(determinant(m) == MuPoly(rat(-3)));
    CHECK(minor(m, 1, 1) == MuPoly(rat(2)));    // det [[5,6],[8,10]]
    CHECK(minor(m, 3, 3) == MuPoly(rat(-3)));   // det [[1,2],[4,5]]
    CHECK(minor(m, 1, 3) == MuPoly(rat(-3)));   // det [[4,5],[7,8]]
    CHECK(minor(m, 3, 1) == MuPoly(rat(-3)));   // det [[2,3],[5,6]]
    CHECK_THROWS_AS(minor(m, 0, 1), IndexOutOfRange);
    CHECK_THROWS_AS(minor(m, 1, 4), IndexOutOfRange);

    // Laplace reconstruction along the last row from signed minors.
    MuPoly rebuilt;
    for (int j = 1; j <= 3; ++j) {
        MuPoly c = minor(m, 3, j);
        if ((3 + j) % 2 == 1) c = -c;
        rebuilt = rebuilt + m.entries[2][j - 1] * c;
    }
    CHECK(rebuilt == determinant(m));
}

TEST_CASE("Desnanot-Jacobi identity") {
    SymMatrix m = int_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    DesnanotJacobiWitness w;
    CHECK(desnanot_jacobi_check(m, &w));
    CHECK(w.det_full == MuPoly(rat(-3)));
    CHECK(w.det_interior == MuPoly(rat(5)));

    // 2x2: interior is the empty matrix with determinant 1.
    SymMatrix m2 = int_matrix({{1, 2}, {3, 4}});
    CHECK(desnanot_jacobi_check(m2, &w));
    CHECK(w.det_interior == MuPoly::one());

    oracle::Rng rng(23);
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t < 5; ++t) CHECK(desnanot_jacobi_check(rng.matrix(n, 1)));
    for (int n = 2; n <= 6; ++n) CHECK(desnanot_jacobi_check(build_matrix(xin_family(1, 1), n)));
    CHECK_THROWS_AS(desnanot_jacobi_check(int_matrix({{5}})), IndexOutOfRange);
}

TEST_CASE("normalized cofactor vectors") {
    // +delta family, n = 2: c = (-mu/2, 1).
    SymMatrix m = build_matrix(andrews_family(), 2);
    CofactorVector cv = cofactor_vector(m, CofactorMode::LAST);
    CHECK(cv.values[0] == MuRat(MuPoly::mu_plus(rat(0)) * rat(-1, 2)));
    CHECK(cv.values[1] == MuRat::one());

    // Defining properties at larger sizes, last and first mode.
    for (int n : {1, 3, 4, 5}) {
        SymMatrix a = build_matrix(andrews_family(), n);
        CofactorVector last = cofactor_vector(a, CofactorMode::LAST);
        CHECK(last.values[n - 1] == MuRat::one());
        for (int i = 0; i + 1 < n; ++i) CHECK(row_dot(a, i, last.values).is_zero());
        // Expansion row recovers det_n / det_{n-1}.
        MuRat expected(determinant(a));
        if (n > 1) expected /= MuRat(determinant(build_matrix(andrews_family(), n - 1)));
        CHECK(row_dot(a, n - 1, last.values) == expected);
        // Cofactor meaning: c_j = (-1)^{n+j} minor(n, j) / minor(n, n).
        if (n > 1)
            for (int j = 1; j <= n; ++j) {
                MuRat mj(minor(a, n, j));
                if ((n + j) % 2 == 1) mj = -mj;
                CHECK(last.values[j - 1] == mj / MuRat(minor(a, n, n)));
            }
    }
    SymMatrix e = build_matrix(xin_family(0, 0), 4);
    CofactorVector first = cofactor_vector(e, CofactorMode::FIRST);
    CHECK(first.values[0] == MuRat::one());
    for (int i = 1; i < 4; ++i) CHECK(row_dot(e, i, first.values).is_zero());

    // When the trailing minor vanishes the bordered system is singular.
    SymMatrix sing = int_matrix({{0, 5}, {0, 7}});
    CHECK_THROWS_AS(cofactor_vector(sing, CofactorMode::LAST), SingularSubmatrix);
}

TEST_CASE("double-step certificate vectors") {
    for (int n : {2, 3, 4, 6}) {
        SymMatrix m = build_matrix(xin_family(1, 1), n);
        auto [cp, cpp] = double_step_vectors(m);
        CHECK(cp[n - 2] == MuRat::one());
        CHECK(cp[n - 1].is_zero());
        CHECK(cpp[n - 2].is_zero());
        CHECK(cpp[n - 1] == MuRat::one());
        for (int i = 0; i + 2 < n; ++i) {
            CHECK(row_dot(m, i, cp).is_zero());
            CHECK(row_dot(m, i, cpp).is_zero());
        }
        // The 2x2 block combination equals det_n / det_{n-2}.
        MuRat expected(determinant(m));
        expected /= MuRat(determinant(build_matrix(xin_family(1, 1), n - 2)));
        CHECK(double_step_quotient(m) == expected);
    }
    CHECK_THROWS_AS(double_step_vectors(int_matrix({{1}})), IndexOutOfRange);
}

TEST_CASE("kernel vectors") {
    int nullity = -1;
    // Odd-size (0,0)-origin matrices are singular with kernel dimension 1.
    for (int dim : {1, 3, 5}) {
        SymMatrix m = build_matrix(xin_family(0, 0), dim);
        auto v = null_vector(m, &nullity);
        REQUIRE(v.has_value());
        CHECK(nullity == 1);
        bool any = false;
        for (const auto& x : *v) any = any || !x.is_zero();
        CHECK(any);
        // Last nonzero entry normalized to 1.
        for (int j = dim - 1; j >= 0; --j)
            if (!(*v)[j].is_zero()) {
                CHECK((*v)[j] == MuRat::one());
                break;
            }
        for (int i = 0; i < dim; ++i) CHECK(row_dot(m, i, *v).is_zero());
    }
    // Nonsingular: no kernel vector.
    CHECK(!null_vector(build_matrix(andrews_family(), 3), &nullity).has_value());
    CHECK(nullity == 0);
    // Rank-0 matrix: nullity n.
    CHECK(null_vector(int_matrix({{0, 0}, {0, 0}}), &nullity).has_value());
    CHECK(nullity == 2);
}

TEST_CASE("linear solver") {
    std::vector<std::vector<MuRat>> a = {{MuRat(rat(2)), MuRat(rat(1))},
                                         {MuRat(rat(1)), MuRat(rat(3))}};
    std::vector<MuRat> rhs = {MuRat(rat(5)), MuRat(rat(10))};
    auto x = solve_linear_system(a, rhs);
    CHECK(x[0] == MuRat(rat(1)));
    CHECK(x[1] == MuRat(rat(3)));
    std::vector<std::vector<MuRat>> s = {{MuRat(rat(1)), MuRat(rat(2))},
                                         {MuRat(rat(2)), MuRat(rat(4))}};
    CHECK_THROWS_AS(solve_linear_system(s, rhs), SingularSubmatrix);
}
