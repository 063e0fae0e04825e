#include <random>

#include "admcube/linalg.hpp"
#include "doctest.h"

using namespace admcube;

namespace {

Matrix random_matrix(const Ring& r, int rows, int cols, std::mt19937_64& rng, long lo = -9,
                     long hi = 9) {
    std::uniform_int_distribution<long> dist(lo, hi);
    Matrix m(r, rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (r.kind() == RingKind::Rationals && dist(rng) > 6) {
                m.set(i, j, Elem(r, dist(rng), 1 + std::abs(dist(rng))));
            } else {
                m.set(i, j, Elem(r, dist(rng)));
            }
        }
    }
    return m;
}

// Independent oracle over Z: d_1 ... d_k equals the gcd of all k x k minors.
std::vector<Int> invariant_factors_by_minors(const Matrix& a) {
    std::vector<Int> out;
    Int prev = 1;
    for (int k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        Int g = 0;
        for (const Elem& m : minors(a, k)) g = int_gcd(g, m.num());
        if (g == 0) break;
        out.push_back(int_divexact(g, prev));
        prev = g;
    }
    return out;
}

void check_snf_contract(const Matrix& a) {
    SnfResult s = smith_normal_form(a);
    CHECK(s.u.mul(a).mul(s.v) == s.d);
    CHECK(s.u.mul(s.uinv).is_identity());
    CHECK(s.v.mul(s.vinv).is_identity());
    int dl = std::min(a.rows(), a.cols());
    for (int k = 0; k + 1 < dl; ++k) {
        const Elem& x = s.d.at(k, k);
        const Elem& y = s.d.at(k + 1, k + 1);
        if (x.is_zero()) {
            CHECK(y.is_zero());
        } else if (a.ring().kind() == RingKind::Integers ||
                   a.ring().kind() == RingKind::IntegersMod) {
            CHECK(y.num() % x.num() == 0);
        }
    }
    for (int i = 0; i < s.d.rows(); ++i) {
        for (int j = 0; j < s.d.cols(); ++j) {
            if (i != j) CHECK(s.d.at(i, j).is_zero());
        }
    }
}

}  // namespace

TEST_CASE("smith normal form worked examples") {
    Ring z = Ring::integers();
    Matrix a = Matrix::from_int_rows(z, 2, 2, {2, 0, 0, 3});
    SnfResult s = smith_normal_form(a);
    CHECK(s.d.at(0, 0) == Elem(z, 1));
    CHECK(s.d.at(1, 1) == Elem(z, 6));
    check_snf_contract(a);

    // independent oracle: minors gcd characterization
    auto inv = invariant_factors_by_minors(a);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 1);
    CHECK(inv[1] == 6);

    Matrix empty(z, 0, 0);
    SnfResult se = smith_normal_form(empty);
    CHECK(se.d.rows() == 0);
    CHECK(se.u.rows() == 0);
    CHECK(se.v.rows() == 0);

    Ring f5 = Ring::prime_field(5);
    Matrix b = Matrix::from_int_rows(f5, 1, 1, {2});
    CHECK(smith_normal_form(b).d.at(0, 0).is_one());
}

TEST_CASE("snf over Z/m lifts to Z and reduces") {
    Ring z6 = Ring::integers_mod(6);
    Matrix a = Matrix::from_int_rows(z6, 2, 2, {2, 0, 0, 3});
    SnfResult s = smith_normal_form(a);
    CHECK(s.d.at(0, 0) == Elem(z6, 1));
    CHECK(s.d.at(1, 1) == Elem(z6, 0));  // canonical divisor of 6 is 6 = 0
    check_snf_contract(a);

    Ring z4 = Ring::integers_mod(4);
    Matrix b = Matrix::from_int_rows(z4, 1, 1, {2});
    SnfResult sb = smith_normal_form(b);
    CHECK(sb.d.at(0, 0) == Elem(z4, 2));
    // canonical divisor: 3*2 = 6 = 2 mod 4, entry 6 would canonicalize to 2
    Matrix c = Matrix::from_int_rows(z4, 1, 1, {3});
    CHECK(smith_normal_form(c).d.at(0, 0) == Elem(z4, 1));
}

TEST_CASE("snf invariant factors are scramble independent") {
    std::mt19937_64 rng(11);
    Ring z = Ring::integers();
    for (int it = 0; it < 40; ++it) {
        Matrix a = random_matrix(z, 4, 5, rng);
        SnfResult s1 = smith_normal_form(a);
        // random row/col swaps and unit sign flips
        Matrix b = a;
        for (int k = 0; k < 6; ++k) {
            std::vector<int> rp{0, 1, 2, 3}, cp{0, 1, 2, 3, 4};
            std::shuffle(rp.begin(), rp.end(), rng);
            std::shuffle(cp.begin(), cp.end(), rng);
            b = b.rows_subset(rp).cols_subset(cp);
        }
        SnfResult s2 = smith_normal_form(b);
        CHECK(s1.d == s2.d);
        auto oracle = invariant_factors_by_minors(a);
        for (std::size_t k = 0; k < oracle.size(); ++k) {
            CHECK(s1.d.at(static_cast<int>(k), static_cast<int>(k)).num() == oracle[k]);
        }
    }
}

TEST_CASE("snf contract on random matrices over all rings") {
    std::mt19937_64 rng(5);
    std::vector<Ring> rings{Ring::integers(), Ring::rationals(), Ring::prime_field(5),
                            Ring::integers_mod(12)};
    std::uniform_int_distribution<int> dim(0, 6);
    for (const Ring& r : rings) {
        for (int it = 0; it < 30; ++it) {
            Matrix a = random_matrix(r, dim(rng), dim(rng), rng);
            check_snf_contract(a);
        }
    }
}

TEST_CASE("kernel and solve") {
    Ring z = Ring::integers();
    Matrix a = Matrix::from_int_rows(z, 1, 2, {4, 6});
    Matrix k = kernel_basis(a);
    REQUIRE(k.cols() == 1);
    CHECK(a.mul(k).is_zero());
    // generated by (3, -2): mutual membership
    Matrix target = Matrix::from_int_rows(z, 2, 1, {3, -2});
    CHECK(solve(k, target).has_value());
    CHECK(solve(target, k).has_value());

    Matrix b = Matrix::from_int_rows(z, 1, 1, {2});
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a.mul(*x) == b);
    CHECK_FALSE(solve(a, Matrix::from_int_rows(z, 1, 1, {3})).has_value());

    Ring q = Ring::rationals();
    Matrix aq = Matrix::from_int_rows(q, 1, 2, {1, 0});
    Matrix kq = kernel_basis(aq);
    REQUIRE(kq.cols() == 1);
    CHECK(kq.at(0, 0).is_zero());
    CHECK_FALSE(kq.at(1, 0).is_zero());
    auto xq = solve(aq, Matrix(q, 1, 1));
    REQUIRE(xq.has_value());
    CHECK(xq->is_zero());
}

TEST_CASE("kernel over Z/m includes annihilator generators") {
    Ring z6 = Ring::integers_mod(6);
    Matrix a = Matrix::from_int_rows(z6, 1, 1, {2});
    Matrix k = kernel_basis(a);
    CHECK(a.mul(k).is_zero());
    // kernel of *2 on Z/6 is {0,3}: 3 must be reachable
    CHECK(solve(k, Matrix::from_int_rows(z6, 1, 1, {3})).has_value());
    // and 1 must not be
    CHECK_FALSE(solve(k, Matrix::from_int_rows(z6, 1, 1, {1})).has_value());

    // 5 is a unit mod 10: kernel of *5 on Z/10 is {0,2,4,6,8}
    Ring z10 = Ring::integers_mod(10);
    Matrix b = Matrix::from_int_rows(z10, 1, 1, {5});
    Matrix kb = kernel_basis(b);
    CHECK(b.mul(kb).is_zero());
    CHECK(solve(kb, Matrix::from_int_rows(z10, 1, 1, {2})).has_value());
    CHECK_FALSE(solve(kb, Matrix::from_int_rows(z10, 1, 1, {5})).has_value());
}

TEST_CASE("random kernels and solves are exact") {
    std::mt19937_64 rng(23);
    std::vector<Ring> rings{Ring::integers(), Ring::rationals(), Ring::prime_field(7),
                            Ring::integers_mod(8)};
    std::uniform_int_distribution<int> dim(0, 5);
    for (const Ring& r : rings) {
        for (int it = 0; it < 30; ++it) {
            Matrix a = random_matrix(r, dim(rng), dim(rng), rng, -6, 6);
            Matrix k = kernel_basis(a);
            CHECK(a.mul(k).is_zero());
            // a * (random combo of kernel) = 0 and solve recovers membership
            if (a.cols() > 0) {
                Matrix x = random_matrix(r, a.cols(), 1, rng, -4, 4);
                Matrix b = a.mul(x);
                auto sol = solve(a, b);
                REQUIRE(sol.has_value());
                CHECK(a.mul(*sol) == b);
            }
        }
    }
}

TEST_CASE("determinant, adjugate, minors") {
    Ring z = Ring::integers();
    Matrix x = Matrix::from_int_rows(z, 2, 2, {2, 1, 0, 3});
    CHECK(det(x) == Elem(z, 6));
    Matrix adj = adjugate(x);
    CHECK(adj == Matrix::from_int_rows(z, 2, 2, {3, -1, 0, 2}));

    CHECK(det(Matrix(z, 0, 0)).is_one());
    CHECK(adjugate(Matrix::identity(z, 3)) == Matrix::identity(z, 3));
    CHECK(adjugate(Matrix::from_int_rows(z, 1, 1, {7})) ==
          Matrix::from_int_rows(z, 1, 1, {1}));

    auto m1 = minors(Matrix::from_int_rows(z, 2, 2, {2, 0, 0, 3}), 1);
    REQUIRE(m1.size() == 4);
    CHECK(m1[0] == Elem(z, 2));
    CHECK(m1[1] == Elem(z, 0));
    CHECK(m1[2] == Elem(z, 0));
    CHECK(m1[3] == Elem(z, 3));
    CHECK_THROWS_AS(minors(x, 3), Error);
}

TEST_CASE("adjugate identity on random square matrices") {
    std::mt19937_64 rng(31);
    std::vector<Ring> rings{Ring::integers(), Ring::rationals(), Ring::prime_field(11),
                            Ring::integers_mod(9)};
    std::uniform_int_distribution<int> dim(1, 5);
    for (const Ring& r : rings) {
        for (int it = 0; it < 25; ++it) {
            Matrix x = random_matrix(r, 0, 0, rng);
            int n = dim(rng);
            x = random_matrix(r, n, n, rng, -5, 5);
            Elem d = det(x);
            Matrix di = Matrix::scalar(r, n, d);
            CHECK(adjugate(x).mul(x) == di);
            CHECK(x.mul(adjugate(x)) == di);
        }
    }
}

TEST_CASE("minor ideals form a chain over Z") {
    std::mt19937_64 rng(101);
    Ring z = Ring::integers();
    for (int it = 0; it < 20; ++it) {
        Matrix a = random_matrix(z, 4, 4, rng, -5, 5);
        Int g = 0;
        for (int t = 1; t < 4; ++t) {
            Int gt = 0;
            for (const Elem& m : minors(a, t)) gt = int_gcd(gt, m.num());
            if (t > 1 && g != 0) {
                for (const Elem& m : minors(a, t)) {
                    CHECK(int_mod(m.num(), g) == 0);
                }
            }
            g = gt;
        }
    }
}

TEST_CASE("hermite form is canonical for row spans") {
    std::mt19937_64 rng(41);
    Ring z = Ring::integers();
    for (int it = 0; it < 30; ++it) {
        Matrix a = random_matrix(z, 3, 4, rng, -6, 6);
        Matrix h = row_hermite(a);
        // unimodular row mixes do not change the form
        Matrix b = a;
        for (int k = 0; k < 5; ++k) {
            std::uniform_int_distribution<int> pick(0, 2);
            int i = pick(rng), j = pick(rng);
            if (i == j) continue;
            std::uniform_int_distribution<long> coef(-3, 3);
            long q = coef(rng);
            for (int col = 0; col < 4; ++col) {
                b.set(i, col, add(b.at(i, col), mul(Elem(z, q), b.at(j, col))));
            }
        }
        CHECK(row_hermite(b) == h);
    }
    // pivots positive, entries above reduced
    Matrix a = Matrix::from_int_rows(z, 2, 2, {4, 7, 0, -3});
    Matrix h = row_hermite(a);
    CHECK(h == Matrix::from_int_rows(z, 2, 2, {4, 1, 0, 3}));

    Ring q = Ring::rationals();
    Matrix aq = Matrix::from_int_rows(q, 2, 2, {2, 4, 1, 2});
    Matrix hq = row_hermite(aq);
    CHECK(hq.rows() == 1);
    CHECK(hq.at(0, 0).is_one());
    CHECK(hq.at(0, 1) == Elem(q, 2));
}
