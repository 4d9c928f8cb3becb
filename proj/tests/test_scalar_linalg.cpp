#include <doctest.h>

#include <random>

#include "braidinv/scalar.hpp"
#include "braidinv/sparse_matrix.hpp"

using namespace braidinv;

TEST_CASE("scalar arithmetic and canonical form") {
    Scalar a(3, 6);
    CHECK(a.str() == "1/2");
    CHECK(Scalar(-4, -8).str() == "1/2");
    CHECK(Scalar(4, -8).str() == "-1/2");
    CHECK((Scalar(1, 3) + Scalar(1, 6)).str() == "1/2");
    CHECK((Scalar(2, 3) * Scalar(3, 2)).is_one());
    CHECK_THROWS_AS(Scalar(1, 1) / Scalar(0), std::domain_error);
}

TEST_CASE("scalar string round-trip") {
    for (const char* s : {"0", "1", "-1", "7", "-3/2", "22/7", "-1000000000000000000000/13"}) {
        CHECK(Scalar::parse(s).str() == s);
    }
    CHECK(Scalar::parse("\xe2\x88\x92"
                        "3/2")
              .str() == "-3/2");
    CHECK(Scalar::parse("4/6").str() == "2/3");
    CHECK_THROWS_AS(Scalar::parse("abc"), std::domain_error);
    CHECK_THROWS_AS(Scalar::parse("1/0"), std::domain_error);
}

TEST_CASE("scalar distributivity on random samples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    for (int t = 0; t < 200; ++t) {
        Scalar a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("nullspace of tiny matrices") {
    SparseMatrix z(1, 1);  // [0]
    auto basis = nullspace_basis(z);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].at(0) == Scalar(1));

    SparseMatrix m(1, 2);
    m.set(0, 0, Scalar(1));
    m.set(0, 1, Scalar(-1));
    basis = nullspace_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].at(0) == Scalar(1));
    CHECK(basis[0].at(1) == Scalar(1));

    SparseMatrix m2(2, 3);  // [[1,1,0],[0,1,1]]
    m2.set(0, 0, Scalar(1));
    m2.set(0, 1, Scalar(1));
    m2.set(1, 1, Scalar(1));
    m2.set(1, 2, Scalar(1));
    basis = nullspace_basis(m2);
    REQUIRE(basis.size() == 1);
    // proportional to (1, -1, 1)
    CHECK(basis[0].at(1) / basis[0].at(0) == Scalar(-1));
    CHECK(basis[0].at(2) / basis[0].at(0) == Scalar(1));
}

TEST_CASE("rank basics") {
    SparseMatrix z(3, 4);
    CHECK(rank(z) == 0);
    SparseMatrix id(5, 5);
    for (int i = 0; i < 5; ++i) id.set(i, i, Scalar(1));
    CHECK(rank(id) == 5);
    SparseMatrix prop(2, 2);  // [[1,2],[2,4]]
    prop.set(0, 0, Scalar(1));
    prop.set(0, 1, Scalar(2));
    prop.set(1, 0, Scalar(2));
    prop.set(1, 1, Scalar(4));
    CHECK(rank(prop) == 1);
}

TEST_CASE("empty matrix has the full standard basis as kernel") {
    SparseMatrix m(0, 3);
    auto basis = nullspace_basis(m);
    REQUIRE(basis.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(basis[i].size() == 1);
        CHECK(basis[i].at(i) == Scalar(1));
    }
}

namespace {

// Naive rational Gaussian elimination, independent of the fraction-free path.
std::vector<std::vector<Scalar>> naive_rref(std::vector<std::vector<Scalar>> rows, int cols,
                                            std::vector<int>& pivots) {
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i) {
            if (!rows[i][c].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        Scalar inv = Scalar(1) / rows[r][c];
        for (int j = 0; j < cols; ++j) rows[r][j] *= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar f = rows[i][c];
            for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<SparseVector> naive_nullspace(const SparseMatrix& m) {
    std::vector<std::vector<Scalar>> rows(m.rows(), std::vector<Scalar>(m.cols(), Scalar(0)));
    for (const auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;
    std::vector<int> pivots;
    auto rref = naive_rref(std::move(rows), m.cols(), pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<SparseVector> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        SparseVector v;
        v[f] = Scalar(1);
        for (std::size_t k = 0; k < rref.size(); ++k)
            if (!rref[k][f].is_zero()) v[pivots[k]] = -rref[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

TEST_CASE("fraction-free kernels agree with naive rational elimination") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        SparseMatrix m(20, 20);
        for (int i = 0; i < 20; ++i)
            for (int j = 0; j < 20; ++j)
                if (density(rng) < 0.4) m.set(i, j, Scalar(entry(rng)));
        auto a = nullspace_basis(m);
        auto b = naive_nullspace(m);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
        CHECK(rank(m) + static_cast<int>(a.size()) == m.cols());
    }
}

TEST_CASE("rank-nullity on random rectangular matrices") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-5, 5), dim(1, 12);
    for (int trial = 0; trial < 20; ++trial) {
        int r = dim(rng), c = dim(rng);
        SparseMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (entry(rng) > 2) m.set(i, j, Scalar(entry(rng)));
        CHECK(rank(m) + static_cast<int>(nullspace_basis(m).size()) == c);
        // kernel vectors actually lie in the kernel
        for (const auto& v : nullspace_basis(m)) CHECK(m.apply(v).empty());
    }
}
