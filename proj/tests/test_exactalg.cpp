#include "troptoric/exactalg.hpp"
#include "troptoric/simplex.hpp"

#include <doctest.h>

#include <random>

using namespace troptoric;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -5,
                             int hi = 5) {
    std::uniform_int_distribution<int> dist(lo, hi);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("rref identity and zero") {
    auto [id, piv] = rref(RationalMatrix::identity(3));
    CHECK(id == RationalMatrix::identity(3));
    CHECK(piv == std::vector<std::size_t>{0, 1, 2});

    auto [z, zp] = rref(RationalMatrix(2, 3));
    CHECK(z == RationalMatrix(2, 3));
    CHECK(zp.empty());
}

TEST_CASE("rref preserves the row space on rank-2 inputs") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        // two random rows plus a combination: rank <= 2
        RationalMatrix base = random_matrix(rng, 2, 4);
        RationalMatrix m(3, 4);
        for (std::size_t j = 0; j < 4; ++j) {
            m.at(0, j) = base.at(0, j);
            m.at(1, j) = base.at(1, j);
            m.at(2, j) = base.at(0, j) * 2 - base.at(1, j) * 3;
        }
        auto [red, piv] = rref(m);
        CHECK(piv.size() == rank(m));
        // mutual row-reduction: identical canonical subspaces
        CHECK(Subspace(4, m) == Subspace(4, red));
    }
}

TEST_CASE("kernel basics") {
    RationalMatrix ones(1, 4);
    for (std::size_t j = 0; j < 4; ++j) ones.at(0, j) = 1;
    Subspace k = kernel(ones);
    CHECK(k.dim() == 3);

    CHECK(kernel(RationalMatrix::identity(5)).dim() == 0);
}

TEST_CASE("kernel vectors annihilate the matrix") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        RationalMatrix base = random_matrix(rng, 2, 5);
        RationalMatrix m(3, 5);
        for (std::size_t j = 0; j < 5; ++j) {
            m.at(0, j) = base.at(0, j);
            m.at(1, j) = base.at(1, j);
            m.at(2, j) = base.at(0, j) + base.at(1, j);
        }
        Subspace k = kernel(m);
        if (rank(m) == 2) CHECK(k.dim() == 3);
        for (std::size_t i = 0; i < k.dim(); ++i) {
            auto v = k.basis().row(i);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                Rat dot = 0;
                for (std::size_t c = 0; c < 5; ++c) dot += m.at(r, c) * v[c];
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("intersection basics") {
    std::mt19937_64 rng(13);
    Subspace x(5, random_matrix(rng, 3, 5));
    CHECK(intersect({x, x}) == x);

    RationalMatrix e1(1, 3), e2(1, 3);
    e1.at(0, 0) = 1;
    e2.at(0, 1) = 1;
    CHECK(intersect({Subspace(3, e1), Subspace(3, e2)}).dim() == 0);

    CHECK_THROWS_AS(intersect({Subspace(3, e1), x}), std::invalid_argument);
}

TEST_CASE("random intersections: dimension count and membership") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 15; ++rep) {
        Subspace a(5, random_matrix(rng, 3, 5));
        Subspace b(5, random_matrix(rng, 3, 5));
        if (a.dim() != 3 || b.dim() != 3) continue;
        Subspace c = intersect({a, b});
        CHECK(c.dim() >= 1);  // 3 + 3 - 5
        for (std::size_t i = 0; i < c.dim(); ++i) {
            auto v = c.basis().row(i);
            CHECK(a.contains(v));
            CHECK(b.contains(v));
        }
        // dim(A) + dim(B) = dim(A+B) + dim(A cap B)
        CHECK(a.dim() + b.dim() == subspace_sum({a, b}).dim() + c.dim());
    }
}

TEST_CASE("canonical bases are identical for equal subspaces") {
    std::mt19937_64 rng(23);
    RationalMatrix m = random_matrix(rng, 2, 4);
    RationalMatrix doubled(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        doubled.at(0, j) = m.at(0, j) * 3;
        doubled.at(1, j) = m.at(1, j) - m.at(0, j);
        doubled.at(2, j) = m.at(1, j);
        doubled.at(3, j) = m.at(0, j) + m.at(1, j);
    }
    CHECK(Subspace(4, m) == Subspace(4, doubled));
}

TEST_CASE("lp feasibility") {
    // x + y = 1, x,y >= 0 is feasible; x + y = -1 is not
    RationalMatrix a(1, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    CHECK(lp_feasible_point(a, {Rat(1)}).has_value());
    CHECK_FALSE(lp_feasible_point(a, {Rat(-1)}).has_value());

    auto x = lp_feasible_point(a, {Rat(1)});
    CHECK((*x)[0] + (*x)[1] == 1);
}
