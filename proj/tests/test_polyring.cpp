#include "troptoric/polyring.hpp"

#include <doctest.h>

#include <random>

using namespace troptoric;

TEST_CASE("parse and canonical serialization") {
    RingPtr r = make_ring({"Y1", "Y2", "X1", "X2", "X4"});
    Polynomial f = parse_polynomial(r, "Y1*X1^2*X4 + Y2*X1*X2^2");
    CHECK(f.size() == 2);
    CHECK(format_polynomial(f) == "Y1*X1^2*X4 + Y2*X1*X2^2");
    CHECK(parse_polynomial(r, format_polynomial(f)) == f);

    Polynomial g = parse_polynomial(r, "-3/2*Y1 + Y2 - 1");
    CHECK(format_polynomial(g) == "-3/2*Y1 + Y2 - 1");
    CHECK(parse_polynomial(r, format_polynomial(g)) == g);

    CHECK_THROWS_AS(parse_polynomial(r, "Y1 + W3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial(r, "Y1^-1"), std::invalid_argument);
}

TEST_CASE("laurent parsing") {
    RingPtr r = make_ring({"t", "s"}, {true, false});
    Polynomial f = parse_polynomial(r, "t^-2 + s");
    CHECK(f.size() == 2);
    CHECK_THROWS_AS(parse_polynomial(r, "s^-1"), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    RingPtr r = make_ring({"x", "y"});
    Polynomial x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
    CHECK((x + y) * (x + y) == x * x + x * y.scaled(2) + y * y);
    CHECK((x - x).is_zero());
    CHECK((x * y).degree() == 2);
}

TEST_CASE("round trip on random polynomials") {
    RingPtr r = make_ring({"a", "b", "c"});
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e(0, 4), c5(-6, 6), n(1, 6);
    for (int rep = 0; rep < 40; ++rep) {
        std::vector<Term> ts;
        int k = n(rng);
        for (int i = 0; i < k; ++i) {
            int coef = c5(rng);
            if (coef == 0) coef = 1;
            ts.push_back(Term{{e(rng), e(rng), e(rng)}, Rat(coef)});
        }
        Polynomial f(r, ts);
        CHECK(parse_polynomial(r, format_polynomial(f)) == f);
    }
}

TEST_CASE("substitution and renaming") {
    RingPtr small = make_ring({"x", "y"});
    RingPtr big = make_ring({"u", "v", "w"});
    Polynomial f = parse_polynomial(small, "x^2 - y");
    Polynomial g = substitute(
        f, big, {Polynomial::variable(big, 1), Polynomial::variable(big, 2)});
    CHECK(format_polynomial(g) == "v^2 - w");
    Polynomial h = rename_into(f, big, {2, 0});
    CHECK(format_polynomial(h) == "w^2 - u");
}

TEST_CASE("weight order semantics (min convention)") {
    WeightOrder w{{Rat(1), Rat(0)}};
    // x has weight 1, y weight 0: y is more leading (minimal weight)
    CHECK(w.leads({0, 1}, {1, 0}));
    CHECK_FALSE(w.leads({1, 0}, {0, 1}));
    // tie: grevlex larger leads
    WeightOrder z{};
    CHECK(z.leads({1, 0}, {0, 1}));  // x > y in grevlex
}

TEST_CASE("homogeneity checks") {
    RingPtr r = make_ring({"x", "y"});
    Polynomial f = parse_polynomial(r, "x^2 - y");
    CHECK_FALSE(f.homogeneous_under({1, 1}));
    CHECK(f.homogeneous_under({1, 2}));
}
