#include "troptoric/plsemifield.hpp"

#include <doctest.h>

#include <random>

using namespace troptoric;

namespace {

PLFunction pl(std::vector<std::vector<long long>> gens) {
    return PLFunction(gens.at(0).size(), std::move(gens));
}

PLFunction random_pl(std::mt19937_64& rng, std::size_t rank = 2) {
    std::uniform_int_distribution<long long> g(-4, 4);
    std::uniform_int_distribution<int> n(1, 4);
    std::vector<std::vector<long long>> gens;
    int k = n(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<long long> v(rank);
        for (auto& x : v) x = g(rng);
        gens.push_back(std::move(v));
    }
    return PLFunction(rank, std::move(gens));
}

}  // namespace

TEST_CASE("tropical sum basics") {
    PLFunction f = pl({{1, 0}, {0, 0}});  // min{x, 0}
    CHECK(trop_add(f, f) == f);
    PLFunction g = pl({{0, 0}, {0, 1}});  // min{0, y}
    PLFunction sum = trop_add(f, g);
    CHECK(sum == pl({{1, 0}, {0, 0}, {0, 1}}));
    CHECK(trop_add(InfinityExtended::of(f), InfinityExtended::infinity()).value == f);
}

TEST_CASE("tropical product basics") {
    PLFunction f = pl({{1, 0}, {0, 0}});
    PLFunction zero_form = pl({{0, 0}});
    CHECK(trop_mul(f, zero_form) == f);
    PLFunction g = pl({{0, 1}, {0, 0}});  // min{y, 0}
    CHECK(trop_mul(f, g) == pl({{1, 1}, {1, 0}, {0, 1}, {0, 0}}));
    CHECK(trop_mul(pl({{2, 3}}), pl({{-1, 5}})) == pl({{1, 8}}));
}

TEST_CASE("canonicalization keeps hull vertices only") {
    // (1,1) is inside the hull of the others
    PLFunction f = pl({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
    CHECK(f.generators().size() == 4);
    // midpoint of a segment disappears
    CHECK(pl({{0, 0}, {1, 1}, {2, 2}}) == pl({{0, 0}, {2, 2}}));
}

TEST_CASE("canonicalization in higher rank") {
    PLFunction f(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}});
    // (1,1,0) = midpoint of (2,0,0),(0,2,0)
    CHECK(f.generators().size() == 4);
}

TEST_CASE("newton valuation") {
    RingPtr r = make_ring({"t1", "t2"}, {true, true});
    Polynomial p = parse_polynomial(r, "3 + 5*t1");
    auto v = newton_valuation(p);
    REQUIRE_FALSE(v.is_infinity());
    CHECK(*v.value == pl({{0, 0}, {1, 0}}));  // min{0, x}

    CHECK(*newton_valuation(parse_polynomial(r, "t1^2*t2^-1")).value == pl({{2, -1}}));
    CHECK(newton_valuation(Polynomial::zero(r)).is_infinity());
}

TEST_CASE("newton valuation is multiplicative") {
    RingPtr r = make_ring({"t1", "t2"}, {true, true});
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> e(-3, 3), c(-5, 5), n(1, 4);
    for (int rep = 0; rep < 25; ++rep) {
        auto rand_poly = [&]() {
            std::vector<Term> ts;
            int k = n(rng);
            for (int i = 0; i < k; ++i) {
                int coef = c(rng);
                if (coef == 0) coef = 2;
                ts.push_back(Term{{e(rng), e(rng)}, Rat(coef)});
            }
            return Polynomial(r, ts);
        };
        Polynomial p = rand_poly(), q = rand_poly();
        if (p.is_zero() || q.is_zero() || (p * q).is_zero()) continue;
        CHECK(*newton_valuation(p * q).value ==
              trop_mul(*newton_valuation(p).value, *newton_valuation(q).value));
        // superadditivity on a grid (values can only go up for sums)
        Polynomial s = p + q;
        if (!s.is_zero()) {
            PLFunction lhs = *newton_valuation(s).value;
            PLFunction rhs = trop_add(*newton_valuation(p).value, *newton_valuation(q).value);
            for (long long x = -3; x <= 3; ++x)
                for (long long y = -3; y <= 3; ++y)
                    CHECK(lhs.evaluate(std::vector<long long>{x, y}) >=
                          rhs.evaluate(std::vector<long long>{x, y}));
        }
    }
}

TEST_CASE("evaluation") {
    PLFunction f = pl({{1, 0}, {0, 1}});  // min{x, y}
    CHECK(f.evaluate(std::vector<long long>{1, 1}) == 1);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> d(-5, 5);
    for (int rep = 0; rep < 20; ++rep) {
        PLFunction g = random_pl(rng);
        CHECK(g.evaluate(std::vector<long long>{0, 0}) == 0);
        std::vector<long long> rho{d(rng), d(rng)};
        for (long long l = 0; l <= 3; ++l) {
            std::vector<long long> scaled{l * rho[0], l * rho[1]};
            CHECK(g.evaluate(scaled) == l * g.evaluate(rho));
        }
    }
}

TEST_CASE("linearity on cones") {
    Fan fan = make_fan(2, {{1, 0}, {1, 1}, {-1, -1}, {0, -1}}, {{0, 1}, {2, 3}});
    PLFunction f = pl({{1, 0}, {0, 0}});  // min{x, 0}
    auto mc = maximal_cones(fan);
    // on cone{(1,0),(1,1)} the zero form wins
    std::size_t c01 = 0, c23 = 0;
    for (auto ci : mc) {
        if (fan.cones[ci] == std::vector<std::size_t>{0, 1}) c01 = ci;
        if (fan.cones[ci] == std::vector<std::size_t>{2, 3}) c23 = ci;
    }
    auto w = is_linear_on_cone(f, fan, c01);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<long long>{0, 0});
    CHECK_FALSE(is_linear_on_cone(f, fan, c23).has_value());

    PLFunction lin = pl({{2, 3}});
    CHECK(is_linear_on_cone(lin, fan, c23) == std::vector<long long>{2, 3});
}

TEST_CASE("linearity fan of the six Gr(2,4) support functions") {
    std::vector<PLFunction> psi{
        pl({{1, 0}, {0, 0}}),  // p12
        pl({{0, 0}, {0, 1}}),  // p13
        pl({{0, 0}}),          // p14
        pl({{1, 0}, {0, 1}}),  // p23
        pl({{1, 0}, {0, 0}}),  // p24
        pl({{0, 1}, {0, 0}})   // p34
    };
    Fan fan = linearity_fan(psi);
    std::set<std::vector<long long>> rays(fan.rays.begin(), fan.rays.end());
    std::set<std::vector<long long>> expected{{1, 0},  {0, 1},  {1, 1},
                                              {-1, 0}, {0, -1}, {-1, -1}};
    CHECK(rays == expected);
    CHECK(validate(fan).ok);
}

TEST_CASE("linearity fan degenerate inputs") {
    Fan whole = linearity_fan({pl({{3, 5}})});
    CHECK(whole.rays.size() == 4);
    CHECK(validate(whole).ok);

    Fan halfplanes = linearity_fan({pl({{1, 0}, {0, 0}})});
    std::set<std::vector<long long>> rays(halfplanes.rays.begin(), halfplanes.rays.end());
    std::set<std::vector<long long>> expected{{0, 1}, {0, -1}, {1, 0}, {-1, 0}};
    CHECK(rays == expected);
}

TEST_CASE("semiring laws on random elements") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 60; ++rep) {
        PLFunction a = random_pl(rng), b = random_pl(rng), c = random_pl(rng);
        CHECK(trop_add(a, b) == trop_add(b, a));
        CHECK(trop_mul(a, b) == trop_mul(b, a));
        CHECK(trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c)));
        CHECK(trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c)));
        CHECK(trop_add(a, a) == a);
        CHECK(trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c)));
    }
}
