#include "troptoric/plsemifield.hpp"

#include "troptoric/exactalg.hpp"
#include "troptoric/simplex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace troptoric {

namespace {

using Pt = std::vector<long long>;

long long cross2(const Pt& a, const Pt& b) { return a[0] * b[1] - a[1] * b[0]; }

// Vertices of the convex hull of 2d lattice points (monotone chain,
// collinear points dropped).
std::vector<Pt> hull2(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto build = [&](bool lower) {
        std::vector<Pt> h;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const Pt& p = pts[lower ? k : pts.size() - 1 - k];
            while (h.size() >= 2) {
                Pt d1{h.back()[0] - h[h.size() - 2][0], h.back()[1] - h[h.size() - 2][1]};
                Pt d2{p[0] - h.back()[0], p[1] - h.back()[1]};
                if (cross2(d1, d2) <= 0)
                    h.pop_back();
                else
                    break;
            }
            h.push_back(p);
        }
        return h;
    };
    auto lo = build(true), hi = build(false);
    lo.pop_back();
    hi.pop_back();
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

// A point is redundant iff it is a convex combination of the others.
bool in_convex_hull(const Pt& p, const std::vector<Pt>& others) {
    if (others.empty()) return false;
    std::size_t n = p.size(), m = others.size();
    RationalMatrix a(n + 1, m);
    std::vector<Rat> b(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) a.at(i, j) = others[j][i];
        b[i] = p[i];
    }
    for (std::size_t j = 0; j < m; ++j) a.at(n, j) = 1;
    b[n] = 1;
    return lp_feasible_point(a, b).has_value();
}

std::vector<Pt> canonical_generators(std::size_t rank, std::vector<Pt> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.size() <= 1) return gens;
    if (rank == 1) {
        return gens.front() == gens.back() ? std::vector<Pt>{gens.front()}
                                           : std::vector<Pt>{gens.front(), gens.back()};
    }
    if (rank == 2) {
        auto h = hull2(gens);
        std::sort(h.begin(), h.end());
        return h;
    }
    std::vector<Pt> current = gens;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < current.size(); ++i) {
            std::vector<Pt> others;
            for (std::size_t j = 0; j < current.size(); ++j)
                if (j != i) others.push_back(current[j]);
            if (in_convex_hull(current[i], others)) {
                current.erase(current.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    std::sort(current.begin(), current.end());
    return current;
}

Pt primitive2(long long x, long long y) {
    long long a = std::llabs(x), b = std::llabs(y);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    if (a == 0) return {0, 0};
    return {x / a, y / a};
}

}  // namespace

PLFunction::PLFunction(std::size_t rank, std::vector<std::vector<long long>> generators)
    : rank_(rank) {
    for (const auto& g : generators)
        if (g.size() != rank) throw std::invalid_argument("generator rank mismatch");
    if (generators.empty()) throw std::invalid_argument("PLFunction needs a generator");
    gens_ = canonical_generators(rank, std::move(generators));
}

long long PLFunction::evaluate(const std::vector<long long>& rho) const {
    if (rho.size() != rank_) throw std::invalid_argument("evaluation point rank mismatch");
    bool first = true;
    long long best = 0;
    for (const auto& g : gens_) {
        long long v = 0;
        for (std::size_t i = 0; i < rank_; ++i) v += g[i] * rho[i];
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

Rat PLFunction::evaluate(const std::vector<Rat>& rho) const {
    if (rho.size() != rank_) throw std::invalid_argument("evaluation point rank mismatch");
    bool first = true;
    Rat best = 0;
    for (const auto& g : gens_) {
        Rat v = 0;
        for (std::size_t i = 0; i < rank_; ++i) v += g[i] * rho[i];
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

PLFunction trop_add(const PLFunction& f, const PLFunction& g) {
    if (f.rank() != g.rank()) throw std::invalid_argument("tropical sum rank mismatch");
    auto gens = f.generators();
    gens.insert(gens.end(), g.generators().begin(), g.generators().end());
    return PLFunction(f.rank(), std::move(gens));
}

PLFunction trop_mul(const PLFunction& f, const PLFunction& g) {
    if (f.rank() != g.rank()) throw std::invalid_argument("tropical product rank mismatch");
    std::vector<std::vector<long long>> gens;
    for (const auto& a : f.generators())
        for (const auto& b : g.generators()) {
            std::vector<long long> s(f.rank());
            for (std::size_t i = 0; i < f.rank(); ++i) s[i] = a[i] + b[i];
            gens.push_back(std::move(s));
        }
    return PLFunction(f.rank(), std::move(gens));
}

InfinityExtended trop_add(const InfinityExtended& f, const InfinityExtended& g) {
    if (f.is_infinity()) return g;
    if (g.is_infinity()) return f;
    return InfinityExtended::of(trop_add(*f.value, *g.value));
}

InfinityExtended trop_mul(const InfinityExtended& f, const InfinityExtended& g) {
    if (f.is_infinity() || g.is_infinity()) return InfinityExtended::infinity();
    return InfinityExtended::of(trop_mul(*f.value, *g.value));
}

InfinityExtended newton_valuation(const Polynomial& p) {
    if (p.is_zero()) return InfinityExtended::infinity();
    std::vector<std::vector<long long>> gens;
    for (const auto& t : p.terms()) {
        std::vector<long long> e(t.mono.begin(), t.mono.end());
        gens.push_back(std::move(e));
    }
    return InfinityExtended::of(PLFunction(p.ring()->nvars(), std::move(gens)));
}

std::optional<std::vector<long long>> is_linear_on_cone(const PLFunction& f, const Fan& fan,
                                                        std::size_t cone_index) {
    if (f.rank() != fan.dim) throw std::invalid_argument("rank mismatch with fan");
    const auto& cone = fan.cones.at(cone_index);
    for (const auto& m : f.generators()) {
        bool witness = true;
        for (auto ri : cone) {
            long long dot = 0;
            for (std::size_t i = 0; i < f.rank(); ++i) dot += m[i] * fan.rays[ri][i];
            if (dot != f.evaluate(fan.rays[ri])) {
                witness = false;
                break;
            }
        }
        // Equality at every ray pins the minimum on the whole cone, since the
        // function is concave and m bounds it from above.
        if (witness) return m;
    }
    return std::nullopt;
}

Fan linearity_fan(const std::vector<PLFunction>& functions) {
    for (const auto& f : functions)
        if (f.rank() != 2) throw std::invalid_argument("linearity_fan is rank-2 only");

    std::set<Pt> rayset;
    for (const auto& f : functions) {
        const auto& g = f.generators();
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j) {
                long long dx = g[j][0] - g[i][0], dy = g[j][1] - g[i][1];
                Pt perp = primitive2(-dy, dx);
                if (perp[0] == 0 && perp[1] == 0) continue;
                rayset.insert(perp);
                rayset.insert({-perp[0], -perp[1]});
            }
    }
    if (rayset.empty())
        rayset = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

    std::vector<Pt> rays(rayset.begin(), rayset.end());
    auto half = [](const Pt& p) { return (p[1] > 0 || (p[1] == 0 && p[0] > 0)) ? 0 : 1; };
    auto angle_less = [&](const Pt& a, const Pt& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        return cross2(a, b) > 0;
    };
    std::sort(rays.begin(), rays.end(), angle_less);

    // split reflex or straight gaps so that every cone is strongly convex
    bool ok = false;
    while (!ok) {
        ok = true;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const Pt& a = rays[i];
            const Pt& b = rays[(i + 1) % rays.size()];
            bool gap_ok = rays.size() > 1 && cross2(a, b) > 0;
            if (!gap_ok) {
                rays.push_back(primitive2(-a[1], a[0]));  // quarter turn ccw
                std::sort(rays.begin(), rays.end(), angle_less);
                rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
                ok = false;
                break;
            }
        }
    }

    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t i = 0; i < rays.size(); ++i)
        cones.push_back({i, (i + 1) % rays.size()});
    Fan fan = make_fan(2, rays, cones);

    for (const auto& f : functions)
        for (auto ci : maximal_cones(fan))
            if (!is_linear_on_cone(f, fan, ci))
                throw std::logic_error("linearity_fan failed to refine a bend");
    return fan;
}

}  // namespace troptoric
