#include "troptoric/bundles.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace troptoric {

namespace {

std::string subset_name(const std::vector<std::size_t>& s) {
    std::ostringstream os;
    for (auto i : s) os << (i + 1);
    return os.str();
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == m) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// Reduced grevlex leading monomials: the canonical face label used by the
// shared-apartment test for family diagrams.
std::vector<Expo> monomial_initial(const std::vector<Polynomial>& gens,
                                   const GroebnerConfig& cfg) {
    GroebnerBasis gb = buchberger(gens, WeightOrder{}, cfg);
    std::vector<Expo> lt = gb.leading_monomials();
    std::sort(lt.begin(), lt.end());
    return lt;
}

// in_[w_1;..;w_k;tie](I) computed by iterated initial ideals.
std::vector<Polynomial> iterated_initial(std::vector<Polynomial> gens,
                                         const std::vector<std::vector<Rat>>& chain,
                                         const GroebnerConfig& cfg) {
    for (const auto& w : chain) gens = initial_ideal(gens, w, cfg).gens();
    return gens;
}

}  // namespace

std::vector<Rat> Diagram::row(std::size_t i) const {
    std::vector<Rat> r(matrix.at(i).size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = matrix[i][j];
    return r;
}

std::vector<long long> Diagram::column(std::size_t j) const {
    std::vector<long long> c(matrix.size());
    for (std::size_t i = 0; i < matrix.size(); ++i) c[i] = matrix[i].at(j);
    return c;
}

Diagram make_linear_diagram(Fan fan, LinearPresentation pres,
                            std::vector<std::vector<long long>> matrix) {
    Diagram d;
    d.fan = std::move(fan);
    std::size_t cols = pres.size();
    std::vector<std::string> names;
    for (std::size_t j = 0; j < cols; ++j) names.push_back("x" + std::to_string(j + 1));
    d.fiber_ring = make_ring(std::move(names));
    d.fiber_ideal = linear_ideal_generators(pres, d.fiber_ring);
    d.linear = std::move(pres);
    d.matrix = std::move(matrix);
    if (d.matrix.size() != d.fan.rays.size())
        throw std::invalid_argument("diagram row count differs from ray count");
    for (const auto& r : d.matrix)
        if (r.size() != cols) throw std::invalid_argument("diagram column count mismatch");
    return d;
}

Diagram make_family_diagram(Fan fan, RingPtr fiber_ring, std::vector<Polynomial> fiber_ideal,
                            std::vector<std::vector<long long>> matrix) {
    Diagram d;
    d.fan = std::move(fan);
    d.fiber_ring = std::move(fiber_ring);
    d.fiber_ideal = std::move(fiber_ideal);
    d.matrix = std::move(matrix);
    if (d.matrix.size() != d.fan.rays.size())
        throw std::invalid_argument("diagram row count differs from ray count");
    for (const auto& r : d.matrix)
        if (r.size() != d.fiber_ring->nvars())
            throw std::invalid_argument("diagram column count mismatch");
    return d;
}

AdaptednessReport check_adapted(const Diagram& d, const GroebnerConfig& cfg) {
    AdaptednessReport rep;
    std::optional<Matroid> matroid;
    if (d.is_bundle()) matroid = matroid_of(*d.linear);

    for (std::size_t i = 0; i < d.n_rays(); ++i) {
        std::vector<Rat> w = d.row(i);
        if (matroid) {
            if (auto bad = violated_circuit(w, *matroid)) {
                std::ostringstream os;
                os << "row " << i << " violates circuit {";
                const auto& c = matroid->circuits[*bad];
                for (std::size_t k = 0; k < c.support.size(); ++k)
                    os << (k ? "," : "") << c.support[k];
                os << "}";
                rep.tropical_failure = os.str();
                rep.adapted = false;
                return rep;
            }
        } else {
            for (const auto& f : d.fiber_ideal) {
                if (!trop_member_scalar_poly(w, f)) {
                    rep.tropical_failure =
                        "row " + std::to_string(i) + " violates relation " +
                        format_polynomial(f);
                    rep.adapted = false;
                    return rep;
                }
            }
        }
    }

    rep.adapted = true;
    for (auto ci : maximal_cones(d.fan)) {
        ConeVerdict v;
        v.cone_index = ci;
        const auto& cone = d.fan.cones[ci];
        std::vector<std::vector<Rat>> rows;
        for (auto ray : cone) rows.push_back(d.row(ray));
        if (matroid) {
            auto basis = common_apartment(rows, *matroid);
            v.adapted = basis.has_value();
            v.apartment_basis = basis;
            if (!v.adapted) v.detail = "no matroid basis cone contains all rows";
        } else {
            // Candidate maximal Groebner cone: refine by the rows in order,
            // then the tie-break; every row must refine to the same
            // monomial initial ideal.
            auto target = monomial_initial(iterated_initial(d.fiber_ideal, rows, cfg), cfg);
            v.adapted = true;
            for (std::size_t k = 0; k < rows.size() && v.adapted; ++k) {
                auto probe = monomial_initial(
                    iterated_initial(initial_ideal(d.fiber_ideal, rows[k], cfg).gens(),
                                     rows, cfg),
                    cfg);
                if (probe != target) {
                    v.adapted = false;
                    v.detail = "row " + std::to_string(cone[k]) +
                               " leaves the shared Groebner cone";
                }
            }
        }
        if (!v.adapted) rep.adapted = false;
        rep.cones.push_back(std::move(v));
    }
    return rep;
}

std::vector<Rat> weight_at_point(const Diagram& d, const std::vector<Rat>& rho,
                                 const GroebnerConfig& cfg) {
    auto ci = containing_maximal_cone(d.fan, rho);
    if (!ci) throw std::invalid_argument("point outside the fan support");
    auto lambda = barycentric_coordinates(d.fan, *ci, rho);
    const auto& cone = d.fan.cones[*ci];
    std::vector<Rat> u(d.n_cols(), Rat(0));
    for (std::size_t k = 0; k < cone.size(); ++k) {
        if ((*lambda)[k] == 0) continue;
        for (std::size_t j = 0; j < d.n_cols(); ++j)
            u[j] += (*lambda)[k] * Rat(d.matrix[cone[k]][j]);
    }
    if (d.is_bundle()) {
        Matroid m = matroid_of(*d.linear);
        std::vector<std::vector<Rat>> rows;
        for (auto ray : cone) rows.push_back(d.row(ray));
        auto basis = common_apartment(rows, m);
        if (!basis) throw std::invalid_argument("diagram not adapted on the containing cone");
        std::vector<Rat> out(d.n_cols());
        for (std::size_t j = 0; j < d.n_cols(); ++j) {
            if (std::binary_search(basis->begin(), basis->end(), j)) {
                out[j] = u[j];
                continue;
            }
            Circuit c = fundamental_circuit(m, j, *basis);
            std::optional<Rat> best;
            for (auto i : c.support) {
                if (i == j) continue;
                if (!best || u[i] < *best) best = u[i];
            }
            out[j] = *best;
        }
        return out;
    }
    return iota(u, d.fiber_ideal, cfg);
}

Subspace klyachko_space(const Diagram& d, std::size_t ray_index, long long level) {
    if (!d.is_bundle())
        throw std::invalid_argument("Klyachko spaces need a linear presentation");
    Matroid m = matroid_of(*d.linear);
    auto basis = common_apartment({d.row(ray_index)}, m);
    if (!basis) throw std::invalid_argument("row lies in no basis cone");
    std::vector<std::vector<Rat>> gens;
    for (auto j : *basis)
        if (d.matrix[ray_index][j] >= level) gens.push_back(d.linear->column(j));
    std::size_t ambient = d.linear->ambient();
    if (gens.empty()) return Subspace(ambient);
    return Subspace(ambient, RationalMatrix::from_rows(gens));
}

Subspace f_psi(const Diagram& d, const CartierData& psi) {
    if (psi.ray_values.size() != d.n_rays())
        throw std::invalid_argument("Cartier data length mismatch");
    std::vector<Subspace> pieces;
    for (std::size_t i = 0; i < d.n_rays(); ++i)
        pieces.push_back(klyachko_space(d, i, psi.ray_values[i]));
    return intersect(pieces);
}

RingPtr pluecker_ring(std::size_t n, std::size_t m) {
    std::vector<std::string> names;
    for (const auto& s : subsets_of_size(n, m)) names.push_back("p" + subset_name(s));
    return make_ring(std::move(names));
}

std::vector<Polynomial> pluecker_three_term_relations(std::size_t n, std::size_t m,
                                                      const RingPtr& ring) {
    auto subsets = subsets_of_size(n, m);
    auto index_of = [&](std::vector<std::size_t> s) {
        std::sort(s.begin(), s.end());
        auto it = std::find(subsets.begin(), subsets.end(), s);
        return static_cast<std::size_t>(it - subsets.begin());
    };
    std::vector<Polynomial> rels;
    if (m < 1) return rels;
    auto ss = subsets_of_size(n, m - 2);  // fixed part S
    for (const auto& s : ss) {
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < n; ++i)
            if (!std::binary_search(s.begin(), s.end(), i)) rest.push_back(i);
        for (const auto& q : subsets_of_size(rest.size(), 4)) {
            std::size_t a = rest[q[0]], b = rest[q[1]], c = rest[q[2]], e = rest[q[3]];
            auto join = [&](std::size_t u, std::size_t v) {
                std::vector<std::size_t> t = s;
                t.push_back(u);
                t.push_back(v);
                return index_of(std::move(t));
            };
            auto mono = [&](std::size_t i1, std::size_t i2) {
                Expo ex(ring->nvars(), 0);
                ex[i1] += 1;
                ex[i2] += 1;
                return ex;
            };
            std::vector<Term> ts;
            ts.push_back({mono(join(a, b), join(c, e)), Rat(1)});
            ts.push_back({mono(join(a, c), join(b, e)), Rat(-1)});
            ts.push_back({mono(join(a, e), join(b, c)), Rat(1)});
            rels.emplace_back(ring, std::move(ts));
        }
    }
    return rels;
}

SkeletonBundle skeleton_bundle(const std::vector<std::vector<long long>>& points,
                               std::size_t m, std::uint64_t seed, int retry_budget) {
    std::size_t n = points.size();
    if (m == 0 || m > n) throw std::invalid_argument("skeleton rank out of range");
    std::size_t ambient = points.empty() ? 0 : points[0].size();
    for (const auto& p : points)
        if (p.size() != ambient) throw std::invalid_argument("ragged point list");

    SkeletonBundle out;
    out.subsets = subsets_of_size(n, m);

    // Genericity certificate: random lower rows must make every (m-1)-minor
    // coefficient of every subset nonzero; redraw within budget.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(-1000, 1000);
    bool certified = false;
    for (int attempt = 0; attempt < retry_budget && !certified; ++attempt) {
        RationalMatrix lower(m - 1, n);
        for (std::size_t i = 0; i + 1 < m; ++i)
            for (std::size_t j = 0; j < n; ++j) lower.at(i, j) = dist(rng);
        certified = true;
        for (const auto& s : out.subsets) {
            for (std::size_t drop = 0; drop < s.size() && certified; ++drop) {
                std::vector<std::size_t> cols;
                for (std::size_t k = 0; k < s.size(); ++k)
                    if (k != drop) cols.push_back(s[k]);
                RationalMatrix sub(m - 1, m - 1);
                for (std::size_t i = 0; i + 1 < m; ++i)
                    for (std::size_t j = 0; j < cols.size(); ++j)
                        sub.at(i, j) = lower.at(i, cols[j]);
                if (rank(sub) != sub.rows()) certified = false;  // vanishing minor
            }
        }
    }
    if (!certified)
        throw std::runtime_error("degenerate randomness: minor certificate failed in budget");

    for (const auto& s : out.subsets) {
        std::vector<std::vector<long long>> gens;
        for (auto i : s) gens.push_back(points[i]);
        out.functions.emplace_back(ambient, std::move(gens));
    }
    return out;
}

std::vector<PLFunction> kernel_bundle(const std::vector<Polynomial>& lambda,
                                      const RationalMatrix& circuit_matrix) {
    if (lambda.empty()) throw std::invalid_argument("empty tuple");
    if (circuit_matrix.cols() != lambda.size())
        throw std::invalid_argument("circuit matrix width mismatch");
    RingPtr ring = lambda[0].ring();
    for (std::size_t r = 0; r < circuit_matrix.rows(); ++r) {
        Polynomial acc(ring);
        for (std::size_t j = 0; j < lambda.size(); ++j)
            acc = acc + lambda[j].scaled(circuit_matrix.at(r, j));
        if (!acc.is_zero())
            throw std::invalid_argument("tuple is not in the kernel of the circuit matrix");
    }
    std::vector<PLFunction> out;
    for (const auto& l : lambda) {
        auto v = newton_valuation(l);
        if (v.is_infinity())
            throw std::invalid_argument("zero entry in kernel tuple");
        out.push_back(*v.value);
    }
    return out;
}

namespace {

Diagram diagram_from_pl_impl(const Fan& fan, const std::vector<PLFunction>& phi,
                             Diagram base) {
    for (auto ci : maximal_cones(fan))
        for (std::size_t j = 0; j < phi.size(); ++j)
            if (!is_linear_on_cone(phi[j], fan, ci)) {
                std::ostringstream os;
                os << "function " << j << " is not linear on maximal cone index " << ci
                   << " (the fan is too coarse)";
                throw std::invalid_argument(os.str());
            }
    std::vector<std::vector<long long>> matrix;
    for (const auto& ray : fan.rays) {
        std::vector<long long> row;
        for (const auto& f : phi) row.push_back(f.evaluate(ray));
        matrix.push_back(std::move(row));
    }
    base.matrix = std::move(matrix);
    return base;
}

}  // namespace

Diagram diagram_from_pl(const Fan& fan, const std::vector<PLFunction>& phi,
                        const LinearPresentation& pres) {
    Diagram d = make_linear_diagram(fan, pres,
                                    std::vector<std::vector<long long>>(
                                        fan.rays.size(),
                                        std::vector<long long>(pres.size(), 0)));
    return diagram_from_pl_impl(fan, phi, std::move(d));
}

Diagram diagram_from_pl(const Fan& fan, const std::vector<PLFunction>& phi,
                        const RingPtr& fiber_ring, const std::vector<Polynomial>& fiber_ideal) {
    Diagram d = make_family_diagram(fan, fiber_ring, fiber_ideal,
                                    std::vector<std::vector<long long>>(
                                        fan.rays.size(),
                                        std::vector<long long>(fiber_ring->nvars(), 0)));
    return diagram_from_pl_impl(fan, phi, std::move(d));
}

}  // namespace troptoric
