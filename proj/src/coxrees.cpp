#include "troptoric/coxrees.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace troptoric {

namespace {

std::string rees_variable_name(const std::string& fiber_var) {
    if (fiber_var.size() >= 2 && std::isalpha(static_cast<unsigned char>(fiber_var[0]))) {
        std::string tail = fiber_var.substr(1);
        char head = (fiber_var[0] == 'z' || fiber_var[0] == 'Z') ? 'Z' : 'Y';
        return std::string(1, head) + tail;
    }
    return "Y_" + fiber_var;
}

std::vector<std::string> rees_variable_names(const Ring& fiber) {
    std::vector<std::string> names;
    for (const auto& v : fiber.vars) names.push_back(rees_variable_name(v));
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) {
        names.clear();
        for (std::size_t j = 0; j < fiber.nvars(); ++j)
            names.push_back("Y" + std::to_string(j + 1));
    }
    return names;
}

bool standard_homogeneous(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens)
        if (!g.homogeneous_under(std::vector<long long>(g.ring()->nvars(), 1))) return false;
    return true;
}

std::vector<long long> row_minima_shift(std::vector<std::vector<long long>>& rows) {
    std::vector<long long> shifts;
    for (auto& r : rows) {
        long long mn = r.empty() ? 0 : *std::min_element(r.begin(), r.end());
        for (auto& x : r) x -= mn;
        shifts.push_back(mn);
    }
    return shifts;
}

}  // namespace

std::vector<long long> ReesPresentation::y_degree(std::size_t j) const {
    std::vector<long long> deg(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) deg[i] = used_matrix[i][j];
    return deg;
}

std::vector<Rat> ReesPresentation::s_weight(const std::vector<Rat>& w_on_basis) const {
    if (w_on_basis.size() != d_basis)
        throw std::invalid_argument("s-lift weight length mismatch");
    std::vector<Rat> w(ring->nvars(), Rat(0));
    for (std::size_t j = 0; j < d_basis; ++j) w[y_index(j)] = w_on_basis[j];
    return w;
}

std::vector<Polynomial> ReesPresentation::specialize_all_x(const RingPtr& fiber_ring) const {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n_rows; ++i)
        images.push_back(Polynomial::constant(fiber_ring, 1));
    for (std::size_t j = 0; j < d_basis; ++j)
        images.push_back(Polynomial::variable(fiber_ring, j));
    std::vector<Polynomial> out;
    for (const auto& g : gens) out.push_back(substitute(g, fiber_ring, images));
    return out;
}

ReesPresentation build_rees_kernel(const RingPtr& fiber_ring,
                                   const std::vector<Polynomial>& fiber_ideal,
                                   const std::vector<std::vector<long long>>& rows,
                                   const GroebnerConfig& cfg) {
    std::size_t d = fiber_ring->nvars();
    std::size_t m = rows.size();
    for (const auto& r : rows)
        if (r.size() != d) throw std::invalid_argument("row width mismatch");

    std::vector<std::vector<long long>> norm = rows;
    std::vector<long long> shifts = row_minima_shift(norm);
    bool shifted = false;
    for (auto s : shifts) shifted |= (s != 0);
    if (shifted && !standard_homogeneous(fiber_ideal))
        throw std::invalid_argument(
            "row normalization needs a standard-graded fiber presentation");

    std::vector<std::string> ynames = rees_variable_names(*fiber_ring);

    // Stage A: eliminate the fiber variables from I + (Y_j - f_j t^{col_j}).
    std::vector<Polynomial> stage_a_out;
    RingPtr ring_a;
    {
        std::vector<std::string> vars = fiber_ring->vars;
        for (std::size_t i = 0; i < m; ++i) vars.push_back("t" + std::to_string(i + 1));
        vars.insert(vars.end(), ynames.begin(), ynames.end());
        ring_a = make_ring(vars);
        std::vector<std::size_t> fiber_map(d);
        for (std::size_t j = 0; j < d; ++j) fiber_map[j] = j;
        std::vector<Polynomial> gens;
        for (const auto& g : fiber_ideal) gens.push_back(rename_into(g, ring_a, fiber_map));
        for (std::size_t j = 0; j < d; ++j) {
            Expo e(ring_a->nvars(), 0);
            e[j] = 1;
            for (std::size_t i = 0; i < m; ++i) e[d + i] = static_cast<int>(norm[i][j]);
            Polynomial def = Polynomial::variable(ring_a, d + m + j) -
                             Polynomial::monomial(ring_a, std::move(e));
            gens.push_back(std::move(def));
        }
        std::set<std::size_t> elim;
        for (std::size_t j = 0; j < d; ++j) elim.insert(j);
        stage_a_out = m == 0 && fiber_ideal.empty() ? std::vector<Polynomial>{}
                                                    : eliminate(gens, elim, cfg);
    }

    // Stage B: invert the torus parameters and eliminate them.
    ReesPresentation rp;
    rp.n_rows = m;
    rp.d_basis = d;
    rp.used_matrix = std::move(norm);
    rp.row_shifts = std::move(shifts);
    std::vector<std::string> final_vars;
    for (std::size_t i = 0; i < m; ++i) final_vars.push_back("X" + std::to_string(i + 1));
    final_vars.insert(final_vars.end(), ynames.begin(), ynames.end());
    rp.ring = make_ring(final_vars);

    if (m == 0) {
        std::vector<std::size_t> map_a(ring_a->nvars(), 0);
        for (std::size_t j = 0; j < d; ++j) map_a[d + j] = j;  // Y block only
        for (const auto& g : stage_a_out) rp.gens.push_back(rename_into(g, rp.ring, map_a));
        return rp;
    }

    {
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < m; ++i) vars.push_back("t" + std::to_string(i + 1));
        for (std::size_t i = 0; i < m; ++i) vars.push_back("X" + std::to_string(i + 1));
        vars.insert(vars.end(), ynames.begin(), ynames.end());
        RingPtr ring_b = make_ring(vars);
        // rename stage-A output (t block at offset d, Y block at offset d+m)
        std::vector<std::size_t> map_ab(ring_a->nvars(), 0);
        for (std::size_t i = 0; i < m; ++i) map_ab[d + i] = i;
        for (std::size_t j = 0; j < d; ++j) map_ab[d + m + j] = 2 * m + j;
        std::vector<Polynomial> gens;
        for (const auto& g : stage_a_out) {
            for (const auto& t : g.terms())
                for (std::size_t j = 0; j < d; ++j)
                    if (t.mono[j] != 0)
                        throw std::logic_error("stage A elimination left a fiber variable");
            gens.push_back(rename_into(g, ring_b, map_ab));
        }
        for (std::size_t i = 0; i < m; ++i) {
            Expo e(ring_b->nvars(), 0);
            e[i] = 1;
            e[m + i] = 1;
            gens.push_back(Polynomial::monomial(ring_b, std::move(e)) -
                           Polynomial::constant(ring_b, 1));
        }
        std::set<std::size_t> elim;
        for (std::size_t i = 0; i < m; ++i) elim.insert(i);
        auto out = eliminate(gens, elim, cfg);
        std::vector<std::size_t> map_bf(ring_b->nvars(), 0);
        for (std::size_t i = 0; i < m; ++i) map_bf[m + i] = i;
        for (std::size_t j = 0; j < d; ++j) map_bf[2 * m + j] = m + j;
        for (const auto& g : out) rp.gens.push_back(rename_into(g, rp.ring, map_bf));
    }

    // Every generator must be homogeneous for the diagram grading
    // (deg Y_j = column j, deg X_i = -e_i).
    for (const auto& g : rp.gens) {
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<long long> grading(rp.ring->nvars(), 0);
            grading[i] = -1;
            for (std::size_t j = 0; j < d; ++j)
                grading[rp.y_index(j)] = rp.used_matrix[i][j];
            if (!g.homogeneous_under(grading))
                throw std::logic_error("Rees kernel generator is not diagram-homogeneous");
        }
    }
    return rp;
}

ReesPresentation build_IB(const Diagram& d, const GroebnerConfig& cfg) {
    return build_rees_kernel(d.fiber_ring, d.fiber_ideal, d.matrix, cfg);
}

ReesPresentation build_IB_rows(const Diagram& d, std::size_t rows_used,
                               const GroebnerConfig& cfg) {
    std::vector<std::vector<long long>> rows(d.matrix.begin(),
                                             d.matrix.begin() + rows_used);
    return build_rees_kernel(d.fiber_ring, d.fiber_ideal, rows, cfg);
}

namespace {

// Single content monomial dividing every term, as an exponent vector.
Expo content_monomial(const Polynomial& g) {
    Expo gamma = g.terms()[0].mono;
    for (const auto& t : g.terms())
        for (std::size_t i = 0; i < gamma.size(); ++i)
            gamma[i] = std::min(gamma[i], t.mono[i]);
    return gamma;
}

Polynomial divide_by_monomial(const Polynomial& g, const Expo& gamma) {
    std::vector<Term> ts;
    for (const auto& t : g.terms()) ts.push_back(Term{expo_div(t.mono, gamma), t.coef});
    return Polynomial(g.ring(), std::move(ts));
}

bool is_zero_expo(const Expo& e) {
    for (int x : e)
        if (x != 0) return false;
    return true;
}

// Some variable occurring in exactly one term of g, with exponent 1 there.
bool has_unique_linear_variable(const Polynomial& g) {
    std::size_t n = g.ring()->nvars();
    for (std::size_t v = 0; v < n; ++v) {
        int occurrences = 0;
        bool linear = true;
        for (const auto& t : g.terms()) {
            if (t.mono[v] == 0) continue;
            ++occurrences;
            linear &= (t.mono[v] == 1);
        }
        if (occurrences == 1 && linear) return true;
    }
    return false;
}

// Disjoint-support substitution pattern: every generator is a linear
// combination of monomials with pairwise disjoint supports, each containing
// an exponent-1 variable, and the coefficient row space is monomial-free.
bool disjoint_support_pattern(const std::vector<Polynomial>& gens) {
    std::vector<Expo> monos;
    for (const auto& g : gens)
        for (const auto& t : g.terms()) {
            if (std::find(monos.begin(), monos.end(), t.mono) == monos.end())
                monos.push_back(t.mono);
        }
    std::size_t n = gens[0].ring()->nvars();
    for (std::size_t a = 0; a < monos.size(); ++a) {
        bool unit_exp = false;
        for (std::size_t v = 0; v < n; ++v) unit_exp |= (monos[a][v] == 1);
        if (!unit_exp || is_zero_expo(monos[a])) return false;
        for (std::size_t b = a + 1; b < monos.size(); ++b)
            for (std::size_t v = 0; v < n; ++v)
                if (monos[a][v] > 0 && monos[b][v] > 0) return false;
    }
    RationalMatrix c(gens.size(), monos.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (const auto& t : gens[i].terms()) {
            auto it = std::find(monos.begin(), monos.end(), t.mono);
            c.at(i, static_cast<std::size_t>(it - monos.begin())) = t.coef;
        }
    std::size_t base_rank = rank(c);
    for (std::size_t k = 0; k < monos.size(); ++k) {
        RationalMatrix ext(gens.size() + 1, monos.size());
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < monos.size(); ++j) ext.at(i, j) = c.at(i, j);
        ext.at(gens.size(), k) = 1;
        if (rank(ext) == base_rank) return false;  // e_k in the row space
    }
    return true;
}

struct DecideResult {
    PrimalityVerdict v;
};

PrimalityVerdict decide_patterns(std::vector<Polynomial> g) {
    g.erase(std::remove_if(g.begin(), g.end(), [](const Polynomial& p) { return p.is_zero(); }),
            g.end());
    std::sort(g.begin(), g.end(), [](const Polynomial& a, const Polynomial& b) {
        return format_polynomial(a) < format_polynomial(b);
    });
    g.erase(std::unique(g.begin(), g.end()), g.end());

    PrimalityVerdict out;
    if (g.empty()) {
        out.kind = PrimalityVerdict::Kind::Prime;
        out.reason = "zero ideal in a polynomial ring";
        return out;
    }
    RingPtr ring = g[0].ring();

    // Coordinate generators: quotient them away and recurse.
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].size() != 1) continue;
        const Term& t = g[i].terms()[0];
        int deg = total_degree(t.mono);
        std::size_t var = 0;
        for (std::size_t v = 0; v < t.mono.size(); ++v)
            if (t.mono[v] != 0) var = v;
        if (deg == 1) {
            std::vector<Polynomial> images;
            for (std::size_t v = 0; v < ring->nvars(); ++v)
                images.push_back(v == var ? Polynomial::zero(ring)
                                          : Polynomial::variable(ring, v));
            std::vector<Polynomial> rest;
            for (std::size_t k = 0; k < g.size(); ++k)
                if (k != i) rest.push_back(substitute(g[k], ring, images));
            PrimalityVerdict sub = decide_patterns(std::move(rest));
            if (sub.kind == PrimalityVerdict::Kind::Prime)
                sub.reason = "coordinate quotient: " + sub.reason;
            return sub;
        }
        out.kind = PrimalityVerdict::Kind::NotPrime;
        out.reason = "a generator is a composite monomial";
        Expo e(ring->nvars(), 0);
        e[var] = 1;
        out.witness = {Polynomial::monomial(ring, e),
                       divide_by_monomial(g[i], e).scaled(t.coef >= 0 ? 1 : 1)};
        return out;
    }

    if (g.size() == 1) {
        const Polynomial& f = g[0];
        Expo gamma = content_monomial(f);
        if (!is_zero_expo(gamma)) {
            out.kind = PrimalityVerdict::Kind::NotPrime;
            out.reason = "common monomial factor " +
                         format_polynomial(Polynomial::monomial(ring, gamma));
            out.witness = {Polynomial::monomial(ring, gamma), divide_by_monomial(f, gamma)};
            return out;
        }
        if (f.size() >= 2 && has_unique_linear_variable(f)) {
            out.kind = PrimalityVerdict::Kind::Prime;
            out.reason = "principal: primitive and linear in a variable of its own";
            return out;
        }
    }

    if (disjoint_support_pattern(g)) {
        out.kind = PrimalityVerdict::Kind::Prime;
        out.reason = "disjoint-support image of a monomial-free linear ideal";
        return out;
    }

    out.kind = PrimalityVerdict::Kind::Inconclusive;
    out.reason = "no decision pattern applies";
    return out;
}

}  // namespace

PrimalityVerdict prime_check(const std::vector<Polynomial>& gens,
                             std::optional<std::size_t> extra_var,
                             const GroebnerConfig& cfg) {
    if (gens.empty()) {
        PrimalityVerdict v;
        v.kind = PrimalityVerdict::Kind::Prime;
        v.reason = "zero ideal in a polynomial ring";
        return v;
    }
    RingPtr ring = gens[0].ring();
    std::vector<Polynomial> work = gens;
    std::vector<Polynomial> witness_ideal = gens;
    if (extra_var) {
        witness_ideal.push_back(Polynomial::variable(ring, *extra_var));
        std::vector<Polynomial> images;
        for (std::size_t v = 0; v < ring->nvars(); ++v)
            images.push_back(v == *extra_var ? Polynomial::zero(ring)
                                             : Polynomial::variable(ring, v));
        for (auto& g : work) g = substitute(g, ring, images);
    }
    PrimalityVerdict v = decide_patterns(std::move(work));
    if (v.kind == PrimalityVerdict::Kind::NotPrime && v.witness) {
        GroebnerBasis gb = buchberger(witness_ideal, WeightOrder{}, cfg);
        const auto& [u, w] = *v.witness;
        if (in_ideal(u, gb) || in_ideal(w, gb) || !in_ideal(u * w, gb)) {
            v.kind = PrimalityVerdict::Kind::Inconclusive;
            v.reason = "factor witness failed verification";
            v.witness.reset();
        }
    }
    return v;
}

PrimalityVerdict prime_check_initial(const Diagram& d, const ReesPresentation& rp,
                                     const std::vector<Rat>& w_on_basis,
                                     const GroebnerConfig& cfg) {
    PrimalityVerdict out;
    GroebnerBasis fiber_in = initial_ideal(d.fiber_ideal, w_on_basis, cfg);
    for (const auto& g : fiber_in.gens()) {
        if (g.degree() > 1) {
            out.reason = "degenerate fiber is not linear";
            return out;
        }
    }
    std::vector<std::vector<long long>> rows = rp.used_matrix;
    ReesPresentation degenerate =
        build_rees_kernel(d.fiber_ring, fiber_in.gens(), rows, cfg);
    GroebnerBasis in_rees = buchberger(rp.gens, WeightOrder{rp.s_weight(w_on_basis)}, cfg);
    std::vector<Polynomial> in_forms;
    for (const auto& g : in_rees.gens())
        in_forms.push_back(initial_form(g, rp.s_weight(w_on_basis)));
    if (ideal_equal(in_forms, degenerate.gens, cfg)) {
        out.kind = PrimalityVerdict::Kind::Prime;
        out.reason = "initial ideal equals the Rees kernel over a linear degenerate fiber";
        return out;
    }
    out.reason = "initial ideal differs from the degenerate-fiber Rees kernel";
    return out;
}

HypersurfaceResult hypersurface_check(const Diagram& d) {
    HypersurfaceResult res;
    if (d.fiber_ideal.size() != 1 || d.fiber_ideal[0].degree() != 1 ||
        d.fiber_ideal[0].size() < 2) {
        res.reason = "fiber ideal is not a single linear circuit";
        return res;
    }
    res.applicable = true;
    std::vector<std::size_t> support;
    for (const auto& t : d.fiber_ideal[0].terms())
        for (std::size_t v = 0; v < t.mono.size(); ++v)
            if (t.mono[v] == 1) support.push_back(v);
    std::sort(support.begin(), support.end());

    std::size_t n = d.n_rays();
    auto row_min = [&](std::size_t i) {
        long long mn = d.matrix[i][support[0]];
        for (auto j : support) mn = std::min(mn, d.matrix[i][j]);
        return mn;
    };
    res.pass = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            bool shared = false;
            for (auto j : support)
                if (d.matrix[i][j] == row_min(i) && d.matrix[k][j] == row_min(k)) shared = true;
            if (!shared) {
                res.pass = false;
                res.failing_pairs.push_back({i, k});
            }
        }
    }
    return res;
}

std::optional<std::vector<long long>> sparse_check(const Diagram& d) {
    std::vector<long long> twists;
    for (std::size_t i = 0; i < d.n_rays(); ++i) {
        std::vector<long long> values(d.matrix[i]);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::optional<long long> good;
        for (auto r : values) {
            bool nonneg = true;
            int nonzero = 0;
            for (auto x : d.matrix[i]) {
                if (x - r < 0) nonneg = false;
                if (x - r > 0) ++nonzero;
            }
            if (nonneg && nonzero <= 1) {
                good = r;
                break;
            }
        }
        if (!good) return std::nullopt;
        twists.push_back(*good);
    }
    return twists;
}

UniformResult uniform_check(const Diagram& d) {
    UniformResult res;
    // projective-space fan: rays e_1..e_dim and -(1,...,1)
    std::set<std::vector<long long>> rayset(d.fan.rays.begin(), d.fan.rays.end());
    std::set<std::vector<long long>> expected;
    for (std::size_t i = 0; i < d.fan.dim; ++i) {
        std::vector<long long> e(d.fan.dim, 0);
        e[i] = 1;
        expected.insert(std::move(e));
    }
    expected.insert(std::vector<long long>(d.fan.dim, -1));
    if (rayset != expected) {
        res.reason = "fan is not the projective-space fan";
        return res;
    }
    if (!d.is_bundle()) {
        res.reason = "presentation is not linear";
        return res;
    }
    Matroid m = matroid_of(*d.linear);
    std::size_t dd = d.n_cols(), r = m.rank;
    std::size_t expected_bases = 1;
    for (std::size_t k = 0; k < r; ++k) expected_bases = expected_bases * (dd - k) / (k + 1);
    if (m.bases.size() != expected_bases) {
        res.reason = "column matroid is not uniform";
        return res;
    }
    if (!(dd - r < d.n_rays() - 1)) {
        res.reason = "basis size condition d - r < n - 1 fails";
        return res;
    }
    res.applicable = true;
    res.pass = true;
    for (std::size_t j = 0; j < dd; ++j) {
        bool all_min = true;
        for (std::size_t i = 0; i < d.n_rays(); ++i) {
            long long mn = *std::min_element(d.matrix[i].begin(), d.matrix[i].end());
            if (d.matrix[i][j] != mn) all_min = false;
        }
        if (all_min) res.pass = false;
    }
    return res;
}

namespace {

bool rows_share_apartment(const Diagram& d, const std::vector<std::size_t>& row_indices,
                          const GroebnerConfig& cfg) {
    std::vector<std::vector<Rat>> rows;
    for (auto i : row_indices) rows.push_back(d.row(i));
    if (d.is_bundle()) {
        Matroid m = matroid_of(*d.linear);
        return common_apartment(rows, m).has_value();
    }
    auto lt_of = [&](const std::vector<Polynomial>& gens) {
        GroebnerBasis gb = buchberger(gens, WeightOrder{}, cfg);
        auto lt = gb.leading_monomials();
        std::sort(lt.begin(), lt.end());
        return lt;
    };
    std::vector<Polynomial> chain = d.fiber_ideal;
    for (const auto& w : rows) chain = initial_ideal(chain, w, cfg).gens();
    auto target = lt_of(chain);
    for (const auto& w : rows) {
        std::vector<Polynomial> probe = initial_ideal(d.fiber_ideal, w, cfg).gens();
        for (const auto& u : rows) probe = initial_ideal(probe, u, cfg).gens();
        if (lt_of(probe) != target) return false;
    }
    return true;
}

}  // namespace

MDSReport strong_khovanskii_verdict(const Diagram& d, const GroebnerConfig& cfg) {
    AdaptednessReport adapted = check_adapted(d, cfg);
    if (!adapted.adapted)
        throw std::invalid_argument("diagram is not adapted to its fan");

    MDSReport rep;
    std::vector<std::size_t> all_rows(d.n_rays());
    for (std::size_t i = 0; i < d.n_rays(); ++i) all_rows[i] = i;

    if (rows_share_apartment(d, all_rows, cfg)) {
        rep.overall = MDSReport::Overall::MoriDream;
        rep.certified_by = "split";
        rep.strong_basis = "strong";
        rep.note = "all rows lie in a single apartment; the family splits";
        rep.presentation = build_IB(d, cfg);
        return rep;
    }

    HypersurfaceResult hs = hypersurface_check(d);
    if (hs.applicable) rep.hypersurface = hs;
    if (hs.applicable && hs.pass) {
        rep.overall = MDSReport::Overall::MoriDream;
        rep.certified_by = "hypersurface";
        rep.strong_basis = "strong";
        rep.presentation = build_IB(d, cfg);
        return rep;
    }

    if (!hs.applicable) {
        if (auto twists = sparse_check(d)) {
            rep.overall = MDSReport::Overall::MoriDream;
            rep.certified_by = "sparse";
            rep.strong_basis = "strong";
            rep.sparse_twists = twists;
            return rep;
        }
        UniformResult un = uniform_check(d);
        rep.uniform = un;
        if (un.applicable && un.pass) {
            rep.overall = MDSReport::Overall::MoriDream;
            rep.certified_by = "uniform";
            rep.strong_basis = "strong";
            return rep;
        }
    }

    // General path: per-ray primality of <I_B, X_i>.
    ReesPresentation rp = build_IB(d, cfg);
    bool all_prime = true;
    bool any_not_prime = false;
    for (std::size_t i = 0; i < d.n_rays(); ++i) {
        RowPrimality rc;
        rc.row = i;
        rc.verdict = prime_check(rp.gens, rp.x_index(i), cfg);
        if (rc.verdict.kind == PrimalityVerdict::Kind::Inconclusive) {
            std::vector<Rat> w(rp.d_basis);
            for (std::size_t j = 0; j < rp.d_basis; ++j) w[j] = rp.used_matrix[i][j];
            GroebnerBasis in_gb = buchberger(rp.gens, WeightOrder{rp.s_weight(w)}, cfg);
            std::vector<Polynomial> in_forms;
            for (const auto& g : in_gb.gens())
                in_forms.push_back(initial_form(g, rp.s_weight(w)));
            rc.verdict = prime_check(in_forms, std::nullopt, cfg);
            if (rc.verdict.kind == PrimalityVerdict::Kind::Inconclusive)
                rc.verdict = prime_check_initial(d, rp, w, cfg);
        }
        all_prime &= rc.verdict.kind == PrimalityVerdict::Kind::Prime;
        any_not_prime |= rc.verdict.kind == PrimalityVerdict::Kind::NotPrime;
        rep.row_checks.push_back(std::move(rc));
    }
    rep.presentation = rp;
    if (all_prime) {
        rep.overall = MDSReport::Overall::MoriDream;
        rep.certified_by = "strong-basis";
        rep.strong_basis = "strong";
    } else if (any_not_prime || (hs.applicable && !hs.pass)) {
        rep.overall = MDSReport::Overall::Inconclusive;
        rep.strong_basis = "fails";
        rep.note = "strong basis fails for this basis; extension not attempted";
    } else {
        rep.overall = MDSReport::Overall::Inconclusive;
        rep.strong_basis = "unknown";
        rep.note = "primality undecided within the sound pattern set";
    }
    return rep;
}

namespace {

Polynomial canonical_element(const Polynomial& a, const GroebnerBasis& grev) {
    Polynomial nf = normal_form(a, grev);
    if (nf.is_zero()) return nf;
    BigInt l = 1;
    for (const auto& t : nf.terms()) l = boost::multiprecision::lcm(l, denominator(t.coef));
    BigInt g = 0;
    for (const auto& t : nf.terms())
        g = boost::multiprecision::gcd(g, numerator(t.coef * Rat(l)));
    Rat scale = Rat(l, g);
    Polynomial out = nf.scaled(scale);
    if (out.terms()[0].coef < 0) out = out.scaled(Rat(-1));
    return out;
}

}  // namespace

SubductionResult subduction_extend(const Diagram& d, int degree_cap, int max_adjoins,
                                   const GroebnerConfig& cfg) {
    for (const auto& r : d.matrix)
        for (auto x : r)
            if (x < 0)
                throw std::invalid_argument(
                    "subduction extension requires a nonnegative diagram");

    SubductionResult res;
    RingPtr fiber = d.fiber_ring;
    std::vector<Polynomial> ideal = d.fiber_ideal;
    std::vector<std::vector<long long>> matrix = d.matrix;
    std::optional<LinearPresentation> linear = d.linear;
    std::vector<long long> degrees(fiber->nvars(), 1);
    std::size_t original_vars = fiber->nvars();
    std::size_t n = d.n_rays();
    int adjoined_count = 0;

    auto row_weight = [&](std::size_t i) {
        std::vector<Rat> w(matrix[i].size());
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = matrix[i][j];
        return w;
    };

    // Candidate monomials b^beta at a fixed fiber degree whose valuation
    // columns dominate the twist gamma on the first m rows.
    std::function<void(std::size_t, long long, Expo&, std::vector<Expo>&)> enumerate =
        [&](std::size_t var, long long remaining, Expo& cur, std::vector<Expo>& out) {
            if (var == fiber->nvars()) {
                if (remaining == 0) out.push_back(cur);
                return;
            }
            for (long long e = 0; e * degrees[var] <= remaining; ++e) {
                cur[var] = static_cast<int>(e);
                enumerate(var + 1, remaining - e * degrees[var], cur, out);
            }
            cur[var] = 0;
        };

    for (std::size_t m = 0; m < n; ++m) {
        bool stage_done = false;
        int stage_rounds = 0;
        while (!stage_done) {
            if (++stage_rounds > 64) throw BudgetExceeded("subduction stage loop budget");
            std::vector<std::vector<long long>> head(matrix.begin(), matrix.begin() + m);
            ReesPresentation rp = build_rees_kernel(fiber, ideal, head, cfg);
            std::vector<Rat> w_basis = row_weight(m);
            std::vector<Rat> sw = rp.s_weight(w_basis);
            GroebnerBasis stage_gb = buchberger(rp.gens, WeightOrder{sw}, cfg);
            std::vector<Polynomial> in_forms;
            for (const auto& g : stage_gb.gens()) in_forms.push_back(initial_form(g, sw));
            GroebnerBasis in_gb = buchberger(in_forms, WeightOrder{sw}, cfg);

            GroebnerBasis fiber_in = initial_ideal(ideal, w_basis, cfg);
            ReesPresentation degenerate =
                build_rees_kernel(fiber, fiber_in.gens(), head, cfg);

            // Lift low-degree relations first; their subductions stay small
            // and tend to make higher-degree gaps expressible.
            std::vector<Polynomial> ordered = degenerate.gens;
            std::sort(ordered.begin(), ordered.end(),
                      [](const Polynomial& a, const Polynomial& b) {
                          if (a.degree() != b.degree()) return a.degree() < b.degree();
                          return format_polynomial(a) < format_polynomial(b);
                      });
            std::optional<Polynomial> missing;
            for (const auto& g : ordered)
                if (!in_ideal(g, in_gb)) {
                    missing = g;
                    break;
                }
            if (!missing) {
                stage_done = true;
                break;
            }

            // Lift the missing relation to an actual element of the algebra.
            std::vector<Polynomial> images;
            for (std::size_t i = 0; i < m; ++i)
                images.push_back(Polynomial::constant(fiber, 1));
            for (std::size_t j = 0; j < fiber->nvars(); ++j)
                images.push_back(Polynomial::variable(fiber, j));
            GroebnerBasis grev = buchberger(ideal, WeightOrder{}, cfg);
            Polynomial lift = normal_form(substitute(*missing, fiber, images), grev);
            if (lift.is_zero())
                throw std::logic_error("missing initial relation lifted to zero");

            // twist of the missing relation on the first m rows
            std::vector<long long> gamma(m, 0);
            {
                const Term& t0 = missing->terms()[0];
                for (std::size_t i = 0; i < m; ++i) {
                    long long s = -t0.mono[i];
                    for (std::size_t j = 0; j < fiber->nvars(); ++j)
                        s += static_cast<long long>(rp.used_matrix[i][j]) *
                             t0.mono[rp.y_index(j)];
                    gamma[i] = s;
                }
            }

            std::vector<GroebnerBasis> row_gb;
            for (std::size_t i = 0; i < n; ++i)
                row_gb.push_back(buchberger(ideal, WeightOrder{row_weight(i)}, cfg));

            // Subduction of the initial class of the lift.
            Polynomial a = lift;
            bool adjoined = false;
            int subduction_rounds = 0;
            while (true) {
                if (++subduction_rounds > 256)
                    throw BudgetExceeded("subduction reduction budget");
                long long deg_a = 0;
                {
                    // the lift is homogeneous for the fiber grading
                    Expo e0 = a.terms()[0].mono;
                    for (std::size_t v = 0; v < e0.size(); ++v)
                        deg_a += degrees[v] * e0[v];
                }
                if (deg_a > degree_cap) {
                    res.completed = false;
                    res.extended = make_family_diagram(d.fan, fiber, ideal, matrix);
                    return res;
                }
                ExtRat va = weight_value(a, row_weight(m), row_gb[m]);
                if (va.infinite) break;  // reduced into the ideal: expressible

                std::vector<Expo> candidates;
                Expo cur(fiber->nvars(), 0);
                enumerate(0, deg_a, cur, candidates);
                std::vector<Expo> usable;
                std::vector<Polynomial> inits;
                for (const auto& beta : candidates) {
                    Polynomial mono = Polynomial::monomial(fiber, beta);
                    bool twist_ok = true;
                    for (std::size_t i = 0; i < m && twist_ok; ++i) {
                        ExtRat vi = weight_value(mono, row_weight(i), row_gb[i]);
                        if (vi.infinite || vi.value < Rat(gamma[i])) twist_ok = false;
                    }
                    if (!twist_ok) continue;
                    ExtRat vm = weight_value(mono, row_weight(m), row_gb[m]);
                    if (vm.infinite || !(vm.value == va.value)) continue;
                    usable.push_back(beta);
                    inits.push_back(
                        initial_form(normal_form(mono, row_gb[m]), row_weight(m)));
                }
                Polynomial target = initial_form(normal_form(a, row_gb[m]), row_weight(m));

                // solve target = sum c_beta * inits over the monomial support
                std::vector<Expo> support;
                auto note_support = [&](const Polynomial& p) {
                    for (const auto& t : p.terms())
                        if (std::find(support.begin(), support.end(), t.mono) == support.end())
                            support.push_back(t.mono);
                };
                note_support(target);
                for (const auto& p : inits) note_support(p);
                RationalMatrix sys(support.size(), usable.size());
                std::vector<Rat> rhs(support.size(), Rat(0));
                for (std::size_t r = 0; r < support.size(); ++r) {
                    for (const auto& t : target.terms())
                        if (t.mono == support[r]) rhs[r] = t.coef;
                    for (std::size_t c = 0; c < usable.size(); ++c)
                        for (const auto& t : inits[c].terms())
                            if (t.mono == support[r]) sys.at(r, c) = t.coef;
                }
                auto sol = solve(sys, rhs);
                if (!sol) {
                    // inexpressible: adjoin the element with its full column
                    if (++adjoined_count > max_adjoins)
                        throw BudgetExceeded("subduction adjoin budget");
                    Polynomial e = canonical_element(a, grev);
                    std::vector<long long> column;
                    for (std::size_t i = 0; i < n; ++i) {
                        ExtRat vi = weight_value(e, row_weight(i), row_gb[i]);
                        if (vi.infinite || denominator(vi.value) != 1)
                            throw std::logic_error("non-integral valuation column entry");
                        column.push_back(static_cast<long long>(numerator(vi.value)));
                    }
                    // extend ring, ideal, matrix, presentation
                    std::string zname;
                    for (int k = 1;; ++k) {
                        zname = "z" + std::to_string(k);
                        if (fiber->index_of(zname) < 0) break;
                    }
                    std::vector<std::string> vars = fiber->vars;
                    vars.push_back(zname);
                    RingPtr bigger = make_ring(vars);
                    std::vector<std::size_t> vmap(fiber->nvars());
                    for (std::size_t v = 0; v < fiber->nvars(); ++v) vmap[v] = v;
                    std::vector<Polynomial> new_ideal;
                    for (const auto& gg : ideal)
                        new_ideal.push_back(rename_into(gg, bigger, vmap));
                    new_ideal.push_back(Polynomial::variable(bigger, fiber->nvars()) -
                                        rename_into(e, bigger, vmap));
                    long long deg_e = 0;
                    for (std::size_t v = 0; v < e.terms()[0].mono.size(); ++v)
                        deg_e += degrees[v] * e.terms()[0].mono[v];
                    if (linear && deg_e == 1) {
                        std::vector<Rat> col(linear->columns.rows(), Rat(0));
                        for (const auto& t : e.terms())
                            for (std::size_t v = 0; v < t.mono.size(); ++v)
                                if (t.mono[v] == 1)
                                    for (std::size_t rr = 0; rr < col.size(); ++rr)
                                        col[rr] += t.coef * linear->columns.at(rr, v);
                        RationalMatrix wider(linear->columns.rows(),
                                             linear->columns.cols() + 1);
                        for (std::size_t rr = 0; rr < linear->columns.rows(); ++rr) {
                            for (std::size_t cc = 0; cc < linear->columns.cols(); ++cc)
                                wider.at(rr, cc) = linear->columns.at(rr, cc);
                            wider.at(rr, linear->columns.cols()) = col[rr];
                        }
                        linear->columns = wider;
                    } else {
                        linear.reset();
                    }
                    res.adjoined.push_back(e);
                    res.adjoined_columns.push_back(column);
                    degrees.push_back(deg_e);
                    fiber = bigger;
                    ideal = std::move(new_ideal);
                    for (std::size_t i = 0; i < n; ++i) matrix[i].push_back(column[i]);
                    adjoined = true;
                    break;
                }
                Polynomial correction(fiber);
                for (std::size_t c = 0; c < usable.size(); ++c)
                    if ((*sol)[c] != 0)
                        correction =
                            correction + Polynomial::monomial(fiber, usable[c], (*sol)[c]);
                Polynomial next = normal_form(a - correction, grev);
                ExtRat vnext = weight_value(next, row_weight(m), row_gb[m]);
                if (!vnext.infinite && !(va.value < vnext.value))
                    throw std::logic_error("subduction failed to raise the valuation");
                a = next;
                if (a.is_zero()) break;
            }
            (void)adjoined;  // stage loop re-runs with the extended data either way
        }
    }

    res.completed = true;
    if (linear) {
        res.extended = make_linear_diagram(d.fan, *linear, matrix);
    } else {
        res.extended = make_family_diagram(d.fan, fiber, ideal, matrix);
    }
    return res;
}

AlterResult alter_append_row(const Diagram& d, const std::vector<long long>& w,
                             const Fan& new_fan, const GroebnerConfig& cfg) {
    if (w.size() != d.n_cols()) throw std::invalid_argument("appended row width mismatch");
    std::vector<Rat> wr(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) wr[j] = w[j];

    if (d.is_bundle()) {
        Matroid m = matroid_of(*d.linear);
        if (auto bad = violated_circuit(wr, m))
            throw std::invalid_argument("appended row is not tropical (circuit index " +
                                        std::to_string(*bad) + ")");
    } else {
        for (const auto& f : d.fiber_ideal)
            if (!trop_member_scalar_poly(wr, f))
                throw std::invalid_argument("appended row is not tropical for relation " +
                                            format_polynomial(f));
    }

    ReesPresentation rp = build_IB(d, cfg);
    // normalize the candidate row the same way build_rees_kernel would
    std::vector<Rat> wnorm = wr;
    {
        Rat mn = wnorm[0];
        for (const auto& x : wnorm) mn = std::min(mn, x);
        for (auto& x : wnorm) x -= mn;
    }
    GroebnerBasis in_gb = buchberger(rp.gens, WeightOrder{rp.s_weight(wnorm)}, cfg);
    std::vector<Polynomial> in_forms;
    for (const auto& g : in_gb.gens())
        in_forms.push_back(initial_form(g, rp.s_weight(wnorm)));
    PrimalityVerdict cert = prime_check(in_forms, std::nullopt, cfg);
    if (cert.kind != PrimalityVerdict::Kind::Prime)
        cert = prime_check_initial(d, rp, wnorm, cfg);
    if (cert.kind != PrimalityVerdict::Kind::Prime)
        throw std::invalid_argument(
            "append refused: no prime certificate for the s-lift of the new row (" +
            cert.reason + ")");

    AlterResult out;
    auto matrix = d.matrix;
    matrix.push_back(w);
    if (d.is_bundle())
        out.diagram = make_linear_diagram(new_fan, *d.linear, matrix);
    else
        out.diagram = make_family_diagram(new_fan, d.fiber_ring, d.fiber_ideal, matrix);
    out.adaptedness = check_adapted(out.diagram, cfg);
    if (!out.adaptedness.adapted)
        throw std::invalid_argument("appended diagram is not adapted to the new fan");
    out.append_certificate = cert;
    out.note = "finitely generated: prime-point append onto a finitely generated base";
    return out;
}

AlterResult alter_delete_row(const Diagram& d, std::size_t row, const Fan& new_fan,
                             const GroebnerConfig& cfg) {
    if (row >= d.n_rays()) throw std::invalid_argument("row index out of range");
    std::vector<std::vector<long long>> matrix;
    for (std::size_t i = 0; i < d.n_rays(); ++i)
        if (i != row) matrix.push_back(d.matrix[i]);
    AlterResult out;
    if (d.is_bundle())
        out.diagram = make_linear_diagram(new_fan, *d.linear, matrix);
    else
        out.diagram = make_family_diagram(new_fan, d.fiber_ring, d.fiber_ideal, matrix);
    out.adaptedness = check_adapted(out.diagram, cfg);
    if (!out.adaptedness.adapted)
        throw std::invalid_argument("deleted-row diagram is not adapted to the new fan");
    out.note = "finite generation preserved: quotient of the base section ring";
    return out;
}

std::vector<Polynomial> good_basis(const Diagram& d, const ReesPresentation& rp,
                                   const GroebnerConfig& cfg) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < rp.n_rows; ++i) {
        std::vector<Rat> w(rp.d_basis);
        for (std::size_t j = 0; j < rp.d_basis; ++j) w[j] = rp.used_matrix[i][j];
        GroebnerBasis gb = buchberger(rp.gens, WeightOrder{rp.s_weight(w)}, cfg);
        for (const auto& g : gb.gens())
            if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    // every element's initial form at s(w_i) is its X_i = 0 specialization
    for (const auto& f : out) {
        for (std::size_t i = 0; i < rp.n_rows; ++i) {
            std::vector<Rat> w(rp.d_basis);
            for (std::size_t j = 0; j < rp.d_basis; ++j) w[j] = rp.used_matrix[i][j];
            std::vector<Polynomial> images;
            for (std::size_t v = 0; v < rp.ring->nvars(); ++v)
                images.push_back(v == rp.x_index(i) ? Polynomial::zero(rp.ring)
                                                    : Polynomial::variable(rp.ring, v));
            if (!(initial_form(f, rp.s_weight(w)) == substitute(f, rp.ring, images)))
                throw std::logic_error(
                    "good basis element violates the initial-specialization identity");
        }
    }
    return out;
}

ConeCFResult cone_CF_member(const Diagram& d_ref, const ReesPresentation& rp_ref,
                            const std::vector<Polynomial>& good,
                            const Diagram& d_cand, const GroebnerConfig& cfg) {
    ConeCFResult res;
    if (d_cand.n_cols() != d_ref.n_cols() || d_cand.n_rays() != d_ref.n_rays())
        throw std::invalid_argument("candidate diagram shape mismatch");
    AdaptednessReport rep = check_adapted(d_cand, cfg);
    if (!rep.adapted) throw std::invalid_argument("candidate diagram is not adapted");

    for (std::size_t i = 0; i < d_ref.n_rays(); ++i) {
        std::vector<Rat> wref(rp_ref.d_basis);
        for (std::size_t j = 0; j < rp_ref.d_basis; ++j) wref[j] = rp_ref.used_matrix[i][j];
        std::vector<Rat> wc(d_cand.n_cols());
        long long mn = *std::min_element(d_cand.matrix[i].begin(), d_cand.matrix[i].end());
        for (std::size_t j = 0; j < wc.size(); ++j) wc[j] = d_cand.matrix[i][j] - mn;
        for (const auto& f : good) {
            if (!(initial_form(f, rp_ref.s_weight(wref)) ==
                  initial_form(f, rp_ref.s_weight(wc)))) {
                res.member = false;
                res.violation = "row " + std::to_string(i) + " changes the initial form of " +
                                format_polynomial(f);
                return res;
            }
        }
    }
    res.member = true;
    return res;
}

}  // namespace troptoric
