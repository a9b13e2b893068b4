#include "troptoric/groebner.hpp"

#include "troptoric/exactalg.hpp"
#include "troptoric/simplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace troptoric {

namespace {

// Internal order: the public min-convention weight order, or a block
// elimination order (max convention) used by eliminate().
struct OrderFn {
    enum class Kind { MinWeight, Elim };
    Kind kind = Kind::MinWeight;
    WeightOrder w;
    std::vector<char> elim;

    bool leads(const Expo& a, const Expo& b) const {
        if (kind == Kind::Elim) {
            int da = 0, db = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (elim[i]) {
                    da += a[i];
                    db += b[i];
                }
            }
            if (da != db) return da > db;
            return grevlex_greater(a, b);
        }
        return w.leads(a, b);
    }
};

std::size_t leading_index(const Polynomial& p, const OrderFn& ord) {
    const auto& ts = p.terms();
    std::size_t best = 0;
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (ord.leads(ts[i].mono, ts[best].mono)) best = i;
    return best;
}

const Term& leading_term(const Polynomial& p, const OrderFn& ord) {
    return p.terms()[leading_index(p, ord)];
}

// Full division: every term of p is reduced against the basis.
Polynomial core_nf(Polynomial p, const std::vector<Polynomial>& basis,
                   const std::vector<Expo>& leads, const OrderFn& ord) {
    Polynomial rem(p.ring());
    while (!p.is_zero()) {
        const Term lt = leading_term(p, ord);
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (!expo_divides(leads[k], lt.mono)) continue;
            const Rat lc = leading_term(basis[k], ord).coef;
            p = p - basis[k].mul_term(expo_div(lt.mono, leads[k]), lt.coef / lc);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem = rem + Polynomial::monomial(p.ring(), lt.mono, lt.coef);
            p = p - Polynomial::monomial(p.ring(), lt.mono, lt.coef);
        }
    }
    return rem;
}

Polynomial s_poly(const Polynomial& f, const Polynomial& g, const Expo& lf, const Expo& lg,
                  const OrderFn& ord) {
    Expo l = expo_lcm(lf, lg);
    const Rat cf = leading_term(f, ord).coef;
    const Rat cg = leading_term(g, ord).coef;
    return f.mul_term(expo_div(l, lf), Rat(1) / cf) - g.mul_term(expo_div(l, lg), Rat(1) / cg);
}

struct PairKey {
    int deg;
    std::size_t i, j;
    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

std::vector<Polynomial> core_buchberger(std::vector<Polynomial> basis, const OrderFn& ord,
                                        const GroebnerConfig& cfg) {
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const Polynomial& p) { return p.is_zero(); }),
                basis.end());
    if (basis.empty()) return basis;
    RingPtr ring = basis[0].ring();

    std::vector<Expo> leads;
    for (const auto& p : basis) leads.push_back(leading_term(p, ord).mono);

    std::set<PairKey> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_set;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        Expo l = expo_lcm(leads[i], leads[j]);
        pending.insert(PairKey{total_degree(l), i, j});
        pending_set.insert({i, j});
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    std::size_t processed = 0;
    while (!pending.empty()) {
        auto it = pending.begin();
        PairKey key = *it;
        pending.erase(it);
        pending_set.erase({key.i, key.j});
        if (++processed > cfg.max_pairs)
            throw BudgetExceeded("Groebner S-pair budget exceeded");

        const Expo &li = leads[key.i], &lj = leads[key.j];
        if (expo_coprime(li, lj)) continue;
        Expo l = expo_lcm(li, lj);
        // Chain criterion: some other leading monomial divides the lcm and
        // both companion pairs have already been handled.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == key.i || k == key.j) continue;
            if (!expo_divides(leads[k], l)) continue;
            auto p1 = std::minmax(key.i, k);
            auto p2 = std::minmax(key.j, k);
            if (!pending_set.count({p1.first, p1.second}) &&
                !pending_set.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial s = s_poly(basis[key.i], basis[key.j], li, lj, ord);
        Polynomial r = core_nf(std::move(s), basis, leads, ord);
        if (r.is_zero()) continue;
        if (basis.size() + 1 > cfg.max_basis)
            throw BudgetExceeded("Groebner basis size budget exceeded");
        const Rat lc = leading_term(r, ord).coef;
        basis.push_back(r.scaled(Rat(1) / lc));
        leads.push_back(leading_term(basis.back(), ord).mono);
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) push_pair(i, basis.size() - 1);
    }

    // Minimalize, then tail-reduce into the unique reduced basis.
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (expo_divides(leads[j], leads[i]) &&
                (leads[j] != leads[i] || j < i))
                keep[i] = 0;
        }
    }
    std::vector<Polynomial> minimal;
    std::vector<Expo> min_leads;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!keep[i]) continue;
        minimal.push_back(basis[i]);
        min_leads.push_back(leads[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        std::vector<Expo> other_leads;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j == i) continue;
            others.push_back(minimal[j]);
            other_leads.push_back(min_leads[j]);
        }
        Polynomial r = others.empty() ? minimal[i] : core_nf(minimal[i], others, other_leads, ord);
        const Rat lc = leading_term(r, ord).coef;
        reduced.push_back(r.scaled(Rat(1) / lc));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.leads(leading_term(a, ord).mono, leading_term(b, ord).mono);
    });
    return reduced;
}

std::vector<Polynomial> split_homogeneous(const Polynomial& f,
                                          const std::vector<long long>& grading) {
    std::map<long long, std::vector<Term>> parts;
    for (const auto& t : f.terms()) {
        long long d = 0;
        for (std::size_t i = 0; i < t.mono.size(); ++i) d += grading[i] * t.mono[i];
        parts[d].push_back(t);
    }
    std::vector<Polynomial> out;
    for (auto& [d, ts] : parts) out.emplace_back(f.ring(), std::move(ts));
    return out;
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> gens, WeightOrder order,
                             std::vector<long long> grading)
    : gens_(std::move(gens)), order_(std::move(order)), grading_(std::move(grading)) {
    OrderFn ord{OrderFn::Kind::MinWeight, order_, {}};
    for (const auto& g : gens_) leads_.push_back(leading_term(g, ord).mono);
}

std::optional<std::vector<long long>> find_positive_grading(
    const RingPtr& ring, const std::vector<Polynomial>& gens) {
    std::size_t n = ring->nvars();
    std::vector<std::vector<Rat>> diffs;
    for (const auto& g : gens) {
        if (g.terms().size() <= 1) continue;
        const Expo& a0 = g.terms()[0].mono;
        for (std::size_t k = 1; k < g.terms().size(); ++k) {
            std::vector<Rat> d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = g.terms()[k].mono[i] - a0[i];
            diffs.push_back(std::move(d));
        }
    }
    std::vector<long long> ones(n, 1);
    bool ones_ok = true;
    for (const auto& d : diffs) {
        Rat s = 0;
        for (const auto& x : d) s += x;
        if (s != 0) {
            ones_ok = false;
            break;
        }
    }
    if (ones_ok) return ones;

    Subspace k = kernel(RationalMatrix::from_rows(diffs));
    std::size_t s = k.dim();
    if (s == 0) return std::nullopt;
    // lambda = K^T c with lambda_i >= 1; write c = p - q, slack u >= 0.
    RationalMatrix a(n, 2 * s + n);
    std::vector<Rat> b(n, Rat(1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            a.at(i, j) = k.basis().at(j, i);
            a.at(i, s + j) = -k.basis().at(j, i);
        }
        a.at(i, 2 * s + i) = -1;
    }
    auto x = lp_feasible_point(a, b);
    if (!x) return std::nullopt;
    std::vector<Rat> lambda(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < s; ++j)
            lambda[i] += ((*x)[j] - (*x)[s + j]) * k.basis().at(j, i);
    BigInt l = 1;
    for (const auto& r : lambda) l = boost::multiprecision::lcm(l, denominator(r));
    std::vector<long long> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<long long>(BigInt(numerator(lambda[i]) * (l / denominator(lambda[i]))));
    return out;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const WeightOrder& ord,
                         const GroebnerConfig& cfg) {
    std::vector<Polynomial> in;
    for (const auto& g : gens)
        if (!g.is_zero()) in.push_back(g);
    if (in.empty()) return GroebnerBasis({}, ord, {});
    RingPtr ring = in[0].ring();
    for (const auto& g : in) {
        if (g.ring()->vars != ring->vars)
            throw std::invalid_argument("generators from different rings");
        for (const auto& t : g.terms())
            for (int e : t.mono)
                if (e < 0) throw std::invalid_argument("Laurent input to Groebner engine");
    }

    std::vector<long long> grading(ring->nvars(), 1);
    if (!ord.is_trivial()) {
        auto g = find_positive_grading(ring, in);
        if (!g)
            throw std::invalid_argument(
                "weight order requires an ideal homogeneous under a positive grading");
        grading = *g;
    }
    OrderFn fn{OrderFn::Kind::MinWeight, ord, {}};
    auto reduced = core_buchberger(std::move(in), fn, cfg);
    return GroebnerBasis(std::move(reduced), ord, std::move(grading));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (gb.empty() || f.is_zero()) return f;
    OrderFn ord{OrderFn::Kind::MinWeight, gb.order(), {}};
    if (gb.order().is_trivial())
        return core_nf(f, gb.gens(), gb.leading_monomials(), ord);
    Polynomial acc(f.ring());
    for (const auto& comp : split_homogeneous(f, gb.grading()))
        acc = acc + core_nf(comp, gb.gens(), gb.leading_monomials(), ord);
    return acc;
}

bool in_ideal(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

Polynomial initial_form(const Polynomial& f, const std::vector<Rat>& w) {
    if (f.is_zero()) return f;
    WeightOrder ord{w};
    std::optional<Rat> best;
    for (const auto& t : f.terms()) {
        Rat v = ord.weight_of(t.mono);
        if (!best || v < *best) best = v;
    }
    std::vector<Term> keep;
    for (const auto& t : f.terms())
        if (ord.weight_of(t.mono) == *best) keep.push_back(t);
    return Polynomial(f.ring(), std::move(keep));
}

GroebnerBasis initial_ideal(const std::vector<Polynomial>& gens, const std::vector<Rat>& w,
                            const GroebnerConfig& cfg) {
    GroebnerBasis gb = buchberger(gens, WeightOrder{w}, cfg);
    std::vector<Polynomial> in_forms;
    for (const auto& g : gb.gens()) in_forms.push_back(initial_form(g, w));
    return GroebnerBasis(std::move(in_forms), WeightOrder{w}, gb.grading());
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::set<std::size_t>& vars,
                                  const GroebnerConfig& cfg) {
    std::vector<Polynomial> in;
    for (const auto& g : gens)
        if (!g.is_zero()) in.push_back(g);
    if (in.empty()) return in;
    RingPtr ring = in[0].ring();
    for (const auto& g : in)
        for (const auto& t : g.terms())
            for (int e : t.mono)
                if (e < 0) throw std::invalid_argument("Laurent input to eliminate");
    OrderFn fn{OrderFn::Kind::Elim, {}, std::vector<char>(ring->nvars(), 0)};
    for (auto v : vars) fn.elim[v] = 1;
    auto gb = core_buchberger(std::move(in), fn, cfg);
    std::vector<Polynomial> out;
    for (const auto& g : gb) {
        bool free = true;
        for (const auto& t : g.terms())
            for (auto v : vars)
                if (t.mono[v] != 0) free = false;
        if (free) out.push_back(g);
    }
    return out;
}

bool in_closed_groebner_cone(const std::vector<Rat>& w, const GroebnerBasis& gb) {
    WeightOrder probe{w};
    for (std::size_t k = 0; k < gb.gens().size(); ++k) {
        Rat lead_w = probe.weight_of(gb.leading_monomials()[k]);
        for (const auto& t : gb.gens()[k].terms())
            if (probe.weight_of(t.mono) < lead_w) return false;
    }
    return true;
}

ExtRat weight_value(const Polynomial& f, const std::vector<Rat>& w, const GroebnerBasis& gb) {
    if (!in_closed_groebner_cone(w, gb))
        throw std::invalid_argument("weight outside the closed Groebner cone of the basis");
    Polynomial nf = normal_form(f, gb);
    if (nf.is_zero()) return ExtRat::infinity();
    WeightOrder probe{w};
    std::optional<Rat> best;
    for (const auto& t : nf.terms()) {
        Rat v = probe.weight_of(t.mono);
        if (!best || v < *best) best = v;
    }
    return ExtRat::of(*best);
}

std::vector<Rat> iota(const std::vector<Rat>& w, const std::vector<Polynomial>& gens,
                      const GroebnerConfig& cfg) {
    if (gens.empty()) throw std::invalid_argument("iota needs a presented ideal");
    RingPtr ring = gens[0].ring();
    GroebnerBasis gb = buchberger(gens, WeightOrder{w}, cfg);
    std::vector<Rat> out;
    out.reserve(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        ExtRat v = weight_value(Polynomial::variable(ring, i), w, gb);
        if (v.infinite)
            throw std::invalid_argument("iota undefined: a generator class is zero");
        out.push_back(v.value);
    }
    return out;
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const GroebnerConfig& cfg) {
    std::vector<Polynomial> na, nb;
    for (const auto& f : a)
        if (!f.is_zero()) na.push_back(f);
    for (const auto& f : b)
        if (!f.is_zero()) nb.push_back(f);
    if (na.empty() || nb.empty()) return na.empty() && nb.empty();
    GroebnerBasis ga = buchberger(na, WeightOrder{}, cfg);
    for (const auto& f : nb)
        if (!in_ideal(f, ga)) return false;
    GroebnerBasis gbb = buchberger(nb, WeightOrder{}, cfg);
    for (const auto& f : na)
        if (!in_ideal(f, gbb)) return false;
    return true;
}

}  // namespace troptoric
