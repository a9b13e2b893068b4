#include "troptoric/troplinear.hpp"

#include "troptoric/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace troptoric {

std::vector<Rat> LinearPresentation::column(std::size_t j) const {
    std::vector<Rat> c(columns.rows());
    for (std::size_t i = 0; i < columns.rows(); ++i) c[i] = columns.at(i, j);
    return c;
}

namespace {

RationalMatrix submatrix_cols(const RationalMatrix& m, const std::vector<std::size_t>& cols) {
    RationalMatrix s(m.rows(), cols.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(i, cols[j]);
    return s;
}

}  // namespace

Matroid matroid_of(const LinearPresentation& p, std::size_t max_ground) {
    std::size_t d = p.size();
    if (d > max_ground)
        throw BudgetExceeded("matroid ground set exceeds enumeration budget");
    Matroid m;
    m.presentation = p;
    m.rank = rank(p.columns);

    for (std::size_t mask = 1; mask < (1u << d); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t b = 0; b < d; ++b)
            if (mask & (1u << b)) s.push_back(b);
        Subspace k = kernel(submatrix_cols(p.columns, s));
        // minimal dependent iff the kernel is a line with full support
        if (k.dim() != 1) continue;
        bool full = true;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (k.basis().at(0, j) == 0) full = false;
        if (!full) continue;
        Circuit c;
        c.support = s;
        c.coeffs.resize(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) c.coeffs[j] = k.basis().at(0, j);
        m.circuits.push_back(std::move(c));
    }
    std::sort(m.circuits.begin(), m.circuits.end(),
              [](const Circuit& a, const Circuit& b) {
                  if (a.support.size() != b.support.size())
                      return a.support.size() < b.support.size();
                  return a.support < b.support;
              });

    // bases: rank-size subsets with independent columns, lex order
    std::vector<std::size_t> idx(m.rank);
    if (m.rank > 0 && m.rank <= d) {
        for (std::size_t mask = 1; mask < (1u << d); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != m.rank) continue;
            std::vector<std::size_t> s;
            for (std::size_t b = 0; b < d; ++b)
                if (mask & (1u << b)) s.push_back(b);
            if (rank(submatrix_cols(p.columns, s)) == m.rank) m.bases.push_back(s);
        }
    }
    std::sort(m.bases.begin(), m.bases.end());
    return m;
}

Circuit fundamental_circuit(const Matroid& m, std::size_t j,
                            const std::vector<std::size_t>& basis) {
    if (std::binary_search(basis.begin(), basis.end(), j))
        throw std::invalid_argument("element already in the basis");
    auto sol = solve(submatrix_cols(m.presentation.columns, basis), m.presentation.column(j));
    if (!sol) throw std::invalid_argument("fundamental circuit: not a spanning basis");
    // b_j - sum sol_i b_{basis_i} = 0
    Circuit c;
    std::vector<std::pair<std::size_t, Rat>> entries;
    entries.push_back({j, Rat(1)});
    for (std::size_t i = 0; i < basis.size(); ++i)
        if ((*sol)[i] != 0) entries.push_back({basis[i], -(*sol)[i]});
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [s, v] : entries) {
        c.support.push_back(s);
        c.coeffs.push_back(v);
    }
    return c;
}

bool trop_member_scalar(const std::vector<Rat>& w, const Matroid& m) {
    return !violated_circuit(w, m).has_value();
}

std::optional<std::size_t> violated_circuit(const std::vector<Rat>& w, const Matroid& m) {
    if (w.size() != m.presentation.size())
        throw std::invalid_argument("weight length mismatch");
    for (std::size_t ci = 0; ci < m.circuits.size(); ++ci) {
        const auto& c = m.circuits[ci];
        Rat best = w[c.support[0]];
        for (auto s : c.support) best = std::min(best, w[s]);
        int hits = 0;
        for (auto s : c.support)
            if (w[s] == best) ++hits;
        if (hits < 2) return ci;
    }
    return std::nullopt;
}

bool trop_member_pl(const std::vector<PLFunction>& psi, const Matroid& m) {
    if (psi.size() != m.presentation.size())
        throw std::invalid_argument("tuple length mismatch");
    for (const auto& c : m.circuits) {
        PLFunction all = psi[c.support[0]];
        for (std::size_t k = 1; k < c.support.size(); ++k)
            all = trop_add(all, psi[c.support[k]]);
        for (auto j : c.support) {
            std::optional<PLFunction> dropped;
            for (auto i : c.support) {
                if (i == j) continue;
                dropped = dropped ? trop_add(*dropped, psi[i]) : psi[i];
            }
            if (!dropped || !(*dropped == all)) return false;
        }
    }
    return true;
}

bool trop_member_pl_poly(const std::vector<PLFunction>& psi, const Polynomial& f) {
    if (f.is_zero()) return true;
    if (psi.size() != f.ring()->nvars())
        throw std::invalid_argument("tuple length mismatch");
    std::vector<PLFunction> evs;
    for (const auto& t : f.terms()) {
        std::optional<PLFunction> ev;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (t.mono[i] < 0) throw std::invalid_argument("negative exponent in bending check");
            for (int k = 0; k < t.mono[i]; ++k)
                ev = ev ? trop_mul(*ev, psi[i]) : psi[i];
        }
        if (!ev) ev = PLFunction(psi[0].rank(),
                                 {std::vector<long long>(psi[0].rank(), 0)});
        evs.push_back(*ev);
    }
    if (evs.size() < 2) return false;  // a single term can never bend
    PLFunction all = evs[0];
    for (std::size_t k = 1; k < evs.size(); ++k) all = trop_add(all, evs[k]);
    for (std::size_t drop = 0; drop < evs.size(); ++drop) {
        std::optional<PLFunction> rest;
        for (std::size_t k = 0; k < evs.size(); ++k) {
            if (k == drop) continue;
            rest = rest ? trop_add(*rest, evs[k]) : evs[k];
        }
        if (!(*rest == all)) return false;
    }
    return true;
}

bool trop_member_scalar_poly(const std::vector<Rat>& w, const Polynomial& f) {
    if (f.is_zero()) return true;
    WeightOrder probe{w};
    std::optional<Rat> best;
    for (const auto& t : f.terms()) {
        Rat v = probe.weight_of(t.mono);
        if (!best || v < *best) best = v;
    }
    int hits = 0;
    for (const auto& t : f.terms())
        if (probe.weight_of(t.mono) == *best) ++hits;
    return hits >= 2;
}

bool in_closed_basis_cone(const std::vector<Rat>& w, const std::vector<std::size_t>& basis,
                          const Matroid& m) {
    for (std::size_t j = 0; j < m.presentation.size(); ++j) {
        if (std::binary_search(basis.begin(), basis.end(), j)) continue;
        Circuit c = fundamental_circuit(m, j, basis);
        for (auto i : c.support)
            if (i != j && w[j] > w[i]) return false;
    }
    return true;
}

std::optional<std::vector<std::size_t>> common_apartment(
    const std::vector<std::vector<Rat>>& rows, const Matroid& m) {
    for (const auto& w : rows)
        if (auto bad = violated_circuit(w, m))
            throw std::invalid_argument("non-tropical row (violated circuit index " +
                                        std::to_string(*bad) + ")");
    for (const auto& b : m.bases) {
        bool all = true;
        for (const auto& w : rows)
            if (!in_closed_basis_cone(w, b, m)) {
                all = false;
                break;
            }
        if (all) return b;
    }
    return std::nullopt;
}

std::vector<Polynomial> linear_ideal_generators(const LinearPresentation& p,
                                                const RingPtr& ring) {
    if (ring->nvars() != p.size())
        throw std::invalid_argument("ring size mismatch with presentation");
    Subspace k = kernel(p.columns);
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < k.dim(); ++i) {
        std::vector<Term> ts;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (k.basis().at(i, j) == 0) continue;
            Expo e(p.size(), 0);
            e[j] = 1;
            ts.push_back(Term{std::move(e), k.basis().at(i, j)});
        }
        out.emplace_back(ring, std::move(ts));
    }
    return out;
}

}  // namespace troptoric
