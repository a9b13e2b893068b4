#include "troptoric/exactalg.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace troptoric {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

std::vector<long long> primitive_integer_vector(const std::vector<Rat>& v) {
    BigInt lcm_den = 1;
    for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    std::vector<BigInt> ints;
    ints.reserve(v.size());
    BigInt g = 0;
    for (const auto& x : v) {
        BigInt n = numerator(x) * (lcm_den / denominator(x));
        g = boost::multiprecision::gcd(g, n);
        ints.push_back(std::move(n));
    }
    std::vector<long long> out(v.size(), 0);
    if (g == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long long>(ints[i] / g);
    return out;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return RationalMatrix(0, 0);
    RationalMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("ragged rows in matrix literal");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rat> RationalMatrix::row(std::size_t i) const {
    std::vector<Rat> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::mul(const RationalMatrix& other) const {
    if (cols_ != other.rows()) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix p(rows_, other.cols());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols(); ++j)
                p.at(i, j) += at(i, k) * other.at(k, j);
        }
    return p;
}

std::pair<RationalMatrix, std::vector<std::size_t>> rref(const RationalMatrix& m) {
    RationalMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a.at(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
        Rat inv = Rat(1) / a.at(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {a, pivots};
}

std::size_t rank(const RationalMatrix& m) { return rref(m).second.size(); }

Subspace::Subspace(std::size_t ambient_dim, const RationalMatrix& spanning_rows)
    : ambient_(ambient_dim) {
    if (spanning_rows.rows() > 0 && spanning_rows.cols() != ambient_dim)
        throw std::invalid_argument("subspace spanning rows have wrong width");
    auto [red, pivots] = rref(spanning_rows);
    RationalMatrix b(pivots.size(), ambient_dim);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) b.at(i, j) = red.at(i, j);
    basis_ = std::move(b);
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector dimension mismatch");
    // Reduce v against the RREF basis.
    std::vector<Rat> w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t pc = 0;
        while (pc < ambient_ && basis_.at(i, pc) == 0) ++pc;
        if (pc == ambient_) continue;
        if (w[pc] == 0) continue;
        Rat f = w[pc];
        for (std::size_t j = pc; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

Subspace kernel(const RationalMatrix& m) {
    auto [red, pivots] = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> gens;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red.at(i, c);
        gens.push_back(std::move(v));
    }
    if (gens.empty()) return Subspace(n);
    return Subspace(n, RationalMatrix::from_rows(gens));
}

Subspace subspace_sum(const std::vector<Subspace>& spaces) {
    if (spaces.empty()) throw std::invalid_argument("empty subspace list");
    std::size_t n = spaces[0].ambient_dim();
    std::vector<std::vector<Rat>> rows;
    for (const auto& s : spaces) {
        if (s.ambient_dim() != n) throw std::invalid_argument("ambient dimension mismatch");
        for (std::size_t i = 0; i < s.basis().rows(); ++i) rows.push_back(s.basis().row(i));
    }
    if (rows.empty()) return Subspace(n);
    return Subspace(n, RationalMatrix::from_rows(rows));
}

Subspace intersect(const std::vector<Subspace>& spaces) {
    if (spaces.empty()) throw std::invalid_argument("empty subspace list");
    std::size_t n = spaces[0].ambient_dim();
    Subspace acc = spaces[0];
    for (std::size_t k = 1; k < spaces.size(); ++k) {
        const Subspace& b = spaces[k];
        if (b.ambient_dim() != n) throw std::invalid_argument("ambient dimension mismatch");
        std::size_t ra = acc.dim(), rb = b.dim();
        if (ra == 0 || rb == 0) return Subspace(n);
        // v = x*A = y*B  <=>  (x, y) in ker [A^T | -B^T]
        RationalMatrix sys(n, ra + rb);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < ra; ++j) sys.at(i, j) = acc.basis().at(j, i);
            for (std::size_t j = 0; j < rb; ++j) sys.at(i, ra + j) = -b.basis().at(j, i);
        }
        Subspace k2 = kernel(sys);
        std::vector<std::vector<Rat>> rows;
        for (std::size_t i = 0; i < k2.dim(); ++i) {
            std::vector<Rat> v(n, Rat(0));
            for (std::size_t j = 0; j < ra; ++j) {
                const Rat& x = k2.basis().at(i, j);
                if (x == 0) continue;
                for (std::size_t c = 0; c < n; ++c) v[c] += x * acc.basis().at(j, c);
            }
            rows.push_back(std::move(v));
        }
        acc = rows.empty() ? Subspace(n) : Subspace(n, RationalMatrix::from_rows(rows));
    }
    return acc;
}

std::optional<std::vector<Rat>> solve(const RationalMatrix& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs dimension mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto [red, pivots] = rref(aug);
    for (auto p : pivots)
        if (p == a.cols()) return std::nullopt;
    std::vector<Rat> x(a.cols(), Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red.at(i, a.cols());
    return x;
}

}  // namespace troptoric
