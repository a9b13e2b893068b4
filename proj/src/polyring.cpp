#include "troptoric/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace troptoric {

int Ring::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars, std::vector<bool> laurent) {
    auto r = std::make_shared<Ring>();
    r->vars = std::move(vars);
    r->laurent = std::move(laurent);
    return r;
}

int total_degree(const Expo& a) {
    int d = 0;
    for (int e : a) d += e;
    return d;
}

bool expo_divides(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo expo_mul(const Expo& a, const Expo& b) {
    Expo c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

Expo expo_div(const Expo& a, const Expo& b) {
    Expo c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
    return c;
}

bool expo_coprime(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

bool grevlex_greater(const Expo& a, const Expo& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool display_before(const Expo& a, const Expo& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return grevlex_greater(a, b);
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    for (auto& t : terms_)
        if (t.mono.size() != ring_->nvars())
            throw std::invalid_argument("term exponent length mismatch");
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return display_before(x.mono, y.mono); });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coef += t.coef;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.coef == 0; }),
                 merged.end());
    terms_ = std::move(merged);
}

Polynomial Polynomial::constant(RingPtr ring, const Rat& c) {
    if (c == 0) return Polynomial(std::move(ring));
    Expo e(ring->nvars(), 0);
    std::vector<Term> ts{Term{std::move(e), c}};
    return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t idx, int power) {
    Expo e(ring->nvars(), 0);
    e[idx] = power;
    std::vector<Term> ts{Term{std::move(e), Rat(1)}};
    return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::monomial(RingPtr ring, Expo e, const Rat& c) {
    if (c == 0) return Polynomial(std::move(ring));
    std::vector<Term> ts{Term{std::move(e), c}};
    return Polynomial(std::move(ring), std::move(ts));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && display_before(terms_[i].mono, o.terms_[j].mono))) {
            ts.push_back(terms_[i++]);
        } else if (i == terms_.size() || display_before(o.terms_[j].mono, terms_[i].mono)) {
            ts.push_back(o.terms_[j++]);
        } else {
            Rat c = terms_[i].coef + o.terms_[j].coef;
            if (c != 0) ts.push_back(Term{terms_[i].mono, c});
            ++i;
            ++j;
        }
    }
    Polynomial r(ring_);
    r.terms_ = std::move(ts);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::mul_term(const Expo& mono, const Rat& coef) const {
    Polynomial r(ring_);
    if (coef == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
        t.mono = expo_mul(t.mono, mono);
        t.coef *= coef;
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial acc(ring_);
    for (const auto& t : o.terms_) acc = acc + mul_term(t.mono, t.coef);
    return acc;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(ring_, 1);
    for (unsigned k = 0; k < e; ++k) r = r * (*this);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
    return d;
}

bool Polynomial::homogeneous_under(const std::vector<long long>& w) const {
    if (terms_.size() <= 1) return true;
    auto wdeg = [&](const Expo& e) {
        long long s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
        return s;
    };
    long long d0 = wdeg(terms_[0].mono);
    for (const auto& t : terms_)
        if (wdeg(t.mono) != d0) return false;
    return true;
}

Rat WeightOrder::weight_of(const Expo& e) const {
    Rat s = 0;
    for (std::size_t i = 0; i < e.size() && i < weight.size(); ++i)
        if (weight[i] != 0) s += weight[i] * e[i];
    return s;
}

bool WeightOrder::leads(const Expo& a, const Expo& b) const {
    if (!is_trivial()) {
        Rat wa = weight_of(a), wb = weight_of(b);
        if (wa != wb) return wa < wb;
    }
    return grevlex_greater(a, b);
}

bool WeightOrder::is_trivial() const {
    for (const auto& w : weight)
        if (w != 0) return false;
    return true;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;
    explicit Lexer(const std::string& str) : s(str) {}
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return s[pos++];
    }
};

std::string read_int(Lexer& lx, bool allow_sign) {
    lx.skip_ws();
    std::string out;
    if (allow_sign && lx.pos < lx.s.size() && (lx.s[lx.pos] == '-' || lx.s[lx.pos] == '+'))
        out += lx.s[lx.pos++];
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
        out += lx.s[lx.pos++];
    if (out.empty() || out == "-" || out == "+")
        throw std::invalid_argument("expected integer in polynomial text");
    return out;
}

std::string read_ident(Lexer& lx) {
    lx.skip_ws();
    std::string out;
    if (lx.pos < lx.s.size() &&
        (std::isalpha(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_')) {
        while (lx.pos < lx.s.size() &&
               (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
            out += lx.s[lx.pos++];
    }
    if (out.empty()) throw std::invalid_argument("expected identifier in polynomial text");
    return out;
}

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    Lexer lx(text);
    std::vector<Term> terms;
    bool first = true;
    while (!lx.eof()) {
        Rat sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            if (c == '-') sign = -1;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        first = false;

        Rat coef = sign;
        Expo mono(ring->nvars(), 0);
        bool expect_factor = true;
        while (expect_factor) {
            char p = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                std::string num = read_int(lx, false);
                if (lx.peek() == '/') {
                    lx.get();
                    std::string den = read_int(lx, false);
                    coef *= parse_rational(num + "/" + den);
                } else {
                    coef *= parse_rational(num);
                }
            } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
                std::string name = read_ident(lx);
                int idx = ring->index_of(name);
                if (idx < 0) throw std::invalid_argument("unknown variable: " + name);
                int e = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    e = std::stoi(read_int(lx, true));
                }
                if (e < 0 && !ring->is_laurent(static_cast<std::size_t>(idx)))
                    throw std::invalid_argument("negative exponent on non-Laurent variable " +
                                                name);
                mono[static_cast<std::size_t>(idx)] += e;
            } else {
                throw std::invalid_argument("unexpected character in polynomial text");
            }
            if (lx.peek() == '*') {
                lx.get();
            } else {
                expect_factor = false;
            }
        }
        terms.push_back(Term{std::move(mono), coef});
    }
    return Polynomial(ring, std::move(terms));
}

std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const Ring& ring = *f.ring();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        Rat c = t.coef;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (any_var) vars << "*";
            vars << ring.vars[i];
            if (t.mono[i] != 1) vars << "^" << t.mono[i];
            any_var = true;
        }
        if (!any_var) {
            os << c.str();
        } else if (c == 1) {
            os << vars.str();
        } else {
            os << c.str() << "*" << vars.str();
        }
    }
    return os.str();
}

Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::vector<Polynomial>& images) {
    if (images.size() != f.ring()->nvars())
        throw std::invalid_argument("substitution image count mismatch");
    Polynomial acc(target);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, t.coef);
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (t.mono[i] < 0)
                throw std::invalid_argument("substitute: negative exponent unsupported");
            prod = prod * images[i].pow(static_cast<unsigned>(t.mono[i]));
        }
        acc = acc + prod;
    }
    return acc;
}

Polynomial rename_into(const Polynomial& f, const RingPtr& target,
                       const std::vector<std::size_t>& var_map) {
    std::vector<Term> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Expo e(target->nvars(), 0);
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            e[var_map[i]] += t.mono[i];
        }
        ts.push_back(Term{std::move(e), t.coef});
    }
    return Polynomial(target, std::move(ts));
}

}  // namespace troptoric
