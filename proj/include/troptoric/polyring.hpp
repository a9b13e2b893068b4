#pragma once

#include "troptoric/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace troptoric {

/// Variable set of a (Laurent) polynomial ring over Q.
struct Ring {
    std::vector<std::string> vars;
    std::vector<bool> laurent;  // per variable; empty means all false

    bool is_laurent(std::size_t i) const { return i < laurent.size() && laurent[i]; }
    std::size_t nvars() const { return vars.size(); }
    int index_of(const std::string& name) const;  // -1 if absent
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, std::vector<bool> laurent = {});

/// Exponent vector; length always equals the ring's variable count.
using Expo = std::vector<int>;

int total_degree(const Expo& a);
bool expo_divides(const Expo& a, const Expo& b);  // a | b (componentwise <=)
Expo expo_mul(const Expo& a, const Expo& b);
Expo expo_div(const Expo& a, const Expo& b);  // b must divide a
Expo expo_lcm(const Expo& a, const Expo& b);
bool expo_coprime(const Expo& a, const Expo& b);

/// Classic grevlex: larger total degree wins; ties go to the vector whose
/// last nonzero difference entry is negative. Variable 0 is the largest.
bool grevlex_greater(const Expo& a, const Expo& b);

/// Canonical display order used for term storage and serialization:
/// total degree descending, then grevlex descending.
bool display_before(const Expo& a, const Expo& b);

struct Term {
    Expo mono;
    Rat coef;
};

/// Sparse multivariate (Laurent) polynomial with exact rational coefficients.
/// Terms are kept sorted in the canonical display order with no zero
/// coefficients, so equality is structural.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rat& c);
    static Polynomial variable(RingPtr ring, std::size_t idx, int power = 1);
    static Polynomial monomial(RingPtr ring, Expo e, const Rat& c = Rat(1));

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    Polynomial mul_term(const Expo& mono, const Rat& coef) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const;

    /// Standard total degree of the polynomial (max over terms), 0 if zero.
    int degree() const;
    /// True if every term has the same weighted degree under var weights w.
    bool homogeneous_under(const std::vector<long long>& w) const;

  private:
    RingPtr ring_;
    std::vector<Term> terms_;
    void normalize();
};

/// Weight order in the min convention: the leading term minimizes <w, alpha>;
/// ties are broken by grevlex with the fixed variable indexing (larger
/// grevlex term leads). The zero weight gives plain grevlex.
struct WeightOrder {
    std::vector<Rat> weight;  // empty = zero vector

    Rat weight_of(const Expo& e) const;
    /// True if a is strictly more leading than b.
    bool leads(const Expo& a, const Expo& b) const;
    bool is_trivial() const;
};

/// Total parse of the polynomial text grammar: rational coefficients, '*',
/// '^' (negative exponents only on Laurent variables), '+', '-'.
/// Throws std::invalid_argument on malformed input or unknown variables.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

/// Canonical serialization; parse(format(f)) == f.
std::string format_polynomial(const Polynomial& f);

/// Substitutes images[i] for variable i; f must have nonnegative exponents.
Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      const std::vector<Polynomial>& images);

/// Reinterprets f in a superring; var_map[i] gives each f-variable's index
/// in the target ring.
Polynomial rename_into(const Polynomial& f, const RingPtr& target,
                       const std::vector<std::size_t>& var_map);

}  // namespace troptoric
