#pragma once

#include "troptoric/polyring.hpp"

#include <optional>
#include <set>
#include <stdexcept>

namespace troptoric {

/// Resource budgets for Groebner computations. Exceeding one throws
/// BudgetExceeded; a partial answer is never returned silently.
struct GroebnerConfig {
    std::size_t max_basis = 4000;
    std::size_t max_pairs = 400000;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class GroebnerBasis {
  public:
    GroebnerBasis() = default;
    GroebnerBasis(std::vector<Polynomial> gens, WeightOrder order,
                  std::vector<long long> grading);

    const std::vector<Polynomial>& gens() const { return gens_; }
    const WeightOrder& order() const { return order_; }
    bool reduced() const { return true; }
    /// Positive grading under which all generators are homogeneous
    /// (all-ones when the order is plain grevlex).
    const std::vector<long long>& grading() const { return grading_; }
    const std::vector<Expo>& leading_monomials() const { return leads_; }
    const RingPtr& ring() const { return gens_.at(0).ring(); }
    bool empty() const { return gens_.empty(); }

    bool operator==(const GroebnerBasis& o) const { return gens_ == o.gens_; }

  private:
    std::vector<Polynomial> gens_;
    WeightOrder order_;
    std::vector<long long> grading_;
    std::vector<Expo> leads_;
};

/// A positive integer grading making every generator homogeneous, when one
/// exists. Standard degree is preferred when it works.
std::optional<std::vector<long long>> find_positive_grading(
    const RingPtr& ring, const std::vector<Polynomial>& gens);

/// Reduced Groebner basis for the min-convention weight order. A nonzero
/// weight requires the ideal to be homogeneous under some positive grading
/// (found automatically); otherwise std::invalid_argument.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const WeightOrder& ord,
                         const GroebnerConfig& cfg = {});

/// Remainder supported on standard monomials; f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool in_ideal(const Polynomial& f, const GroebnerBasis& gb);

/// Sum of the terms of f of minimal w-weight.
Polynomial initial_form(const Polynomial& f, const std::vector<Rat>& w);

/// in_w(I), generated by the initial forms of the reduced (w, tie) basis;
/// the result is again a reduced basis for the same order.
GroebnerBasis initial_ideal(const std::vector<Polynomial>& gens, const std::vector<Rat>& w,
                            const GroebnerConfig& cfg = {});

/// Generators of I intersected with the subring without the given variables.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::set<std::size_t>& vars,
                                  const GroebnerConfig& cfg = {});

/// True when w lies in the closed Groebner cone of gb's order.
bool in_closed_groebner_cone(const std::vector<Rat>& w, const GroebnerBasis& gb);

/// Weight quasivaluation of the class of f in the quotient by gb's ideal:
/// min of <w, alpha> over the standard monomial expansion, +inf for zero.
/// Throws std::invalid_argument when w is outside gb's closed cone.
ExtRat weight_value(const Polynomial& f, const std::vector<Rat>& w, const GroebnerBasis& gb);

/// iota(w) = (v_w(class of x_1), ..., v_w(class of x_d)).
std::vector<Rat> iota(const std::vector<Rat>& w, const std::vector<Polynomial>& gens,
                      const GroebnerConfig& cfg = {});

/// Ideal equality by mutual normal-form reduction.
bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const GroebnerConfig& cfg = {});

}  // namespace troptoric
