#pragma once

#include "troptoric/fans.hpp"
#include "troptoric/polyring.hpp"

#include <optional>
#include <vector>

namespace troptoric {

/// Concave integral piecewise-linear function on Z^rank, the pointwise min
/// of finitely many linear forms. Canonical form keeps exactly the vertex
/// set of the convex hull of the generating forms, so equality is
/// structural. These are the support functions of lattice polytopes.
class PLFunction {
  public:
    PLFunction(std::size_t rank, std::vector<std::vector<long long>> generators);

    std::size_t rank() const { return rank_; }
    const std::vector<std::vector<long long>>& generators() const { return gens_; }

    long long evaluate(const std::vector<long long>& rho) const;
    Rat evaluate(const std::vector<Rat>& rho) const;

    bool is_linear() const { return gens_.size() == 1; }
    bool operator==(const PLFunction& o) const {
        return rank_ == o.rank_ && gens_ == o.gens_;
    }

  private:
    std::size_t rank_;
    std::vector<std::vector<long long>> gens_;  // hull vertices, sorted
};

/// PLFunction together with the additive identity (infinity).
struct InfinityExtended {
    std::optional<PLFunction> value;  // nullopt encodes infinity

    bool is_infinity() const { return !value.has_value(); }
    static InfinityExtended infinity() { return InfinityExtended{std::nullopt}; }
    static InfinityExtended of(PLFunction f) { return InfinityExtended{std::move(f)}; }
};

/// Tropical sum: pointwise min. Idempotent, commutative, associative.
PLFunction trop_add(const PLFunction& f, const PLFunction& g);
InfinityExtended trop_add(const InfinityExtended& f, const InfinityExtended& g);

/// Tropical product: pointwise +, i.e. Minkowski sum of generator hulls.
PLFunction trop_mul(const PLFunction& f, const PLFunction& g);
InfinityExtended trop_mul(const InfinityExtended& f, const InfinityExtended& g);

/// Support function of the Newton polytope of a (Laurent) polynomial; the
/// zero polynomial yields infinity.
InfinityExtended newton_valuation(const Polynomial& p);

/// The witnessing linear form when f restricted to the cone is linear.
std::optional<std::vector<long long>> is_linear_on_cone(const PLFunction& f, const Fan& fan,
                                                        std::size_t cone_index);

/// Complete simplicial planar fan refining the linearity domains of all
/// inputs (rank 2 only). Gaps of angle >= pi are split so every cone is
/// strongly convex.
Fan linearity_fan(const std::vector<PLFunction>& functions);

}  // namespace troptoric
