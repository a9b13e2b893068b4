#pragma once

#include "troptoric/exactalg.hpp"
#include "troptoric/plsemifield.hpp"
#include "troptoric/polyring.hpp"

#include <optional>
#include <vector>

namespace troptoric {

/// Columns are the vectors b_1..b_d of the arrangement in a chosen basis of
/// the fiber E.
struct LinearPresentation {
    RationalMatrix columns;  // r x d; column j = coordinates of b_j

    std::size_t size() const { return columns.cols(); }
    std::size_t ambient() const { return columns.rows(); }
    std::vector<Rat> column(std::size_t j) const;
};

/// A circuit of the column matroid: minimal dependent support with the
/// (unique up to scale) kernel vector on it.
struct Circuit {
    std::vector<std::size_t> support;  // sorted
    std::vector<Rat> coeffs;           // aligned with support
};

struct Matroid {
    LinearPresentation presentation;
    std::size_t rank = 0;
    std::vector<Circuit> circuits;
    std::vector<std::vector<std::size_t>> bases;  // sorted index sets, lex order
};

/// Exhaustive circuit/basis enumeration; throws BudgetExceeded beyond the
/// ground-set budget (default 12).
Matroid matroid_of(const LinearPresentation& p, std::size_t max_ground = 12);

/// The unique circuit inside basis + {j}, j outside the basis.
Circuit fundamental_circuit(const Matroid& m, std::size_t j,
                            const std::vector<std::size_t>& basis);

/// Scalar tropical membership: on every circuit the minimum of w is attained
/// at least twice.
bool trop_member_scalar(const std::vector<Rat>& w, const Matroid& m);

/// Index of a violated circuit, if any.
std::optional<std::size_t> violated_circuit(const std::vector<Rat>& w, const Matroid& m);

/// PL-valued tropical membership over the circuits.
bool trop_member_pl(const std::vector<PLFunction>& psi, const Matroid& m);

/// Bending condition over the PL semifield for one polynomial: dropping any
/// single term from the tropicalized sum leaves the function unchanged.
bool trop_member_pl_poly(const std::vector<PLFunction>& psi, const Polynomial& f);

/// Scalar bending condition for one polynomial.
bool trop_member_scalar_poly(const std::vector<Rat>& w, const Polynomial& f);

/// Min convention: w lies in the closed cone of the basis iff every
/// fundamental circuit attains its w-minimum at the non-basis element.
bool in_closed_basis_cone(const std::vector<Rat>& w, const std::vector<std::size_t>& basis,
                          const Matroid& m);

/// Lexicographically least basis whose closed cone contains every row, or
/// nullopt. Rows must be tropical (std::invalid_argument otherwise).
std::optional<std::vector<std::size_t>> common_apartment(
    const std::vector<std::vector<Rat>>& rows, const Matroid& m);

/// Linear forms (one per kernel basis vector) presenting the ideal L_B in
/// the given ring, whose variables correspond to the columns.
std::vector<Polynomial> linear_ideal_generators(const LinearPresentation& p,
                                                const RingPtr& ring);

}  // namespace troptoric
