#pragma once

#include "troptoric/bundles.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace troptoric {

/// Presentation of the multi-Rees (total section) algebra: variables X_i per
/// ray and Y_j (or Z_j for adjoined elements) per Khovanskii basis element,
/// with the kernel of X_i -> t_i^{-1}, Y_j -> b_j t^{column j}.
struct ReesPresentation {
    RingPtr ring;  // layout: X_1..X_m, then one variable per basis element
    std::vector<Polynomial> gens;
    std::size_t n_rows = 0;   // number of rays used
    std::size_t d_basis = 0;  // number of basis elements
    /// Rows as used in the construction (normalized to nonnegative entries).
    std::vector<std::vector<long long>> used_matrix;
    /// Per-row shift subtracted during normalization.
    std::vector<long long> row_shifts;

    std::size_t x_index(std::size_t i) const { return i; }
    std::size_t y_index(std::size_t j) const { return n_rows + j; }
    /// Z^n degree of Y_j (column j of the normalized matrix).
    std::vector<long long> y_degree(std::size_t j) const;
    /// Weight for in_{s(w)}: w on the Y block, zero on the X block.
    std::vector<Rat> s_weight(const std::vector<Rat>& w_on_basis) const;
    /// Substitutes X_i = 1 for all i, landing in the fiber presentation ring.
    std::vector<Polynomial> specialize_all_x(const RingPtr& fiber_ring) const;
};

/// Kernel of the multi-Rees map for the given rows (staged elimination:
/// first the fiber variables, then the torus parameters).
ReesPresentation build_rees_kernel(const RingPtr& fiber_ring,
                                   const std::vector<Polynomial>& fiber_ideal,
                                   const std::vector<std::vector<long long>>& rows,
                                   const GroebnerConfig& cfg = {});

ReesPresentation build_IB(const Diagram& d, const GroebnerConfig& cfg = {});
/// Partial multi-Rees presentation on the first `rows_used` rays.
ReesPresentation build_IB_rows(const Diagram& d, std::size_t rows_used,
                               const GroebnerConfig& cfg = {});

struct PrimalityVerdict {
    enum class Kind { Prime, NotPrime, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::string reason;
    /// NotPrime: u, v outside the ideal with u*v inside (checked).
    std::optional<std::pair<Polynomial, Polynomial>> witness;

    bool prime() const { return kind == Kind::Prime; }
};

/// Sound, incomplete primality for < gens, X_extra >. Decides the principal
/// basis-linear pattern and the disjoint-support complete-intersection
/// pattern; anything else is Inconclusive.
PrimalityVerdict prime_check(const std::vector<Polynomial>& gens,
                             std::optional<std::size_t> extra_var,
                             const GroebnerConfig& cfg = {});

/// Primality of in_{s(w)}(I_B) via the degenerate-fiber kernel: when the
/// fiber initial ideal is linear and monomial-free and the initial ideal of
/// the presentation equals the Rees kernel over the degenerate fiber, the
/// initial ideal is a kernel into a domain, hence prime.
PrimalityVerdict prime_check_initial(const Diagram& d, const ReesPresentation& rp,
                                     const std::vector<Rat>& w_on_basis,
                                     const GroebnerConfig& cfg = {});

struct HypersurfaceResult {
    bool applicable = false;
    std::string reason;  // when not applicable
    bool pass = false;
    std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;  // 0-indexed rows
};
HypersurfaceResult hypersurface_check(const Diagram& d);

/// Twist constants r_i making D - r nonnegative with at most one nonzero
/// entry per row, or nullopt.
std::optional<std::vector<long long>> sparse_check(const Diagram& d);

struct UniformResult {
    bool applicable = false;
    std::string reason;
    bool pass = false;
};
UniformResult uniform_check(const Diagram& d);

struct RowPrimality {
    std::size_t row = 0;
    PrimalityVerdict verdict;
};

struct MDSReport {
    enum class Overall { MoriDream, NotMoriDream, Inconclusive };
    Overall overall = Overall::Inconclusive;
    std::string certified_by;  // split | hypersurface | sparse | uniform | strong-basis
    std::string strong_basis;  // strong | fails | unknown
    std::string note;
    std::optional<HypersurfaceResult> hypersurface;
    std::optional<std::vector<long long>> sparse_twists;
    std::optional<UniformResult> uniform;
    std::vector<RowPrimality> row_checks;
    std::optional<ReesPresentation> presentation;
};

MDSReport strong_khovanskii_verdict(const Diagram& d, const GroebnerConfig& cfg = {});

struct SubductionResult {
    Diagram extended;
    /// Adjoined elements, written in the original fiber variables.
    std::vector<Polynomial> adjoined;
    /// Their valuation columns (all rays).
    std::vector<std::vector<long long>> adjoined_columns;
    bool completed = false;  // false: budget hit, partial basis returned
};

/// Iterated-Rees strong-basis completion: per ray, compares the initial
/// ideal of the stage presentation with the kernel over the associated
/// graded fiber, lifts missing relations and subducts their initial
/// classes; inexpressible lifts join the basis with their full valuation
/// column.
SubductionResult subduction_extend(const Diagram& d, int degree_cap = 8,
                                   int max_adjoins = 16, const GroebnerConfig& cfg = {});

struct AlterResult {
    Diagram diagram;
    AdaptednessReport adaptedness;
    PrimalityVerdict append_certificate;  // append case
    std::string note;
};

/// Appends a row after certifying its s-lift prime; refuses (throws
/// std::invalid_argument) when the certificate is unavailable.
AlterResult alter_append_row(const Diagram& d, const std::vector<long long>& w,
                             const Fan& new_fan, const GroebnerConfig& cfg = {});
AlterResult alter_delete_row(const Diagram& d, std::size_t row, const Fan& new_fan,
                             const GroebnerConfig& cfg = {});

/// Union of the per-row reduced bases of I_B; every element is homogeneous
/// with in_{s(w_i)}(f) = f at X_i = 0 for all rows i.
std::vector<Polynomial> good_basis(const Diagram& d, const ReesPresentation& rp,
                                   const GroebnerConfig& cfg = {});

struct ConeCFResult {
    bool member = false;
    std::string violation;  // first violating generator/row when not a member
};

/// Candidate diagram lies in the cone C_F of the reference: all initial
/// forms of the good basis agree row by row.
ConeCFResult cone_CF_member(const Diagram& d_ref, const ReesPresentation& rp_ref,
                            const std::vector<Polynomial>& good,
                            const Diagram& d_cand, const GroebnerConfig& cfg = {});

}  // namespace troptoric
