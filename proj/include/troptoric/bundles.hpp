#pragma once

#include "troptoric/fans.hpp"
#include "troptoric/groebner.hpp"
#include "troptoric/plsemifield.hpp"
#include "troptoric/troplinear.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace troptoric {

/// Classifying datum of a toric flat family: an integer matrix with one row
/// per fan ray and one column per Khovanskii basis element, each row a
/// point of the tropical variety of the fiber presentation.
struct Diagram {
    Fan fan;
    /// Bundle case: a linear presentation of the arrangement. Family case:
    /// a general fiber presentation whose given generators are used as the
    /// tropical basis.
    std::optional<LinearPresentation> linear;
    RingPtr fiber_ring;                   // presentation variables, one per column
    std::vector<Polynomial> fiber_ideal;  // kernel of the presentation
    std::vector<std::vector<long long>> matrix;

    std::size_t n_rays() const { return matrix.size(); }
    std::size_t n_cols() const { return fiber_ring->nvars(); }
    bool is_bundle() const { return linear.has_value(); }
    std::vector<Rat> row(std::size_t i) const;
    std::vector<long long> column(std::size_t j) const;
};

/// Builds the bundle-case diagram; synthesizes the fiber ring x1..xd and its
/// linear ideal from the presentation kernel.
Diagram make_linear_diagram(Fan fan, LinearPresentation pres,
                            std::vector<std::vector<long long>> matrix);

Diagram make_family_diagram(Fan fan, RingPtr fiber_ring, std::vector<Polynomial> fiber_ideal,
                            std::vector<std::vector<long long>> matrix);

struct ConeVerdict {
    std::size_t cone_index = 0;
    bool adapted = false;
    std::optional<std::vector<std::size_t>> apartment_basis;  // bundle case witness
    std::string detail;
};

struct AdaptednessReport {
    bool adapted = false;
    std::vector<ConeVerdict> cones;  // one per maximal cone
    std::optional<std::string> tropical_failure;
};

/// Checks every row tropical and every maximal cone's rows in a common
/// apartment (matroid basis for bundles; shared refined initial ideals for
/// families).
AdaptednessReport check_adapted(const Diagram& d, const GroebnerConfig& cfg = {});

/// Valuation tuple at an arbitrary lattice/rational point of the support:
/// iota of the barycentric combination of the containing cone's rows.
std::vector<Rat> weight_at_point(const Diagram& d, const std::vector<Rat>& rho,
                                 const GroebnerConfig& cfg = {});

/// Klyachko space G^{rho_i}_r as a subspace of the fiber (bundle case).
Subspace klyachko_space(const Diagram& d, std::size_t ray_index, long long level);

/// F_psi = intersection over rays of the Klyachko spaces at psi's values.
Subspace f_psi(const Diagram& d, const CartierData& psi);

/// Support functions of the m-subset hulls of the given lattice points, with
/// a seeded nonvanishing-minor genericity certificate. Results are indexed
/// by the m-subsets of [points.size()] in lexicographic order.
struct SkeletonBundle {
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<PLFunction> functions;
};
SkeletonBundle skeleton_bundle(const std::vector<std::vector<long long>>& points,
                               std::size_t m, std::uint64_t seed, int retry_budget = 32);

/// Three-term Pluecker relations p_{Si,Sj}p_{Sk,Sl} - p_{Si,Sk}p_{Sj,Sl} +
/// p_{Si,Sl}p_{Sj,Sk} in a ring with one variable per m-subset.
std::vector<Polynomial> pluecker_three_term_relations(std::size_t n, std::size_t m,
                                                      const RingPtr& ring);
RingPtr pluecker_ring(std::size_t n, std::size_t m);

/// Newton valuations of a Laurent tuple in the kernel of the circuit matrix.
/// Throws std::invalid_argument unless circuit_matrix * lambda == 0 exactly.
std::vector<PLFunction> kernel_bundle(const std::vector<Polynomial>& lambda,
                                      const RationalMatrix& circuit_matrix);

/// Evaluates the tuple on the fan's rays; every function must be linear on
/// every maximal cone (error names the first violating cone).
Diagram diagram_from_pl(const Fan& fan, const std::vector<PLFunction>& phi,
                        const LinearPresentation& pres);
Diagram diagram_from_pl(const Fan& fan, const std::vector<PLFunction>& phi,
                        const RingPtr& fiber_ring, const std::vector<Polynomial>& fiber_ideal);

}  // namespace troptoric
