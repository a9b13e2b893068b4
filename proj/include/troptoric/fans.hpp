#pragma once

#include "troptoric/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace troptoric {

/// Simplicial rational fan: primitive rays plus cones as sorted ray-index
/// sets, closed under taking faces.
struct Fan {
    std::size_t dim = 0;
    std::vector<std::vector<long long>> rays;
    std::vector<std::vector<std::size_t>> cones;
};

/// Builds a fan from generating cones: sorts, deduplicates and adds all
/// faces (subsets; valid because fans here are simplicial).
Fan make_fan(std::size_t dim, std::vector<std::vector<long long>> rays,
             std::vector<std::vector<std::size_t>> cones);

struct FanValidation {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

FanValidation validate(const Fan& fan);

/// Per-cone smoothness flags, aligned with fan.cones. A cone is smooth when
/// its ray matrix extends to a lattice basis (gcd of maximal minors is 1).
std::vector<bool> is_smooth(const Fan& fan);

/// Cones not properly contained in another listed cone.
std::vector<std::size_t> maximal_cones(const Fan& fan);

/// Nonnegative coefficients of point in the cone's rays; nullopt when the
/// point lies outside. Unique by simpliciality.
std::optional<std::vector<Rat>> barycentric_coordinates(const Fan& fan, std::size_t cone_index,
                                                        const std::vector<Rat>& point);

/// Index of some maximal cone containing the point (first in listing order).
std::optional<std::size_t> containing_maximal_cone(const Fan& fan,
                                                   const std::vector<Rat>& point);

/// Integer values on rays of an (integral) piecewise-linear Cartier divisor.
struct CartierData {
    std::vector<long long> ray_values;
};

}  // namespace troptoric
