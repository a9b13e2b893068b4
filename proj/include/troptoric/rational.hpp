#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace troptoric {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Extended value Z-bar = Q u {+inf}; +inf is the value of 0 under any
/// valuation.
struct ExtRat {
    bool infinite = false;
    Rat value = 0;

    static ExtRat infinity() { return ExtRat{true, 0}; }
    static ExtRat of(Rat v) { return ExtRat{false, std::move(v)}; }

    bool operator==(const ExtRat& o) const {
        if (infinite || o.infinite) return infinite == o.infinite;
        return value == o.value;
    }
};

inline std::string to_string(const Rat& r) { return r.str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& s);

/// Scales a rational vector to a primitive integer vector (gcd 1), preserving
/// direction. All-zero input stays all-zero.
std::vector<long long> primitive_integer_vector(const std::vector<Rat>& v);

}  // namespace troptoric
