#pragma once

#include "troptoric/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace troptoric {

/// Dense matrix over Q. Everything in this project is exact; no floating
/// point anywhere.
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rat> row(std::size_t i) const;
    RationalMatrix transpose() const;
    RationalMatrix mul(const RationalMatrix& other) const;
    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// Reduced row echelon form plus pivot columns. Row space is preserved and
/// the result is canonical for it.
std::pair<RationalMatrix, std::vector<std::size_t>> rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// A linear subspace of Q^n, stored as an RREF basis with zero rows dropped.
/// Two equal subspaces have bit-identical representations.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    /// Canonicalizes the spanning rows via RREF.
    Subspace(std::size_t ambient_dim, const RationalMatrix& spanning_rows);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RationalMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Rat>& v) const;
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

  private:
    std::size_t ambient_;
    RationalMatrix basis_;  // RREF, no zero rows
};

/// Null space of m, canonical basis.
Subspace kernel(const RationalMatrix& m);

/// Sum of subspaces (row-space union). Ambient dimensions must match.
Subspace subspace_sum(const std::vector<Subspace>& spaces);

/// Intersection of subspaces. Throws std::invalid_argument on ambient
/// dimension mismatch; the empty list is not allowed.
Subspace intersect(const std::vector<Subspace>& spaces);

/// Solves a * x = b; returns one solution or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(const RationalMatrix& a, const std::vector<Rat>& b);

}  // namespace troptoric
