#pragma once

#include <optional>
#include <vector>

#include "satokit/field.hpp"

namespace satokit {

/// Dense matrix over an exact field; just enough for echelon forms,
/// determinants, kernels and membership solves.
class Matrix {
  public:
    Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar(f)) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    [[nodiscard]] const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// Determinant by Gaussian elimination (square only).
    [[nodiscard]] Scalar determinant() const;

    /// In-place reduced row echelon form; returns pivot column per pivot row.
    std::vector<std::size_t> rref();

    [[nodiscard]] std::size_t rank() const;

    /// Basis of the right kernel (each vector has cols() entries).
    [[nodiscard]] std::vector<std::vector<Scalar>> kernel() const;

    /// One solution x of A x = b, or nullopt when inconsistent.
    [[nodiscard]] std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

  private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

} // namespace satokit
