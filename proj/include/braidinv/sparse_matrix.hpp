#pragma once

#include <map>
#include <utility>
#include <vector>

#include "braidinv/scalar.hpp"

namespace braidinv {

/// Sparse vector: coordinate index -> nonzero value.
using SparseVector = std::map<int, Scalar>;

/// Sparse rational matrix. Zero entries are never stored.
class SparseMatrix {
public:
    SparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int row, int col, const Scalar& value);
    void add(int row, int col, const Scalar& value);
    Scalar at(int row, int col) const;

    const std::map<std::pair<int, int>, Scalar>& entries() const { return entries_; }

    /// Matrix-vector product, sparse in and out.
    SparseVector apply(const SparseVector& v) const;

private:
    int rows_;
    int cols_;
    std::map<std::pair<int, int>, Scalar> entries_;
};

/// Basis of {v : Mv = 0}, in reduced echelon form with pivot coordinates
/// normalized to 1. Deterministic: pivoting is by smallest column index,
/// then smallest row index with a nonzero entry.
std::vector<SparseVector> nullspace_basis(const SparseMatrix& m);

/// Rank over the rationals. rank(M) + |nullspace_basis(M)| == cols(M).
int rank(const SparseMatrix& m);

}  // namespace braidinv
