#pragma once

#include "phframe/rational.hpp"

#include <cstddef>
#include <vector>

namespace phframe {

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Appends a row of length cols().
  void append_row(const RatVector& row);
  void append_rows(const RatMatrix& other);
  RatVector row(std::size_t r) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Integer row vector scaled so that its entries are coprime and the first
/// nonzero entry is positive.
IntVector make_primitive(const RatVector& v);
void make_primitive_in_place(IntVector& v);

/// Result of fraction-free Gauss-Jordan elimination: integer rows where each
/// pivot column is zero outside its pivot row. Zero rows are dropped.
struct EchelonForm {
  std::vector<IntVector> rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t cols = 0;
};

EchelonForm fraction_free_rref(const RatMatrix& m);
EchelonForm fraction_free_rref(std::vector<IntVector> rows, std::size_t cols);

std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}, one primitive integer vector per free column.
std::vector<IntVector> nullspace(const RatMatrix& m);

/// Canonical basis of the span of the given vectors: reduced row echelon
/// rows, each primitive with positive pivot, ordered by pivot column. Two
/// families span the same subspace iff their canonical bases are equal.
std::vector<IntVector> canonical_basis(const std::vector<IntVector>& vectors, std::size_t cols);

/// True if v lies in the span of the basis rows.
bool in_span(const std::vector<IntVector>& basis, const IntVector& v);

}  // namespace phframe
