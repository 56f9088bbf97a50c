#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chevalley/matrix.hpp"
#include "chevalley/rational.hpp"

namespace chevalley {

struct SparseEntry {
  std::uint32_t col;
  Rational value;
};

// Exact sparse matrix, compressed by rows. Every row keeps its entries
// sorted by column and never stores explicit zeros.
class SparseMatrix {
 public:
  using Row = std::vector<SparseEntry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix diagonal(std::vector<Rational> const& entries);
  static SparseMatrix from_dense(RatMatrix const& dense);
  // Block-diagonal direct sum.
  static SparseMatrix direct_sum(std::vector<SparseMatrix> const& blocks);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  Row const& row(std::size_t r) const { return rows_[r]; }
  Rational at(std::size_t r, std::size_t c) const;
  // Replaces a whole row; entries must be sorted by column and nonzero.
  void set_row(std::size_t r, Row row);
  void set(std::size_t r, std::size_t c, Rational value);

  RatMatrix to_dense() const;
  SparseMatrix transpose() const;
  SparseMatrix block(std::size_t row_begin, std::size_t row_end, std::size_t col_begin,
                     std::size_t col_end) const;

  bool is_integral() const;
  bool is_identity() const;
  bool is_zero() const { return nnz() == 0; }

  std::vector<Rational> apply(std::vector<Rational> const& v) const;
  std::vector<Rational> column(std::size_t c) const;

  SparseMatrix& operator*=(Rational const& scalar);
  // In place: column c multiplied by factors[c] (a product with a diagonal matrix on the right).
  void scale_columns(std::vector<Rational> const& factors);
  friend SparseMatrix operator*(SparseMatrix const& a, SparseMatrix const& b);
  friend SparseMatrix operator+(SparseMatrix const& a, SparseMatrix const& b);
  friend SparseMatrix operator-(SparseMatrix const& a, SparseMatrix const& b);
  friend SparseMatrix operator*(Rational const& scalar, SparseMatrix m) { return m *= scalar; }
  friend bool operator==(SparseMatrix const& a, SparseMatrix const& b);

  // this + scalar * other.
  SparseMatrix add_scaled(SparseMatrix const& other, Rational const& scalar) const;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

// [a, b] = ab - ba.
SparseMatrix commutator(SparseMatrix const& a, SparseMatrix const& b);

}  // namespace chevalley
