#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "chevalley/rational.hpp"

namespace chevalley {

// Dense row-major matrix. Used for the small exact computations (Cartan
// data, lattice bases, 2x2 blocks); module-sized operators live in
// SparseMatrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, T const& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (auto const& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  T const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
    Matrix out(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        T const& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(Matrix const& a, Matrix const& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(IntMatrix const& m);

// Row-style Hermite normal form of the lattice spanned by the given rows:
// returns the nonzero rows of the echelon basis, pivots positive and the
// entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix const& generators);

// Same for rational generators: the lattice is scaled by the common
// denominator, reduced, and scaled back.
RatMatrix hermite_normal_form(RatMatrix const& generators);

// Invariant factors of the Smith normal form (all of them, including 1s, in
// divisibility order; zero factors for rank deficiency are omitted).
std::vector<mpz_class> smith_invariant_factors(IntMatrix const& m);

std::size_t rank(RatMatrix const& m);
Rational determinant(RatMatrix m);
std::optional<RatMatrix> inverse(RatMatrix const& m);

// Solves m * x = rhs exactly when m has full column rank; nullopt when the
// system is inconsistent. Throws when the column rank is deficient.
std::optional<std::vector<Rational>> solve_unique(RatMatrix const& m,
                                                  std::vector<Rational> const& rhs);

// Coordinates of v in the row lattice given by an HNF basis (as returned by
// hermite_normal_form), or nullopt when v is outside the Q-span. The
// coordinates are rational; v lies in the lattice iff they are integral.
std::optional<std::vector<Rational>> coordinates_in_echelon_basis(RatMatrix const& basis,
                                                                  std::vector<Rational> const& v);

// Extended gcd: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct ExtendedGcd {
  mpz_class gcd;
  mpz_class x;
  mpz_class y;
};
ExtendedGcd extended_gcd(mpz_class const& a, mpz_class const& b);

}  // namespace chevalley
