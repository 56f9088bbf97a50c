#include "chevalley/matrix.hpp"

#include <algorithm>
#include <utility>

namespace chevalley {
namespace {

// Integer-valued Rational helpers; every entry handled here has denominator 1.
Rational floor_div(Rational const& a, Rational const& b) {
  auto small_a = a.to_int64();
  auto small_b = b.to_int64();
  if (small_a && small_b && *small_a != INT64_MIN) {
    std::int64_t q = *small_a / *small_b;
    if ((*small_a % *small_b != 0) && ((*small_a < 0) != (*small_b < 0))) --q;
    return Rational(q);
  }
  mpz_class q;
  mpz_class na = a.numerator();
  mpz_class nb = b.numerator();
  mpz_fdiv_q(q.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
  return Rational(q);
}

void swap_rows(RatMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// row[target] -= factor * row[source], only for columns >= start.
void subtract_row(RatMatrix& m, std::size_t target, std::size_t source, Rational const& factor,
                  std::size_t start) {
  if (factor.is_zero()) return;
  Rational negated = -factor;
  for (std::size_t c = start; c < m.cols(); ++c) {
    if (m(source, c).is_zero()) continue;
    Rational::fused_multiply_add(m(target, c), negated, m(source, c));
  }
}

RatMatrix integer_hnf(RatMatrix a) {
  std::size_t const rows = a.rows();
  std::size_t const cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = pivot_row; i < rows; ++i) {
        if (a(i, col).is_zero()) continue;
        if (best == rows || a(i, col).abs() < a(best, col).abs()) best = i;
      }
      if (best == rows) break;
      have_pivot = true;
      swap_rows(a, pivot_row, best);
      bool reduced = true;
      for (std::size_t i = pivot_row + 1; i < rows; ++i) {
        if (a(i, col).is_zero()) continue;
        Rational q = floor_div(a(i, col), a(pivot_row, col));
        subtract_row(a, i, pivot_row, q, col);
        if (!a(i, col).is_zero()) reduced = false;
      }
      if (reduced) break;
    }
    if (!have_pivot) continue;
    if (a(pivot_row, col).sign() < 0) {
      for (std::size_t c = col; c < cols; ++c) a(pivot_row, c) = -a(pivot_row, c);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      if (a(i, col).is_zero()) continue;
      Rational q = floor_div(a(i, col), a(pivot_row, col));
      subtract_row(a, i, pivot_row, q, col);
    }
    ++pivot_row;
  }
  RatMatrix out(pivot_row, cols);
  for (std::size_t r = 0; r < pivot_row; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = a(r, c);
  return out;
}

}  // namespace

RatMatrix to_rational(IntMatrix const& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

IntMatrix hermite_normal_form(IntMatrix const& generators) {
  RatMatrix h = integer_hnf(to_rational(generators));
  IntMatrix out(h.rows(), h.cols());
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c) out(r, c) = h(r, c).numerator();
  return out;
}

RatMatrix hermite_normal_form(RatMatrix const& generators) {
  mpz_class common(1);
  for (std::size_t r = 0; r < generators.rows(); ++r)
    for (std::size_t c = 0; c < generators.cols(); ++c) {
      mpz_class d = generators(r, c).denominator();
      if (d != 1) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), d.get_mpz_t());
    }
  if (common == 1) return integer_hnf(generators);
  Rational scale(common);
  RatMatrix scaled = generators;
  for (std::size_t r = 0; r < scaled.rows(); ++r)
    for (std::size_t c = 0; c < scaled.cols(); ++c) scaled(r, c) *= scale;
  RatMatrix h = integer_hnf(std::move(scaled));
  Rational inv = scale.inverse();
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c) h(r, c) *= inv;
  return h;
}

std::vector<mpz_class> smith_invariant_factors(IntMatrix const& input) {
  IntMatrix a = input;
  std::size_t const rows = a.rows();
  std::size_t const cols = a.cols();
  std::vector<mpz_class> diagonal;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero entry of minimal absolute value in the remaining block.
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        if (a(r, c) == 0) continue;
        if (pr == rows || abs(a(r, c)) < abs(a(pr, pc))) {
          pr = r;
          pc = c;
        }
      }
    if (pr == rows) break;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(t, c), a(pr, c));
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, t), a(r, pc));
    bool clean = true;
    for (std::size_t r = t + 1; r < rows; ++r) {
      if (a(r, t) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
      for (std::size_t c = t; c < cols; ++c) a(r, c) -= q * a(t, c);
      if (a(r, t) != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      if (a(t, c) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
      for (std::size_t r = t; r < rows; ++r) a(r, c) -= q * a(r, t);
      if (a(t, c) != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility: if the pivot does not divide the rest, fold a row in.
    bool divides = true;
    for (std::size_t r = t + 1; r < rows && divides; ++r)
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(r, c) % a(t, t) != 0) {
          for (std::size_t k = t; k < cols; ++k) a(t, k) += a(r, k);
          divides = false;
          break;
        }
      }
    if (!divides) continue;
    diagonal.push_back(abs(a(t, t)));
    ++t;
  }
  return diagonal;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, r, p);
    Rational inv = m(r, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      subtract_row(m, i, r, f, c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RatMatrix const& m) {
  RatMatrix copy = m;
  return row_reduce(copy).size();
}

Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  std::size_t const n = m.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      swap_rows(m, p, c);
      det = -det;
    }
    det *= m(c, c);
    Rational inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) * inv;
      subtract_row(m, i, c, f, c);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(RatMatrix const& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  std::size_t const n = m.rows();
  RatMatrix aug(n, 2 * n, Rational(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Rational(1);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

std::optional<std::vector<Rational>> solve_unique(RatMatrix const& m,
                                                  std::vector<Rational> const& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_unique: size mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  if (pivots.size() != m.cols()) throw std::invalid_argument("solve_unique: column rank deficient");
  std::vector<Rational> x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

std::optional<std::vector<Rational>> coordinates_in_echelon_basis(RatMatrix const& basis,
                                                                  std::vector<Rational> const& v) {
  if (v.size() != basis.cols()) throw std::invalid_argument("coordinates: size mismatch");
  std::vector<Rational> residual = v;
  std::vector<Rational> coords(basis.rows());
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    std::size_t pivot = 0;
    while (pivot < basis.cols() && basis(k, pivot).is_zero()) ++pivot;
    if (pivot == basis.cols()) continue;
    coords[k] = residual[pivot] / basis(k, pivot);
    if (coords[k].is_zero()) continue;
    Rational negated = -coords[k];
    for (std::size_t c = pivot; c < basis.cols(); ++c) {
      if (!basis(k, c).is_zero()) Rational::fused_multiply_add(residual[c], negated, basis(k, c));
    }
  }
  for (auto const& r : residual)
    if (!r.is_zero()) return std::nullopt;
  return coords;
}

ExtendedGcd extended_gcd(mpz_class const& a, mpz_class const& b) {
  ExtendedGcd out;
  mpz_gcdext(out.gcd.get_mpz_t(), out.x.get_mpz_t(), out.y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return out;
}

}  // namespace chevalley
