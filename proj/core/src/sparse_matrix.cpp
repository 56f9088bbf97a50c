#include "chevalley/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevalley {
namespace {

bool entry_less(SparseEntry const& e, std::uint32_t col) { return e.col < col; }

// Dense scratch row reused across the rows of a product.
class Accumulator {
 public:
  explicit Accumulator(std::size_t width) : values_(width), used_(width, false) {}

  void add_product(std::uint32_t col, Rational const& a, Rational const& b) {
    if (!used_[col]) {
      used_[col] = true;
      touched_.push_back(col);
      values_[col] = a * b;
    } else {
      Rational::fused_multiply_add(values_[col], a, b);
    }
  }

  void add(std::uint32_t col, Rational const& a) {
    if (!used_[col]) {
      used_[col] = true;
      touched_.push_back(col);
      values_[col] = a;
    } else {
      values_[col] += a;
    }
  }

  SparseMatrix::Row drain() {
    std::sort(touched_.begin(), touched_.end());
    SparseMatrix::Row row;
    row.reserve(touched_.size());
    for (auto col : touched_) {
      used_[col] = false;
      if (!values_[col].is_zero()) row.push_back({col, std::move(values_[col])});
      values_[col] = Rational();
    }
    touched_.clear();
    return row;
  }

 private:
  std::vector<Rational> values_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({static_cast<std::uint32_t>(i), 1});
  return m;
}

SparseMatrix SparseMatrix::diagonal(std::vector<Rational> const& entries) {
  SparseMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].is_zero()) m.rows_[i].push_back({static_cast<std::uint32_t>(i), entries[i]});
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(RatMatrix const& dense) {
  SparseMatrix m(dense.rows(), dense.cols());
  for (std::size_t r = 0; r < dense.rows(); ++r)
    for (std::size_t c = 0; c < dense.cols(); ++c)
      if (!dense(r, c).is_zero()) m.rows_[r].push_back({static_cast<std::uint32_t>(c), dense(r, c)});
  return m;
}

SparseMatrix SparseMatrix::direct_sum(std::vector<SparseMatrix> const& blocks) {
  std::size_t total_rows = 0;
  std::size_t total_cols = 0;
  for (auto const& b : blocks) {
    total_rows += b.rows();
    total_cols += b.cols();
  }
  SparseMatrix m(total_rows, total_cols);
  std::size_t row_offset = 0;
  std::size_t col_offset = 0;
  for (auto const& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      auto& out = m.rows_[row_offset + r];
      out.reserve(b.rows_[r].size());
      for (auto const& e : b.rows_[r])
        out.push_back({static_cast<std::uint32_t>(e.col + col_offset), e.value});
    }
    row_offset += b.rows();
    col_offset += b.cols();
  }
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (auto const& r : rows_) total += r.size();
  return total;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto const& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(c), entry_less);
  if (it != row.end() && it->col == c) return it->value;
  return Rational(0);
}

void SparseMatrix::set_row(std::size_t r, Row row) { rows_.at(r) = std::move(row); }

void SparseMatrix::set(std::size_t r, std::size_t c, Rational value) {
  if (c >= cols_) throw std::out_of_range("SparseMatrix::set column");
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(c), entry_less);
  if (it != row.end() && it->col == c) {
    if (value.is_zero()) {
      row.erase(it);
    } else {
      it->value = std::move(value);
    }
  } else if (!value.is_zero()) {
    row.insert(it, {static_cast<std::uint32_t>(c), std::move(value)});
  }
}

RatMatrix SparseMatrix::to_dense() const {
  RatMatrix out(rows(), cols_, Rational(0));
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto const& e : rows_[r]) out(r, e.col) = e.value;
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto const& e : rows_[r]) t.rows_[e.col].push_back({static_cast<std::uint32_t>(r), e.value});
  return t;
}

SparseMatrix SparseMatrix::block(std::size_t row_begin, std::size_t row_end,
                                 std::size_t col_begin, std::size_t col_end) const {
  SparseMatrix out(row_end - row_begin, col_end - col_begin);
  for (std::size_t r = row_begin; r < row_end; ++r) {
    auto const& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(col_begin),
                               entry_less);
    for (; it != row.end() && it->col < col_end; ++it)
      out.rows_[r - row_begin].push_back(
          {static_cast<std::uint32_t>(it->col - col_begin), it->value});
  }
  return out;
}

bool SparseMatrix::is_integral() const {
  for (auto const& row : rows_)
    for (auto const& e : row)
      if (!e.value.is_integer()) return false;
  return true;
}

bool SparseMatrix::is_identity() const {
  if (rows() != cols_) return false;
  for (std::size_t r = 0; r < rows(); ++r) {
    auto const& row = rows_[r];
    if (row.size() != 1 || row[0].col != r || !row[0].value.is_one()) return false;
  }
  return true;
}

std::vector<Rational> SparseMatrix::apply(std::vector<Rational> const& v) const {
  if (v.size() != cols_) throw std::invalid_argument("SparseMatrix::apply: size mismatch");
  std::vector<Rational> out(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (auto const& e : rows_[r])
      if (!v[e.col].is_zero()) Rational::fused_multiply_add(out[r], e.value, v[e.col]);
  return out;
}

std::vector<Rational> SparseMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = at(r, c);
  return out;
}

SparseMatrix& SparseMatrix::operator*=(Rational const& scalar) {
  if (scalar.is_zero()) {
    for (auto& row : rows_) row.clear();
    return *this;
  }
  for (auto& row : rows_)
    for (auto& e : row) e.value *= scalar;
  return *this;
}

void SparseMatrix::scale_columns(std::vector<Rational> const& factors) {
  if (factors.size() != cols_) throw std::invalid_argument("scale_columns: size mismatch");
  for (auto& row : rows_) {
    Row out;
    out.reserve(row.size());
    for (auto& e : row) {
      Rational v = e.value * factors[e.col];
      if (!v.is_zero()) out.push_back({e.col, std::move(v)});
    }
    row = std::move(out);
  }
}

SparseMatrix operator*(SparseMatrix const& a, SparseMatrix const& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("SparseMatrix: dimension mismatch");
  SparseMatrix out(a.rows(), b.cols());
  Accumulator acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto const& arow = a.rows_[i];
    if (arow.empty()) continue;
    for (auto const& ae : arow)
      for (auto const& be : b.rows_[ae.col]) acc.add_product(be.col, ae.value, be.value);
    out.rows_[i] = acc.drain();
  }
  return out;
}

SparseMatrix SparseMatrix::add_scaled(SparseMatrix const& other, Rational const& scalar) const {
  if (rows() != other.rows() || cols_ != other.cols_)
    throw std::invalid_argument("SparseMatrix: dimension mismatch in sum");
  SparseMatrix out(rows(), cols_);
  if (scalar.is_zero()) {
    out.rows_ = rows_;
    return out;
  }
  for (std::size_t r = 0; r < rows(); ++r) {
    auto const& x = rows_[r];
    auto const& y = other.rows_[r];
    auto& dest = out.rows_[r];
    dest.reserve(x.size() + y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
        dest.push_back(x[i++]);
      } else if (i == x.size() || y[j].col < x[i].col) {
        dest.push_back({y[j].col, scalar * y[j].value});
        ++j;
      } else {
        Rational v = x[i].value;
        Rational::fused_multiply_add(v, scalar, y[j].value);
        if (!v.is_zero()) dest.push_back({x[i].col, std::move(v)});
        ++i;
        ++j;
      }
    }
  }
  return out;
}

SparseMatrix operator+(SparseMatrix const& a, SparseMatrix const& b) { return a.add_scaled(b, 1); }

SparseMatrix operator-(SparseMatrix const& a, SparseMatrix const& b) {
  return a.add_scaled(b, -1);
}

bool operator==(SparseMatrix const& a, SparseMatrix const& b) {
  if (a.rows() != b.rows() || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto const& x = a.rows_[r];
    auto const& y = b.rows_[r];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].col != y[k].col || !(x[k].value == y[k].value)) return false;
  }
  return true;
}

SparseMatrix commutator(SparseMatrix const& a, SparseMatrix const& b) { return a * b - b * a; }

}  // namespace chevalley
