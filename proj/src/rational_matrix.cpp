#include "twoloop/rational_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace twoloop {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) {
      throw std::invalid_argument("RationalMatrix::from_rows: ragged rows");
    }
    for (std::size_t c = 0; c < ncols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows,
                                            const std::vector<std::vector<Rational>>& columns) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw std::invalid_argument("RationalMatrix::from_columns: column " + std::to_string(c) +
                                  " has wrong length");
    }
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void RationalMatrix::check_bounds(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("RationalMatrix: index (" + std::to_string(r) + "," +
                            std::to_string(c) + ") outside " + std::to_string(rows_) + "x" +
                            std::to_string(cols_));
  }
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  check_bounds(r, c);
  if (value.is_zero()) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = value;
  }
}

void RationalMatrix::add_to(std::size_t r, std::size_t c, const Rational& value) {
  check_bounds(r, c);
  if (value.is_zero()) return;
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    entries_.emplace(Index{r, c}, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) entries_.erase(it);
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
  check_bounds(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational{} : it->second;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (const auto& [idx, v] : entries_) t.entries_.emplace(Index{idx.second, idx.first}, v);
  return t;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix s(rows_, cols_);
  if (factor.is_zero()) return s;
  for (const auto& [idx, v] : entries_) s.entries_.emplace(idx, v * factor);
  return s;
}

RationalMatrix RationalMatrix::scale_row(std::size_t r, const Rational& factor) const {
  if (r >= rows_) throw std::out_of_range("RationalMatrix::scale_row");
  RationalMatrix s(rows_, cols_);
  for (const auto& [idx, v] : entries_) s.set(idx.first, idx.second, idx.first == r ? v * factor : v);
  return s;
}

RationalMatrix RationalMatrix::swap_rows(std::size_t a, std::size_t b) const {
  if (a >= rows_ || b >= rows_) throw std::out_of_range("RationalMatrix::swap_rows");
  RationalMatrix s(rows_, cols_);
  for (const auto& [idx, v] : entries_) {
    std::size_t r = idx.first;
    if (r == a) {
      r = b;
    } else if (r == b) {
      r = a;
    }
    s.entries_.emplace(Index{r, idx.second}, v);
  }
  return s;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& other) const {
  if (other.rows_ != rows_) throw std::invalid_argument("RationalMatrix::hstack: row mismatch");
  RationalMatrix s(rows_, cols_ + other.cols_);
  s.entries_ = entries_;
  for (const auto& [idx, v] : other.entries_) {
    s.entries_.emplace(Index{idx.first, idx.second + cols_}, v);
  }
  return s;
}

std::vector<std::vector<Rational>> RationalMatrix::to_dense() const {
  std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_));
  for (const auto& [idx, v] : entries_) d[idx.first][idx.second] = v;
  return d;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("multiply: shape mismatch " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
  std::vector<std::vector<std::pair<std::size_t, const Rational*>>> b_rows(b.rows());
  for (const auto& [idx, v] : b.entries()) b_rows[idx.first].emplace_back(idx.second, &v);

  RationalMatrix p(a.rows(), b.cols());
  for (const auto& [idx, av] : a.entries()) {
    for (const auto& [col, bv] : b_rows[idx.second]) p.add_to(idx.first, col, av * *bv);
  }
  return p;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.is_zero()) return 0;
  // Eliminate along the smaller dimension.
  auto rows = (m.rows() <= m.cols() ? m : m.transpose()).to_dense();
  const std::size_t nrows = rows.size();
  const std::size_t ncols = rows.front().size();

  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t pivot = r;
    while (pivot < nrows && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == nrows) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational inv = rows[r][c].inverse();
    for (std::size_t i = r + 1; i < nrows; ++i) {
      if (rows[i][c].is_zero()) continue;
      const Rational factor = rows[i][c] * inv;
      for (std::size_t j = c; j < ncols; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= factor * rows[r][j];
      }
    }
    ++r;
  }
  return r;
}

std::size_t kernel_dim(const RationalMatrix& m) { return m.cols() - rank(m); }

bool is_zero_composition(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("is_zero_composition: cols(A) != rows(B)");
  }
  return multiply(a, b).is_zero();
}

}  // namespace twoloop
