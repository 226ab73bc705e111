#pragma once

#include "twoloop/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace twoloop {

/// Sparse matrix over Q. Only nonzero entries are stored; indices are
/// bounds-checked on insertion.
class RationalMatrix {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Builds a matrix from dense row data; all rows must have equal length.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  /// Builds a rows x columns.size() matrix whose j-th column is columns[j].
  static RationalMatrix from_columns(std::size_t rows,
                                     const std::vector<std::vector<Rational>>& columns);
  static RationalMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::size_t nonzeros() const { return entries_.size(); }

  /// Sets (r, c); storing zero erases the entry.
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add_to(std::size_t r, std::size_t c, const Rational& value);
  [[nodiscard]] Rational at(std::size_t r, std::size_t c) const;

  [[nodiscard]] const std::map<Index, Rational>& entries() const { return entries_; }

  [[nodiscard]] RationalMatrix transpose() const;
  [[nodiscard]] RationalMatrix scaled(const Rational& factor) const;
  [[nodiscard]] RationalMatrix scale_row(std::size_t r, const Rational& factor) const;
  [[nodiscard]] RationalMatrix swap_rows(std::size_t a, std::size_t b) const;
  /// [this | other]; row counts must agree.
  [[nodiscard]] RationalMatrix hstack(const RationalMatrix& other) const;
  [[nodiscard]] std::vector<std::vector<Rational>> to_dense() const;
  [[nodiscard]] bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  void check_bounds(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Index, Rational> entries_;
};

/// Exact product a * b. Throws std::invalid_argument on a shape mismatch.
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// Rank over Q by Gaussian elimination with exact rational pivots.
std::size_t rank(const RationalMatrix& m);

/// cols(m) - rank(m).
std::size_t kernel_dim(const RationalMatrix& m);

/// True iff a * b == 0. Throws std::invalid_argument when cols(a) != rows(b).
bool is_zero_composition(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace twoloop
