#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hilbcenter/json.hpp"
#include "hilbcenter/rational.hpp"

namespace hilbcenter {

/// Dense matrix over the exact rationals.  Just enough linear algebra for
/// finite symplectic matrix groups: products, transpose, inverse, and an
/// exact rank.  Sizes stay small (group dimensions), so no effort is spent
/// on sparsity.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);  // zero-filled

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(std::vector<std::vector<Rat>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator-(const QMatrix& other) const;
  QMatrix transpose() const;
  QMatrix negated() const;

  /// Gauss-Jordan inverse; throws InputError on a singular or non-square
  /// matrix.
  QMatrix inverse() const;

  bool is_square() const { return rows_ == cols_; }
  bool is_identity() const;
  bool operator==(const QMatrix& other) const = default;

  /// Canonical serialization ("r x c:a,b,...") used as a hash key when
  /// enumerating matrix groups.
  std::string key() const;

  Json to_json() const;  // rows of rational strings
  static QMatrix from_json(const Json& j);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Exact rank.  Rows are first scaled integral, then reduced by fraction-free
/// (Bareiss) elimination with full pivot search, so no rational arithmetic
/// and no intermediate blowup beyond minor sizes.
std::size_t exact_rank(const QMatrix& m);

}  // namespace hilbcenter
