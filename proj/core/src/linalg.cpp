#include "hilbcenter/linalg.hpp"

#include <sstream>
#include <utility>

#include "hilbcenter/errors.hpp"

namespace hilbcenter {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(std::vector<std::vector<Rat>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw InputError("matrix rows have unequal lengths");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_)
    throw InputError("matrix product dimension mismatch");
  QMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InputError("matrix difference dimension mismatch");
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] - other.data_[i];
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

QMatrix QMatrix::negated() const {
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

QMatrix QMatrix::inverse() const {
  if (!is_square()) throw InputError("only square matrices can be inverted");
  std::size_t n = rows_;
  QMatrix a = *this;
  QMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw InputError("matrix is singular");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rat p = a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      Rat f = a.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool QMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::string QMatrix::key() const {
  std::ostringstream os;
  os << rows_ << 'x' << cols_ << ':';
  for (const Rat& q : data_) os << q.get_str() << ',';
  return os.str();
}

Json QMatrix::to_json() const {
  Json j = Json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    Json row = Json::array();
    for (std::size_t jj = 0; jj < cols_; ++jj)
      row.push_back(rat_to_string(at(i, jj)));
    j.push_back(std::move(row));
  }
  return j;
}

QMatrix QMatrix::from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw InputError("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rat>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("matrix row must be an array");
    std::vector<Rat> r;
    for (const auto& entry : row) {
      if (entry.is_number_integer())
        r.push_back(Rat(entry.get<long>()));
      else if (entry.is_string())
        r.push_back(rat_from_string(entry.get<std::string>()));
      else
        throw InputError("matrix entries must be integers or 'p/q' strings");
    }
    rows.push_back(std::move(r));
  }
  return from_rows(std::move(rows));
}

std::size_t exact_rank(const QMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; scaling a row by a nonzero integer does
  // not change the rank.
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const Int& den = m.at(i, j).get_den();
      Int g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / g * den;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      Rat scaled = m.at(i, j) * Rat(lcm);
      a[i][j] = scaled.get_num();
    }
  }

  // Fraction-free elimination: entries stay integral because each 2x2 cross
  // term is divisible by the previous pivot (Sylvester's identity).  Full
  // pivot search keeps the reduction going past zero pivots, so the number
  // of elimination steps is exactly the rank.
  Int prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t step = 0; step < std::min(rows, cols); ++step) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = step; i < rows && pr == rows; ++i)
      for (std::size_t j = step; j < cols; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    ++rank;
    std::swap(a[step], a[pr]);
    if (pc != step)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][step], a[i][pc]);
    const Int pivot = a[step][step];
    for (std::size_t i = step + 1; i < rows; ++i) {
      for (std::size_t j = step + 1; j < cols; ++j) {
        Int t = a[i][j] * pivot - a[i][step] * a[step][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(),
                     prev_pivot.get_mpz_t());
      }
      a[i][step] = 0;
    }
    prev_pivot = pivot;
  }
  return rank;
}

}  // namespace hilbcenter
