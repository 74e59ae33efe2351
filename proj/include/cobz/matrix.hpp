#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cobz/errors.hpp"
#include "cobz/numbers.hpp"

namespace cobz {

/**
 * A linear map between finite-dimensional rational vector spaces, stored
 * dense and exact: a morphism V -> W is a (dim W) x (dim V) matrix, so
 * diagrammatic composition "f then g" is the product g * f. Entries are
 * always reduced; equality is exact entry-wise equality. No floating point
 * exists anywhere in this backend.
 */
class MatrixMorphism {
 public:
  MatrixMorphism(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static MatrixMorphism identity(std::size_t n) {
    MatrixMorphism m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static MatrixMorphism scalar(Rational value) {
    MatrixMorphism m(1, 1);
    m.at(0, 0) = std::move(value);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::string to_string() const {
    std::string out =
        "rows=" + std::to_string(rows_) + "; cols=" + std::to_string(cols_) + "; entries=[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i > 0) out += ",";
      out += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j > 0) out += ",";
        out += cobz::to_string(at(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

  friend bool operator==(const MatrixMorphism&, const MatrixMorphism&) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

// Plain matrix product a * b; zero entries of a are skipped, which keeps the
// many sparse structural matrices (braidings, pairings) cheap.
inline MatrixMorphism mat_mul(const MatrixMorphism& a, const MatrixMorphism& b) {
  if (a.cols() != b.rows())
    throw BoundaryMismatch("matrix compose: inner dimensions " + std::to_string(a.cols()) +
                           " and " + std::to_string(b.rows()) + " do not match");
  MatrixMorphism out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj != 0) out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

// Kronecker product with the left factor major: basis vector (i1, i2) of
// V1 (x) V2 sits at index i1 * dim(V2) + i2.
inline MatrixMorphism kronecker(const MatrixMorphism& a, const MatrixMorphism& b) {
  MatrixMorphism out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Rational& av = a.at(i1, j1);
      if (av == 0) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const Rational& bv = b.at(i2, j2);
          if (bv != 0) out.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = av * bv;
        }
    }
  return out;
}

// Exact inverse by Gauss-Jordan elimination with exact pivots.
inline MatrixMorphism inverse_of(const MatrixMorphism& m) {
  if (m.rows() != m.cols())
    throw NotSquare("matrix inverse: " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + " matrix is not square");
  const std::size_t n = m.rows();
  MatrixMorphism a = m;
  MatrixMorphism inv = MatrixMorphism::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n)
      throw NotInvertible("matrix inverse: matrix is singular (column " + std::to_string(col) +
                          " has no pivot)");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rational scale = Rational(1) / a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a.at(row, col) == 0) continue;
      const Rational factor = a.at(row, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(row, j) -= factor * a.at(col, j);
        inv.at(row, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

// Classical trace: sum of the diagonal of a square matrix.
inline Rational classical_trace(const MatrixMorphism& m) {
  if (m.rows() != m.cols())
    throw NotSquare("trace: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                    " matrix is not square");
  Rational total(0);
  for (std::size_t i = 0; i < m.rows(); ++i) total += m.at(i, i);
  return total;
}

// Exact rational power q^k (k may be negative when q != 0).
inline Rational rational_power(const Rational& q, const Int& k) {
  if (k < 0) {
    if (q == 0) throw NotInvertible("rational power: zero has no negative powers");
    return rational_power(Rational(1) / q, Int(-k));
  }
  Rational result(1), base = q;
  Int e = k;
  while (e > 0) {
    if ((e & 1) != 0) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace cobz
