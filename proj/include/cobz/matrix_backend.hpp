#pragma once

#include <cstddef>

#include "cobz/backend.hpp"
#include "cobz/matrix.hpp"

namespace cobz {

/**
 * Finite-dimensional rational vector spaces as a symmetric monoidal backend.
 * Objects are dimensions, tensor is the Kronecker product (left factor
 * major), the braiding is the perfect-shuffle permutation matrix, and
 * scalars are 1x1 matrices.
 */
struct MatrixBackend {
  using Object = std::size_t;
  using Morphism = MatrixMorphism;

  Object unit_object() const { return 1; }
  Object tensor_object(Object a, Object b) const { return a * b; }
  Morphism identity(Object n) const { return MatrixMorphism::identity(n); }
  // Diagrammatic order: "f then g" is the matrix product g * f.
  Morphism compose(const Morphism& f, const Morphism& g) const { return mat_mul(g, f); }
  Morphism tensor(const Morphism& f, const Morphism& g) const { return kronecker(f, g); }
  // e_i (x) e_j |-> e_j (x) e_i.
  Morphism braiding(Object p, Object q) const {
    MatrixMorphism out(p * q, p * q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) out.at(j * p + i, i * q + j) = 1;
    return out;
  }
  bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
};

/**
 * Duality data for (V, f): V is its own dual, with evaluation and
 * coevaluation the standard pairing sum_i e_i* (x) e_i. Requires f square
 * and invertible; the inverse is computed exactly.
 */
inline DualizablePair<MatrixBackend> dualizable_from_matrix(const MatrixMorphism& f) {
  if (f.rows() != f.cols())
    throw NotSquare("dualizable pair: " + std::to_string(f.rows()) + "x" +
                    std::to_string(f.cols()) + " matrix is not square");
  const std::size_t n = f.rows();
  MatrixMorphism ev(1, n * n);
  MatrixMorphism coev(n * n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    ev.at(0, i * n + i) = 1;
    coev.at(i * n + i, 0) = 1;
  }
  MatrixMorphism inv = inverse_of(f);  // throws NotInvertible when singular
  return DualizablePair<MatrixBackend>{n, n, std::move(ev), std::move(coev), f, std::move(inv)};
}

}  // namespace cobz
