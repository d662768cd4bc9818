#pragma once

#include <cstddef>
#include <vector>

#include "segrekit/gaussian_rational.hpp"
#include "segrekit/poly.hpp"

namespace segrekit {

using Vector = std::vector<GaussianRational>;
/// Row-major dense matrix over Q(i).
using Matrix = std::vector<Vector>;

std::size_t rank(Matrix m);

/// Basis of {v : m v = 0}; `cols` is needed when m has no rows.
std::vector<Vector> kernel(const Matrix& m, std::size_t cols);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a real symmetric matrix by symmetric Gaussian elimination.
Signature symmetric_signature(std::vector<std::vector<mpq_class>> a);

/// Inertia of a Hermitian matrix, computed on its real 2n x 2n realification.
/// Throws DomainError when `h` is not Hermitian.
Signature hermitian_signature(const Matrix& h);

/// Determinant of a square matrix of polynomials (cofactor expansion).
Poly determinant(const std::vector<std::vector<Poly>>& m, const TablePtr& table);

}  // namespace segrekit
