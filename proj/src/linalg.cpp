#include "segrekit/linalg.hpp"

#include "segrekit/errors.hpp"

namespace segrekit {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    GaussianRational inv = m[row][col].inverse();
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      GaussianRational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  return row_reduce(m, m.front().size()).size();
}

std::vector<Vector> kernel(const Matrix& m, std::size_t cols) {
  Matrix r = m;
  auto pivots = row_reduce(r, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, GaussianRational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r[k][free];
    out.push_back(std::move(v));
  }
  return out;
}

Signature symmetric_signature(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t k = 0; k < n && piv == n; ++k) {
      if (!done[k] && sgn(a[k][k]) != 0) piv = k;
    }
    if (piv == n) {
      // Zero diagonal: combine two indices with a nonzero off-diagonal entry.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i && !done[j] && sgn(a[i][j]) != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) break;
      // Row/column i += row/column j.
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      piv = pi;
    }
    const mpq_class d = a[piv][piv];
    if (sgn(d) > 0) ++sig.positive;
    else ++sig.negative;
    done[piv] = true;
    // Schur complement on the remaining indices.
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || sgn(a[r][piv]) == 0) continue;
      mpq_class f = a[r][piv] / d;
      for (std::size_t c = 0; c < n; ++c) {
        if (!done[c]) a[r][c] -= f * a[piv][c];
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r != piv) {
        a[r][piv] = 0;
        a[piv][r] = 0;
      }
    }
  }
  sig.zero = static_cast<int>(n) - sig.positive - sig.negative;
  return sig;
}

Signature hermitian_signature(const Matrix& h) {
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i].size() != n) throw DomainError("Hermitian matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (h[i][j] != h[j][i].conj()) throw DomainError("matrix is not Hermitian");
    }
  }
  // v = x + iy: v* H v = [x;y]^T [[A, -B], [B, A]] [x;y] with H = A + iB.
  std::vector<std::vector<mpq_class>> real(2 * n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      real[i][j] = h[i][j].re();
      real[i + n][j + n] = h[i][j].re();
      real[i][j + n] = -h[i][j].im();
      real[i + n][j] = h[i][j].im();
    }
  }
  Signature s = symmetric_signature(std::move(real));
  return {s.positive / 2, s.negative / 2, s.zero / 2};
}

Poly determinant(const std::vector<std::vector<Poly>>& m, const TablePtr& table) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(table, 1);
  if (n == 1) return m[0][0];
  Poly out(table);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    Poly term = m[0][c] * determinant(minor, table);
    if (c % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

}  // namespace segrekit
