#include "rootdatum/matrix.hpp"

namespace rootdatum {

// Bareiss one-step fraction-free elimination keeps all intermediates integral.
Int det(const IMat& m) {
  if (m.nr != m.nc) throw Error("dimension_mismatch", "determinant of non-square matrix");
  int n = m.nr;
  if (n == 0) return 1;
  IMat w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

Rat det(const QMat& m) {
  if (m.nr != m.nc) throw Error("dimension_mismatch", "determinant of non-square matrix");
  int n = m.nr;
  QMat w = m;
  Rat d = 1;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (w.at(i, k) != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      d = -d;
    }
    d *= w.at(k, k);
    Rat inv = Rat(1) / w.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      Rat f = w.at(i, k) * inv;
      if (f == 0) continue;
      for (int j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
    }
  }
  return d;
}

QMat inverse(const QMat& m) {
  if (m.nr != m.nc) throw Error("dimension_mismatch", "inverse of non-square matrix");
  int n = m.nr;
  QMat w = m, inv = QMat::identity(n);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (w.at(i, k) != 0) { p = i; break; }
    if (p < 0) throw Error("singular_matrix", "matrix is singular");
    if (p != k)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(k, j), w.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rat piv = Rat(1) / w.at(k, k);
    for (int j = 0; j < n; ++j) {
      w.at(k, j) *= piv;
      inv.at(k, j) *= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || w.at(i, k) == 0) continue;
      Rat f = w.at(i, k);
      for (int j = 0; j < n; ++j) {
        w.at(i, j) -= f * w.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

QVec solve_square(const QMat& m, const QVec& b) { return inverse(m) * b; }

bool solve_rational(const QMat& m, const QVec& b, QVec& out) {
  if (size_t(m.nr) != b.size()) throw Error("dimension_mismatch", "solve shapes");
  QMat w = m;
  QVec r = b;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < w.nc && row < w.nr; ++col) {
    int p = -1;
    for (int i = row; i < w.nr; ++i)
      if (w.at(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < w.nc; ++j) std::swap(w.at(row, j), w.at(p, j));
      std::swap(r[row], r[p]);
    }
    Rat piv = Rat(1) / w.at(row, col);
    for (int j = 0; j < w.nc; ++j) w.at(row, j) *= piv;
    r[row] *= piv;
    for (int i = 0; i < w.nr; ++i) {
      if (i == row || w.at(i, col) == 0) continue;
      Rat f = w.at(i, col);
      for (int j = 0; j < w.nc; ++j) w.at(i, j) -= f * w.at(row, j);
      r[i] -= f * r[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < w.nr; ++i)
    if (r[i] != 0) return false;
  out.assign(m.nc, Rat(0));
  for (int i = 0; i < row; ++i) out[pivot_col[i]] = r[i];
  return true;
}

}  // namespace rootdatum
