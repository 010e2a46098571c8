#pragma once

#include <initializer_list>

#include "rootdatum/numeric.hpp"

namespace rootdatum {

// Dense row-major matrix over an exact scalar type.
template <class T>
struct Mat {
  int nr = 0, nc = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : nr(r), nc(c), a(size_t(r) * size_t(c), T(0)) {}
  Mat(int r, int c, std::vector<T> v) : nr(r), nc(c), a(std::move(v)) {
    if (a.size() != size_t(r) * size_t(c))
      throw Error("dimension_mismatch", "matrix data size does not match shape");
  }

  T& at(int i, int j) { return a[size_t(i) * nc + j]; }
  const T& at(int i, int j) const { return a[size_t(i) * nc + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::vector<T> row(int i) const {
    std::vector<T> r(nc);
    for (int j = 0; j < nc; ++j) r[j] = at(i, j);
    return r;
  }

  std::vector<T> col(int j) const {
    std::vector<T> c(nr);
    for (int i = 0; i < nr; ++i) c[i] = at(i, j);
    return c;
  }

  void set_col(int j, const std::vector<T>& v) {
    for (int i = 0; i < nr; ++i) at(i, j) = v[i];
  }

  bool operator==(const Mat& o) const { return nr == o.nr && nc == o.nc && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
  if (x.nc != y.nr) throw Error("dimension_mismatch", "matrix product shapes");
  Mat<T> z(x.nr, y.nc);
  for (int i = 0; i < x.nr; ++i)
    for (int k = 0; k < x.nc; ++k) {
      const T& xik = x.at(i, k);
      if (xik == T(0)) continue;
      for (int j = 0; j < y.nc; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

template <class T>
std::vector<T> operator*(const Mat<T>& m, const std::vector<T>& v) {
  if (size_t(m.nc) != v.size()) throw Error("dimension_mismatch", "matrix-vector shapes");
  std::vector<T> out(m.nr, T(0));
  for (int i = 0; i < m.nr; ++i)
    for (int j = 0; j < m.nc; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

template <class T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
  if (x.nr != y.nr || x.nc != y.nc) throw Error("dimension_mismatch", "matrix sum shapes");
  Mat<T> z(x.nr, x.nc);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
  return z;
}

template <class T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
  if (x.nr != y.nr || x.nc != y.nc) throw Error("dimension_mismatch", "matrix diff shapes");
  Mat<T> z(x.nr, x.nc);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
  return z;
}

template <class T>
Mat<T> transpose(const Mat<T>& m) {
  Mat<T> t(m.nc, m.nr);
  for (int i = 0; i < m.nr; ++i)
    for (int j = 0; j < m.nc; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

inline QMat to_qmat(const IMat& m) {
  QMat q(m.nr, m.nc);
  for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
  return q;
}

inline QVec mul(const IMat& m, const QVec& v) { return to_qmat(m) * v; }

// Horizontal concatenation [x | y].
template <class T>
Mat<T> hcat(const Mat<T>& x, const Mat<T>& y) {
  if (x.nr != y.nr) throw Error("dimension_mismatch", "hcat row counts");
  Mat<T> z(x.nr, x.nc + y.nc);
  for (int i = 0; i < x.nr; ++i) {
    for (int j = 0; j < x.nc; ++j) z.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.nc; ++j) z.at(i, x.nc + j) = y.at(i, j);
  }
  return z;
}

template <class T>
Mat<T> vcat(const Mat<T>& x, const Mat<T>& y) {
  if (x.nc != y.nc) throw Error("dimension_mismatch", "vcat column counts");
  Mat<T> z(x.nr + y.nr, x.nc);
  for (int i = 0; i < x.nr; ++i)
    for (int j = 0; j < x.nc; ++j) z.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.nr; ++i)
    for (int j = 0; j < x.nc; ++j) z.at(x.nr + i, j) = y.at(i, j);
  return z;
}

// Block diagonal [x 0; 0 y].
template <class T>
Mat<T> dsum(const Mat<T>& x, const Mat<T>& y) {
  Mat<T> z(x.nr + y.nr, x.nc + y.nc);
  for (int i = 0; i < x.nr; ++i)
    for (int j = 0; j < x.nc; ++j) z.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.nr; ++i)
    for (int j = 0; j < y.nc; ++j) z.at(x.nr + i, x.nc + j) = y.at(i, j);
  return z;
}

// Fraction-free determinant (Bareiss).
Int det(const IMat& m);
Rat det(const QMat& m);

// Inverse of a nonsingular rational matrix.
QMat inverse(const QMat& m);

// Unique solution of m*x = b for nonsingular square m.
QVec solve_square(const QMat& m, const QVec& b);

// Rational column span membership: does m*x = b admit any rational solution?
// Returns one solution if so.
bool solve_rational(const QMat& m, const QVec& b, QVec& out);

inline IMat imat_from(std::initializer_list<std::initializer_list<long long>> rows) {
  int nr = int(rows.size());
  int nc = nr ? int(rows.begin()->size()) : 0;
  IMat m(nr, nc);
  int i = 0;
  for (const auto& r : rows) {
    if (int(r.size()) != nc) throw Error("dimension_mismatch", "ragged initializer");
    int j = 0;
    for (long long v : r) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

inline IVec ivec_from(std::initializer_list<long long> xs) {
  IVec v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace rootdatum
