#pragma once

#include "rootdatum/matrix.hpp"

namespace rootdatum {

// Gaussian rationals a + b*i.
struct GQ {
  Rat re, im;

  GQ() : re(0), im(0) {}
  GQ(int x) : re(x), im(0) {}
  GQ(long long x) : re(x), im(0) {}
  GQ(Rat r) : re(std::move(r)), im(0) {}
  GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GQ i() { return GQ(Rat(0), Rat(1)); }

  bool operator==(const GQ& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GQ& o) const { return !(*this == o); }

  GQ operator+(const GQ& o) const { return GQ(re + o.re, im + o.im); }
  GQ operator-(const GQ& o) const { return GQ(re - o.re, im - o.im); }
  GQ operator-() const { return GQ(-re, -im); }
  GQ operator*(const GQ& o) const {
    return GQ(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GQ& operator+=(const GQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GQ& operator-=(const GQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GQ& operator*=(const GQ& o) { return *this = *this * o; }

  GQ conj() const { return GQ(re, -im); }
  Rat norm() const { return re * re + im * im; }

  GQ inv() const {
    Rat n = norm();
    if (n == 0) throw Error("division_by_zero", "inverse of zero Gaussian rational");
    return GQ(re / n, -im / n);
  }
  GQ operator/(const GQ& o) const { return *this * o.inv(); }

  // total order used only for canonical representatives
  bool operator<(const GQ& o) const {
    if (re != o.re) return re < o.re;
    return im < o.im;
  }
};

inline GQ pow(const GQ& x, long long e) {
  if (e < 0) return pow(x.inv(), -e);
  GQ acc(1), base = x;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

using GMat = Mat<GQ>;

// Gauss-Jordan inverse over any exact field element type with operator/.
template <class T>
Mat<T> field_inverse(const Mat<T>& m) {
  if (m.nr != m.nc) throw Error("dimension_mismatch", "inverse of non-square matrix");
  int n = m.nr;
  Mat<T> w = m, inv = Mat<T>::identity(n);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!(w.at(i, k) == T(0))) { p = i; break; }
    if (p < 0) throw Error("singular_matrix", "matrix is singular");
    if (p != k)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(k, j), w.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    T piv = T(1) / w.at(k, k);
    for (int j = 0; j < n; ++j) {
      w.at(k, j) = w.at(k, j) * piv;
      inv.at(k, j) = inv.at(k, j) * piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || w.at(i, k) == T(0)) continue;
      T f = w.at(i, k);
      for (int j = 0; j < n; ++j) {
        w.at(i, j) = w.at(i, j) - f * w.at(k, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(k, j);
      }
    }
  }
  return inv;
}

}  // namespace rootdatum
