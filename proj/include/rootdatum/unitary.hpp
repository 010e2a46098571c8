#pragma once

#include <utility>
#include <vector>

#include "rootdatum/fp.hpp"
#include "rootdatum/gaussian.hpp"

namespace rootdatum {

template <class T>
T field_pow(T x, long long e) {
  if (e < 0) return field_pow(x.inv(), -e);
  T acc(1), base = std::move(x);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

template <class T>
Mat<T> scaled(const Mat<T>& m, const T& s) {
  Mat<T> out = m;
  for (auto& x : out.a) x = x * s;
  return out;
}

// Antidiagonal alternating matrix, +1 in the top-right corner; satisfies
// Phi^{-1} = Phi^t = (-1)^{n-1} Phi, checked on every construction.
template <class T>
Mat<T> phi_matrix(int n) {
  if (n < 1) throw Error("unsupported", "phi_matrix needs n >= 1");
  Mat<T> phi(n, n);
  for (int i = 0; i < n; ++i) phi.at(i, n - 1 - i) = (i % 2 == 0) ? T(1) : T(-1);
  T sign = (n % 2 == 1) ? T(1) : T(-1);
  Mat<T> t = transpose(phi);
  if (!(t == scaled(phi, sign)) || !(phi * t == Mat<T>::identity(n)))
    throw Error("construction_failure", "phi identities failed");
  return phi;
}

template <class T>
void check_element(const Mat<T>& g, const T& mu, int gamma) {
  if (g.nr != g.nc || g.nr < 1) throw Error("invalid_element", "matrix part must be square");
  if (mu == T(0)) throw Error("invalid_element", "similitude scalar must be nonzero");
  if (gamma != 0 && gamma != 1) throw Error("invalid_element", "gamma must be 0 or 1");
}

// Element (g, mu) x gamma of (GL_n x Gm) x Gamma, Gamma = {1, c} acting by
// (g, mu)^c = (mu g^{-t}, mu).
template <class T>
struct GnElement {
  Mat<T> g;
  T mu = T(1);
  int gamma = 0;

  bool operator==(const GnElement&) const = default;
};

template <class T>
GnElement<T> make_gn(Mat<T> g, T mu, int gamma) {
  check_element(g, mu, gamma);
  return {std::move(g), std::move(mu), gamma};
}

template <class T>
GnElement<T> gn_identity(int n, const T& one) {
  Mat<T> g(n, n);
  for (int i = 0; i < n; ++i) g.at(i, i) = one;
  return {std::move(g), one, 0};
}

template <class T>
std::pair<Mat<T>, T> gn_pair_c(const Mat<T>& g, const T& mu) {
  return {scaled(transpose(field_inverse(g)), mu), mu};
}

template <class T>
GnElement<T> gn_mul(const GnElement<T>& a, const GnElement<T>& b) {
  if (a.g.nr != b.g.nr || a.g.nc != b.g.nc)
    throw Error("dimension_mismatch", "elements of different rank");
  Mat<T> bg = b.g;
  T bmu = b.mu;
  if (a.gamma) {
    auto acted = gn_pair_c(bg, bmu);
    bg = std::move(acted.first);
    bmu = std::move(acted.second);
  }
  return {a.g * bg, a.mu * bmu, a.gamma ^ b.gamma};
}

template <class T>
GnElement<T> gn_inverse(const GnElement<T>& x) {
  Mat<T> gi = field_inverse(x.g);
  T mi = x.mu.inv();
  if (x.gamma) {
    auto acted = gn_pair_c(gi, mi);
    gi = std::move(acted.first);
    mi = std::move(acted.second);
  }
  return {std::move(gi), std::move(mi), x.gamma};
}

// Class of (g, mu) x gamma modulo the central identification
// (g, mu) ~ ((-1)^{n-1} g, -mu), Gamma acting by (g, mu)^c =
// (Phi g^{-t} Phi^{-1}, mu). Stored as the lexicographically smaller of the
// two representatives (matrix entries row-major, then the scalar).
template <class T>
struct CUElement {
  Mat<T> g;
  T mu = T(1);
  int gamma = 0;

  bool operator==(const CUElement&) const = default;
};

template <class T>
bool rep_less(const Mat<T>& g1, const T& m1, const Mat<T>& g2, const T& m2) {
  for (size_t i = 0; i < g1.a.size(); ++i) {
    if (g1.a[i] < g2.a[i]) return true;
    if (g2.a[i] < g1.a[i]) return false;
  }
  return m1 < m2;
}

template <class T>
CUElement<T> make_cu(Mat<T> g, T mu, int gamma) {
  check_element(g, mu, gamma);
  T sign = (g.nr % 2 == 1) ? T(1) : T(-1);
  Mat<T> g2 = scaled(g, sign);
  T mu2 = -mu;
  if (rep_less(g2, mu2, g, mu)) return {std::move(g2), std::move(mu2), gamma};
  return {std::move(g), std::move(mu), gamma};
}

template <class T>
CUElement<T> cu_identity(int n, const T& one) {
  Mat<T> g(n, n);
  for (int i = 0; i < n; ++i) g.at(i, i) = one;
  return make_cu(std::move(g), one, 0);
}

template <class T>
std::pair<Mat<T>, T> cu_pair_c(const Mat<T>& g, const T& mu) {
  Mat<T> phi = phi_matrix<T>(g.nr);
  return {phi * transpose(field_inverse(g)) * transpose(phi), mu};
}

template <class T>
CUElement<T> cu_mul(const CUElement<T>& a, const CUElement<T>& b) {
  if (a.g.nr != b.g.nr || a.g.nc != b.g.nc)
    throw Error("dimension_mismatch", "elements of different rank");
  Mat<T> bg = b.g;
  T bmu = b.mu;
  if (a.gamma) {
    auto acted = cu_pair_c(bg, bmu);
    bg = std::move(acted.first);
    bmu = std::move(acted.second);
  }
  return make_cu(a.g * bg, a.mu * bmu, a.gamma ^ b.gamma);
}

template <class T>
CUElement<T> cu_inverse(const CUElement<T>& x) {
  Mat<T> gi = field_inverse(x.g);
  T mi = x.mu.inv();
  if (x.gamma) {
    auto acted = cu_pair_c(gi, mi);
    gi = std::move(acted.first);
    mi = std::move(acted.second);
  }
  return make_cu(std::move(gi), std::move(mi), x.gamma);
}

// j((g, mu) x gamma) = (g mu^{1-n} Phi^gamma, mu^{2(1-n)} ((-1)^{n-1})^gamma)
// x gamma. Computed from both representatives of the class and compared, so
// well-definedness is checked on every call.
template <class T>
GnElement<T> j_map(const CUElement<T>& x) {
  int n = x.g.nr;
  auto image = [&](const Mat<T>& g, const T& mu) {
    Mat<T> h = scaled(g, field_pow(mu, 1 - n));
    T m = field_pow(mu, 2 * (1 - n));
    if (x.gamma) {
      h = h * phi_matrix<T>(n);
      if (n % 2 == 0) m = -m;
    }
    return GnElement<T>{std::move(h), std::move(m), x.gamma};
  };
  T sign = (n % 2 == 1) ? T(1) : T(-1);
  GnElement<T> a = image(x.g, x.mu);
  GnElement<T> b = image(scaled(x.g, sign), -x.mu);
  if (!(a == b)) throw Error("construction_failure", "j is not constant on the class");
  return a;
}

// The character the central Gm maps onto: kills the identified element,
// restricts to squaring.
template <class T>
T d_map(const CUElement<T>& x) {
  return x.mu * x.mu;
}

// Projection onto the Gm factor.
template <class T>
T multiplier(const GnElement<T>& x) {
  return x.mu;
}

// Section of j x d: ((h, mu) x gamma, lam) -> (h Phi^{-gamma} sqrt^{n-1},
// sqrt) x gamma for either square root of lam; the two choices land in the
// same class (checked). The mu of the input plays no role.
template <class T>
CUElement<T> j_prime(const GnElement<T>& x, const T& lam, const T& sqrt_choice) {
  if (!(sqrt_choice * sqrt_choice == lam))
    throw Error("not_a_square", "sqrt_choice does not square to lam");
  if (sqrt_choice == T(0)) throw Error("invalid_element", "lam must be nonzero");
  int n = x.g.nr;
  auto lift = [&](const T& r) {
    Mat<T> h = x.g;
    if (x.gamma) h = h * transpose(phi_matrix<T>(n));
    return make_cu(scaled(h, field_pow(r, n - 1)), r, x.gamma);
  };
  CUElement<T> a = lift(sqrt_choice);
  CUElement<T> b = lift(-sqrt_choice);
  if (!(a == b)) throw Error("construction_failure", "lift depends on the square root choice");
  return a;
}

// Kernel classes of j over F_p: the (zeta^{n-1} I, zeta) with zeta^{2(n-1)}
// = 1, in ascending order of the scan; exactly n - 1 of them. Requires
// p = 1 mod 2(n-1) (error "field_too_small").
std::vector<CUElement<FpElt>> kernel_of_j(int n, long long p);

}  // namespace rootdatum
