#pragma once

#include <optional>

#include "rootdatum/algebraicity.hpp"

namespace rootdatum {

// Exact scalar c * p^(e/2) at a fixed prime p, with c rational and e the
// integer numerator of the half-integral exponent. The normal form keeps e in
// {0, 1}, folding whole powers of p into c; zero is (0, 0). Addition is a
// partial operation: it requires equal exponent parity (error
// "parity_mismatch"), which is all the classical formulas ever need.
struct SqrtPScalar {
  long long p = 2;
  Rat c = 0;
  int e = 0;

  SqrtPScalar() = default;
  SqrtPScalar(long long prime, Rat coeff, long long halfexp);

  bool is_zero() const { return c == 0; }
  bool is_rational() const { return e == 0; }
  Rat rational_value() const;

  SqrtPScalar inv() const;  // error "division_by_zero"
  SqrtPScalar operator*(const SqrtPScalar& o) const;
  SqrtPScalar operator/(const SqrtPScalar& o) const { return *this * o.inv(); }
  SqrtPScalar operator+(const SqrtPScalar& o) const;
  SqrtPScalar operator-() const;
  bool operator==(const SqrtPScalar&) const = default;
};

// p^(halfexp/2)
SqrtPScalar sqrtp_power(long long p, long long halfexp);

// Characteristic polynomial X^n + coeffs[0] X^(n-1) + ... + coeffs[n-1] of a
// semisimple conjugacy class in GL_n attached to one unramified prime.
struct SatakeParamGL {
  long long p = 2;
  int n = 0;
  std::vector<SqrtPScalar> coeffs;

  bool operator==(const SatakeParamGL&) const = default;
};

// Shape, shared prime, nonzero constant coefficient (invertible class),
// primality of p.
void validate(const SatakeParamGL& s);

// The normalization is pinned to geometric Frobenius throughout. Switching to
// arithmetic Frobenius inverts the class, so every eigenvalue exponent flips
// sign: on the characteristic polynomial this reverses the coefficients and
// rescales to monic.
SatakeParamGL frobenius_flip(const SatakeParamGL& s);

// Class with the given nonzero eigenvalues: expands prod(X - ev_i) exactly.
// Mixed exponent parities surface as "parity_mismatch" from the partial
// addition while forming symmetric functions.
SatakeParamGL satake_from_eigenvalues(long long p, const std::vector<SqrtPScalar>& ev);

// trace of the class = -(X^(n-1) coefficient)
SqrtPScalar satake_trace(const SatakeParamGL& s);

enum class GL2Kind { holomorphic, maass_langlands_tunnell };

// A classical eigenform family twisted by |det|^s: holomorphic of weight
// k >= 2, or the weight-zero Maass forms attached to an odd 2-dimensional
// Galois representation with solvable image. a_p are exact rationals.
struct GL2FamilySpec {
  GL2Kind kind = GL2Kind::holomorphic;
  int k = 2;  // holomorphic only
  Rat s = 0;
  std::vector<std::pair<long long, Rat>> hecke;  // (p, a_p)
};

void validate(const GL2FamilySpec& f);

// Eigenvalues of the Hecke operators T_p and S_p on the twisted holomorphic
// family: (a_p p^(2-k-s), p^(2-k-2s)). Errors: "unknown_prime" when p has no
// a_p entry, "non_half_integral" when 2s is not an integer.
std::pair<SqrtPScalar, SqrtPScalar> hecke_eigenvalues_gl2(const GL2FamilySpec& f, long long p);

// X^2 - a_p p^(3/2-k-s) X + p^(2-k-2s)
SatakeParamGL satake_charpoly_gl2(const GL2FamilySpec& f, long long p);

struct AlgebraicityFlags {
  bool l_algebraic = false, c_algebraic = false;
  bool l_arithmetic = false, c_arithmetic = false;
  std::string note;  // "non_rational" when 2s is not an integer

  bool operator==(const AlgebraicityFlags&) const = default;
};

// Closed forms: holomorphic is L-flagged iff s is in 1/2+Z and C-flagged iff
// s is in Z; the Maass family swaps the two. Cross-checked against the
// archimedean parameter of the family through the algebraicity predicates
// (error "construction_failure" on disagreement).
AlgebraicityFlags classify_gl2_family(const GL2FamilySpec& f);

// Archimedean parameter of the family on the diagonal torus of GL_2:
// lambda_sigma = (s+k-3/2, s-1/2) with lambda_tau its swap (holomorphic),
// lambda_sigma = lambda_tau = (s, s) (Maass).
InfinitesimalParameter family_parameter(const GL2FamilySpec& f);

// Twist by |xi|^s for a cocharacter xi of the diagonal torus proportional to
// det, i.e. xi = (w, ..., w): the X^(n-i) coefficient picks up p^(-s*w*i).
// Errors: "dimension_mismatch", "non_uniform_twist" when xi is not of that
// shape, "non_half_integral".
SatakeParamGL unramified_twist(const SatakeParamGL& param, const IVec& xi, const Rat& s);

// Torus-level version: eigenvalue k is multiplied by p^(-s*xi[k]).
std::vector<SqrtPScalar> unramified_twist(const std::vector<SqrtPScalar>& ev, const IVec& xi,
                                          const Rat& s);

// True iff every nonzero value has even exponent numerator, i.e. lies in
// Q times an integer power of its prime. Input values must sit at pairwise
// distinct primes (error "duplicate_prime"); at least one value required.
bool integral_exponent_test(const std::vector<SqrtPScalar>& values);

// Same test over the coefficients of one class (a single prime).
bool integral_exponent_test(const SatakeParamGL& s);

struct RationalityWitness {
  bool defined_over_q = false;
  std::optional<QMat> companion;  // representative of the class in GL_n(Q)

  bool operator==(const RationalityWitness&) const = default;
};

// A semisimple class in GL_n meets GL_n(Q) exactly when its characteristic
// polynomial has rational coefficients; the companion matrix witnesses it.
RationalityWitness defined_over_equivalence_gln(const SatakeParamGL& s);

}  // namespace rootdatum
