#include "rootdatum/satake.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace rootdatum {

namespace {

// p^q as an exact rational, q any integer
Rat prime_power(long long p, long long q) {
  Int pw = boost::multiprecision::pow(Int(p), unsigned(q >= 0 ? q : -q));
  return q >= 0 ? Rat(pw) : Rat(1, pw);
}

long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw Error("overflow", "exponent out of range");
  return v.convert_to<long long>();
}

// 2s as a plain integer; the formulas only make sense for half-integral s
long long doubled(const Rat& s) {
  Rat t = s * 2;
  if (!is_integral(t))
    throw Error("non_half_integral", "twist " + rat_str(s) + " is not half-integral");
  return to_ll(num(t));
}

}  // namespace

SqrtPScalar::SqrtPScalar(long long prime, Rat coeff, long long halfexp)
    : p(prime), c(std::move(coeff)) {
  if (p < 2) throw Error("invalid_prime", "prime must be at least 2");
  if (c == 0) return;
  long long q = halfexp >= 0 ? halfexp / 2 : -((-halfexp + 1) / 2);
  e = int(halfexp - 2 * q);
  if (q != 0) c *= prime_power(p, q);
}

Rat SqrtPScalar::rational_value() const {
  if (e != 0) throw Error("irrational_value", "value carries an odd power of sqrt(p)");
  return c;
}

SqrtPScalar SqrtPScalar::inv() const {
  if (is_zero()) throw Error("division_by_zero", "cannot invert zero");
  return SqrtPScalar(p, Rat(1) / c, -e);
}

SqrtPScalar SqrtPScalar::operator*(const SqrtPScalar& o) const {
  long long rp;
  if (p == o.p || o.is_rational())
    rp = p;
  else if (is_rational())
    rp = o.p;
  else
    throw Error("prime_mismatch", "cannot multiply irrational values at different primes");
  return SqrtPScalar(rp, c * o.c, (long long)e + o.e);
}

SqrtPScalar SqrtPScalar::operator+(const SqrtPScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (is_rational() && o.is_rational()) return SqrtPScalar(p, c + o.c, 0);
  if (p != o.p) throw Error("prime_mismatch", "cannot add values at different primes");
  if (e != o.e) throw Error("parity_mismatch", "addition needs matching sqrt(p) parity");
  return SqrtPScalar(p, c + o.c, e);
}

SqrtPScalar SqrtPScalar::operator-() const { return SqrtPScalar(p, -c, e); }

SqrtPScalar sqrtp_power(long long p, long long halfexp) { return SqrtPScalar(p, 1, halfexp); }

void validate(const SatakeParamGL& s) {
  if (s.n < 1 || int(s.coeffs.size()) != s.n)
    throw Error("invalid_satake", "coefficient list does not match the rank");
  if (!is_prime(s.p)) throw Error("invalid_prime", std::to_string(s.p) + " is not prime");
  for (const auto& x : s.coeffs)
    if (x.p != s.p) throw Error("prime_mismatch", "coefficient at a different prime");
  if (s.coeffs.back().is_zero())
    throw Error("invalid_satake", "constant coefficient is zero, class is not invertible");
}

SatakeParamGL frobenius_flip(const SatakeParamGL& s) {
  validate(s);
  const SqrtPScalar& a0 = s.coeffs.back();
  SatakeParamGL out{s.p, s.n, {}};
  out.coeffs.reserve(s.n);
  for (int i = 0; i + 1 < s.n; ++i) out.coeffs.push_back(s.coeffs[s.n - 2 - i] / a0);
  out.coeffs.push_back(a0.inv());
  return out;
}

SatakeParamGL satake_from_eigenvalues(long long p, const std::vector<SqrtPScalar>& ev) {
  if (ev.empty()) throw Error("invalid_satake", "no eigenvalues given");
  for (const auto& a : ev) {
    if (a.is_zero()) throw Error("invalid_satake", "zero eigenvalue, class is not invertible");
    if (a.p != p) throw Error("prime_mismatch", "eigenvalue at a different prime");
  }
  SqrtPScalar zero(p, 0, 0);
  std::vector<SqrtPScalar> poly{SqrtPScalar(p, 1, 0)};
  for (const auto& a : ev) {
    std::vector<SqrtPScalar> next(poly.size() + 1, zero);
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j] = next[j] + poly[j];
      next[j + 1] = next[j + 1] + -(a * poly[j]);
    }
    poly = std::move(next);
  }
  SatakeParamGL out{p, int(ev.size()), {poly.begin() + 1, poly.end()}};
  validate(out);
  return out;
}

SqrtPScalar satake_trace(const SatakeParamGL& s) {
  validate(s);
  return -s.coeffs.front();
}

void validate(const GL2FamilySpec& f) {
  if (f.kind == GL2Kind::holomorphic && f.k < 2)
    throw Error("invalid_family", "holomorphic weight must be at least 2");
  std::set<long long> seen;
  for (const auto& [p, ap] : f.hecke) {
    if (!is_prime(p)) throw Error("invalid_prime", std::to_string(p) + " is not prime");
    if (!seen.insert(p).second)
      throw Error("duplicate_prime", "repeated Hecke prime " + std::to_string(p));
  }
}

namespace {

Rat lookup_ap(const GL2FamilySpec& f, long long p) {
  for (const auto& [q, ap] : f.hecke)
    if (q == p) return ap;
  throw Error("unknown_prime", "no Hecke eigenvalue stored at " + std::to_string(p));
}

}  // namespace

std::pair<SqrtPScalar, SqrtPScalar> hecke_eigenvalues_gl2(const GL2FamilySpec& f, long long p) {
  validate(f);
  if (f.kind != GL2Kind::holomorphic)
    throw Error("unsupported", "Hecke normalization is stated for the holomorphic family");
  Rat ap = lookup_ap(f, p);
  long long s2 = doubled(f.s), k = f.k;
  return {SqrtPScalar(p, ap, 4 - 2 * k - s2), SqrtPScalar(p, 1, 4 - 2 * k - 2 * s2)};
}

SatakeParamGL satake_charpoly_gl2(const GL2FamilySpec& f, long long p) {
  validate(f);
  if (f.kind != GL2Kind::holomorphic)
    throw Error("unsupported", "the charpoly normalization is stated for the holomorphic family");
  Rat ap = lookup_ap(f, p);
  long long s2 = doubled(f.s), k = f.k;
  SatakeParamGL out{p, 2,
                    {SqrtPScalar(p, -ap, 3 - 2 * k - s2), SqrtPScalar(p, 1, 4 - 2 * k - 2 * s2)}};
  validate(out);
  return out;
}

InfinitesimalParameter family_parameter(const GL2FamilySpec& f) {
  validate(f);
  BasedRootDatum gl2 = standard_group("GL", 2).datum;
  if (f.kind == GL2Kind::holomorphic) {
    QVec ls{f.s + Rat(2 * f.k - 3, 2), f.s - Rat(1, 2)};
    QVec lt{ls[1], ls[0]};
    return make_parameter(gl2, ls, lt);
  }
  QVec l{f.s, f.s};
  return make_parameter(gl2, l, l);
}

AlgebraicityFlags classify_gl2_family(const GL2FamilySpec& f) {
  validate(f);
  AlgebraicityFlags out;
  Rat two_s = f.s * 2;
  if (is_integral(two_s)) {
    bool half = (num(two_s) % 2) != 0;
    bool l = (f.kind == GL2Kind::holomorphic) ? half : !half;
    out.l_algebraic = out.l_arithmetic = l;
    out.c_algebraic = out.c_arithmetic = !l;
  } else {
    out.note = "non_rational";
  }
  InfinitesimalParameter p = family_parameter(f);
  BasedRootDatum gl2 = standard_group("GL", 2).datum;
  if (is_l_algebraic(gl2, p) != out.l_algebraic || is_c_algebraic(gl2, p) != out.c_algebraic)
    throw Error("construction_failure",
                "closed-form flags disagree with the archimedean parameter");
  return out;
}

SatakeParamGL unramified_twist(const SatakeParamGL& param, const IVec& xi, const Rat& s) {
  validate(param);
  if (int(xi.size()) != param.n)
    throw Error("dimension_mismatch", "cocharacter length does not match the rank");
  for (const auto& w : xi)
    if (w != xi[0])
      throw Error("non_uniform_twist",
                  "coefficient-level twisting needs a multiple of the determinant cocharacter");
  long long s2 = doubled(s), w = to_ll(xi[0]);
  SatakeParamGL out = param;
  for (int i = 1; i <= param.n; ++i)
    out.coeffs[i - 1] = out.coeffs[i - 1] * sqrtp_power(param.p, -s2 * w * i);
  return out;
}

std::vector<SqrtPScalar> unramified_twist(const std::vector<SqrtPScalar>& ev, const IVec& xi,
                                          const Rat& s) {
  if (xi.size() != ev.size())
    throw Error("dimension_mismatch", "cocharacter length does not match the eigenvalue list");
  long long s2 = doubled(s);
  std::vector<SqrtPScalar> out;
  out.reserve(ev.size());
  for (size_t k = 0; k < ev.size(); ++k)
    out.push_back(ev[k] * sqrtp_power(ev[k].p, -s2 * to_ll(xi[k])));
  return out;
}

bool integral_exponent_test(const std::vector<SqrtPScalar>& values) {
  if (values.empty()) throw Error("empty_input", "need at least one value");
  std::set<long long> primes;
  for (const auto& v : values)
    if (!primes.insert(v.p).second)
      throw Error("duplicate_prime", "values must sit at pairwise distinct primes");
  return std::all_of(values.begin(), values.end(),
                     [](const SqrtPScalar& v) { return v.is_rational(); });
}

bool integral_exponent_test(const SatakeParamGL& s) {
  validate(s);
  return std::all_of(s.coeffs.begin(), s.coeffs.end(),
                     [](const SqrtPScalar& v) { return v.is_rational(); });
}

RationalityWitness defined_over_equivalence_gln(const SatakeParamGL& s) {
  RationalityWitness w;
  w.defined_over_q = integral_exponent_test(s);
  if (!w.defined_over_q) return w;
  QMat comp(s.n, s.n);
  for (int i = 0; i + 1 < s.n; ++i) comp.at(i + 1, i) = 1;
  for (int i = 0; i < s.n; ++i) comp.at(i, s.n - 1) = -s.coeffs[s.n - 1 - i].rational_value();
  w.companion = comp;
  return w;
}

}  // namespace rootdatum
