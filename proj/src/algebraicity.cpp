#include "rootdatum/algebraicity.hpp"

#include <algorithm>

#include "rootdatum/cgroup.hpp"

namespace rootdatum {

void validate_parameter(const BasedRootDatum& d, const InfinitesimalParameter& p) {
  if (p.lambda_sigma.size() != size_t(d.rank) || p.lambda_tau.size() != size_t(d.rank))
    throw Error("dimension_mismatch", "parameter length does not match the rank");
  if (!is_integral(p.lambda_sigma - p.lambda_tau))
    throw Error("invalid_parameter", "lambda_sigma - lambda_tau is not integral");
}

InfinitesimalParameter canonicalize(const BasedRootDatum& d, InfinitesimalParameter p) {
  validate_parameter(d, p);
  auto w = weyl_group(d);
  auto key = [](const InfinitesimalParameter& q) {
    return std::pair<const QVec&, const QVec&>(q.lambda_sigma, q.lambda_tau);
  };
  InfinitesimalParameter best = p;
  auto consider = [&](QVec ls, QVec lt) {
    InfinitesimalParameter cand{std::move(ls), std::move(lt), p.place};
    if (key(cand) < key(best)) best = cand;
  };
  for (const auto& m : w) {
    QVec ls = mul(m, p.lambda_sigma), lt = mul(m, p.lambda_tau);
    if (p.place == Place::complex_pair) consider(lt, ls);
    consider(std::move(ls), std::move(lt));
  }
  return best;
}

InfinitesimalParameter make_parameter(const BasedRootDatum& d, QVec ls, QVec lt, Place place) {
  return canonicalize(d, InfinitesimalParameter{std::move(ls), std::move(lt), place});
}

bool is_l_algebraic(const BasedRootDatum& d, const InfinitesimalParameter& p) {
  validate_parameter(d, p);
  return is_integral(p.lambda_sigma);
}

bool is_c_algebraic(const BasedRootDatum& d, const InfinitesimalParameter& p) {
  validate_parameter(d, p);
  return is_integral(p.lambda_sigma - half_sum_positive_roots(d));
}

InfinitesimalParameter twist_parameter(const GroupData& gd, const InfinitesimalParameter& p,
                                       const QVec& shift) {
  validate_parameter(gd.datum, p);
  if (shift.size() != size_t(gd.datum.rank))
    throw Error("invalid_shift", "shift length does not match the rank");
  for (int i = 0; i < gd.datum.nsimple(); ++i)
    if (dot(shift, gd.datum.simple_coroot(i)) != 0)
      throw Error("invalid_shift", "shift pairs nontrivially with a simple coroot");
  for (const auto& a : gd.galois.mats)
    if (to_qmat(a) * shift != shift)
      throw Error("invalid_shift", "shift is not Galois-stable");
  return make_parameter(gd.datum, p.lambda_sigma + shift, p.lambda_tau + shift, p.place);
}

InfinitesimalParameter infchar_of_algebraic_rep(const BasedRootDatum& d, const IVec& mu) {
  if (mu.size() != size_t(d.rank))
    throw Error("dimension_mismatch", "weight length does not match the rank");
  for (int i = 0; i < d.nsimple(); ++i)
    if (dot(mu, d.simple_coroot(i)) < 0)
      throw Error("non_dominant", "highest weight is not dominant");
  QVec lam = to_qvec(mu) + half_sum_positive_roots(d);
  return make_parameter(d, lam, lam, Place::real);
}

namespace {

std::vector<IVec> sorted_weyl_orbit(const BasedRootDatum& d, const QVec& v) {
  std::vector<IVec> orbit;
  for (const auto& m : weyl_group(d)) {
    QVec w = mul(m, v);
    if (!is_integral(w))
      throw Error("construction_failure", "predicted weight is not integral");
    IVec iw = to_ivec(w);
    if (std::find(orbit.begin(), orbit.end(), iw) == orbit.end()) orbit.push_back(iw);
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace

std::vector<IVec> hodge_tate_prediction(const GroupData& gd, const InfinitesimalParameter& p) {
  validate_parameter(gd.datum, p);
  if (is_l_algebraic(gd.datum, p))
    return sorted_weyl_orbit(gd.datum, p.lambda_sigma);
  if (is_c_algebraic(gd.datum, p)) {
    ExtensionPackage pkg = build_g_tilde(gd);
    QVec lifted = mul(pkg.projection.m, p.lambda_sigma);
    QVec avatar = lifted + scale(Rat(1, 2), to_qvec(pkg.xi));
    return sorted_weyl_orbit(pkg.g_tilde.datum, avatar);
  }
  throw Error("not_algebraic", "parameter is neither L-algebraic nor C-algebraic");
}

InfinitesimalParameter transfer_parameter(const InfinitesimalParameter& p, const IMat& m) {
  if (p.lambda_sigma.size() != size_t(m.nc))
    throw Error("dimension_mismatch", "transfer matrix does not match the parameter");
  return InfinitesimalParameter{mul(m, p.lambda_sigma), mul(m, p.lambda_tau), p.place};
}

AlphaResult conjugation_element(const ConjugationElement& c) {
  const GMat &ls = c.lambda_sigma_i, &lt = c.lambda_tau_i, &rj = c.r_j;
  int n = ls.nr;
  if (ls.nc != n || lt.nr != n || lt.nc != n || rj.nr != n || rj.nc != n)
    throw Error("dimension_mismatch", "conjugation element matrices must be square of one size");
  GMat id = GMat::identity(n);

  // Weil relations: conjugation by j swaps the two embeddings, j^2 = -1, and
  // the two restrictions commute with each other.
  if (ls * rj != rj * lt) throw Error("relation_violation", "lambda_sigma(i) r(j) != r(j) lambda_tau(i)");
  if (ls * lt != lt * ls) throw Error("relation_violation", "lambda_sigma(i), lambda_tau(i) do not commute");
  if (rj * rj != (ls * ls) * (lt * lt))
    throw Error("relation_violation", "r(j)^2 != lambda_sigma(-1) lambda_tau(-1)");

  AlphaResult out{(ls * lt) * rj, false};
  const GMat& alpha = out.alpha;
  out.order_divides_two = alpha * alpha == id;
  if ((lt * ls) * rj != alpha)
    throw Error("relation_violation", "alpha changes under swapping sigma and tau");

  // replacing i by -i is conjugation by lambda_sigma(-1)
  GMat ls_m1 = ls * ls;
  GMat ls_inv = field_inverse(ls), lt_inv = field_inverse(lt);
  GMat other = (ls_inv * lt_inv) * rj;
  if ((ls_m1 * alpha) * field_inverse(ls_m1) != other)
    throw Error("relation_violation", "alpha is not conjugate to its i -> -i counterpart");
  return out;
}

GMat alpha_infinity(const ConjugationElement& c) {
  AlphaResult r = conjugation_element(c);
  if (!r.order_divides_two)
    throw Error("construction_failure", "alpha does not square to the identity");
  return r.alpha;
}

}  // namespace rootdatum
