#include "rootdatum/cgroup.hpp"

#include <algorithm>

namespace rootdatum {

namespace {

IVec solve_exact(const QMat& m, const QVec& b, const char* what) {
  QVec x = solve_square(m, b);
  if (!is_integral(x)) throw Error("construction_failure", std::string(what) + " is not integral");
  return to_ivec(x);
}

IMat solve_exact_mat(const QMat& m, const IMat& rhs, const char* what) {
  QMat inv = inverse(m);
  QMat x = inv * to_qmat(rhs);
  IMat out(x.nr, x.nc);
  for (int i = 0; i < x.nr; ++i)
    for (int j = 0; j < x.nc; ++j) {
      if (!is_integral(x.at(i, j)))
        throw Error("construction_failure", std::string(what) + " is not integral");
      out.at(i, j) = num(x.at(i, j));
    }
  return out;
}

IVec two_delta(const BasedRootDatum& d) {
  QVec td = scale(Rat(2), half_sum_positive_roots(d));
  return to_ivec(td);
}

// enumerate v in [-box, box]^n, lexicographically, calling f on each
template <class F>
void box_scan(int n, long box, long budget, F&& f) {
  double total = 1;
  for (int i = 0; i < n; ++i) {
    total *= (2 * box + 1);
    if (total > double(budget))
      throw Error("box_guard", "coordinate box too large to enumerate");
  }
  IVec v(n, Int(-box));
  if (n == 0) {
    f(v);
    return;
  }
  for (;;) {
    f(v);
    int i = n - 1;
    while (i >= 0 && v[i] == box) v[i--] = -box;
    if (i < 0) return;
    ++v[i];
  }
}

}  // namespace

IVec element_e(const GroupData& gd) {
  IVec td = two_delta(gd.datum);
  for (const auto& c : gd.datum.coroots)
    if (dot(td, c) % 2 != 0)
      throw Error("construction_failure", "sum of positive roots pairs oddly with a coroot");
  // even pairing with the simple coroots makes the class fixed by the
  // generating reflections, hence by the whole Weyl group
  for (int i = 0; i < gd.datum.nsimple(); ++i)
    if (dot(td, gd.datum.simple_coroot(i)) % 2 != 0)
      throw Error("construction_failure", "class is not Weyl-invariant");
  IVec parity(td.size());
  for (size_t i = 0; i < td.size(); ++i) parity[i] = ((td[i] % 2) + 2) % 2;
  return parity;
}

bool is_twisting_element(const GroupData& gd, const IVec& theta) {
  if (theta.size() != size_t(gd.datum.rank)) return false;
  for (int i = 0; i < gd.datum.nsimple(); ++i)
    if (dot(theta, gd.datum.simple_coroot(i)) != 1) return false;
  for (const auto& a : gd.galois.mats)
    if (a * theta != theta) return false;
  return true;
}

TwistingSearch enumerate_twisting_elements(const GroupData& gd, long box) {
  int r = gd.datum.rank, s = gd.datum.nsimple();
  int m = gd.galois.order();
  IMat sys(s + (m - 1) * r, r);
  IVec rhs;
  for (int i = 0; i < s; ++i) {
    const IVec& c = gd.datum.simple_coroot(i);
    for (int j = 0; j < r; ++j) sys.at(i, j) = c[j];
    rhs.push_back(1);
  }
  for (int g = 1; g < m; ++g) {
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j)
        sys.at(s + (g - 1) * r + i, j) = gd.galois.mats[g].at(i, j) - (i == j ? 1 : 0);
      rhs.push_back(0);
    }
  }
  TwistingSearch out;
  IVec sol;
  out.exists = solve_integer(sys, rhs, sol);
  if (box >= 0)
    box_scan(r, box, 5000000, [&](const IVec& v) {
      if (is_twisting_element(gd, v)) out.in_box.push_back(v);
    });
  return out;
}

ExtensionPackage build_g_tilde(const GroupData& gd) {
  validate(gd);
  ExtensionPackage pkg;
  pkg.group = gd;
  const BasedRootDatum& d = gd.datum;
  int r = d.rank, s = d.nsimple();

  DerivedCovers dc = derived_covers(gd);

  // X*(T^1) = { (x, n) in X*(T^sc) + Z : x = n * eta mod root lattice },
  // eta the half-sum of the cover's positive roots, all-ones in weight coords
  IVec eta(s, Int(1));
  {
    QVec sc_delta = half_sum_positive_roots(dc.sc.datum);
    if (!is_integral(sc_delta) || to_ivec(sc_delta) != eta)
      throw Error("construction_failure", "cover half-sum is not the all-ones vector");
  }
  IMat h(s, s + 1);
  for (int i = 0; i < s; ++i) {
    h.at(i, i) = 1;
    h.at(i, s) = -eta[i];
  }
  Pullback pb = pullback_lattice(LatticeMap(s + 1, s, h), dc.ad_to_sc);
  if (pb.rank != s + 1)
    throw Error("construction_failure", "intermediate lattice has wrong rank");
  QMat b1 = to_qmat(pb.to_a.m);  // X*(T^1) coordinates -> X*(T^sc) + Z

  IVec eta1(eta);
  eta1.push_back(1);
  IVec theta1 = solve_exact(b1, to_qvec(eta1), "theta upstairs");
  IVec sq(s, Int(0));
  sq.push_back(2);
  IVec xi1 = solve_exact(b1, to_qvec(sq), "xi upstairs");

  // push X*(T^1) <- X*(T^ad) -> X*(T) out to X*(T~)
  IMat a1_rhs(s + 1, s);
  for (int i = 0; i < s; ++i) {
    IVec v = dc.ad_to_sc.m.col(i);
    v.push_back(0);
    a1_rhs.set_col(i, v);
  }
  IMat a1 = solve_exact_mat(b1, a1_rhs, "root lattice embedding");
  Pushout po = pushout_lattice(LatticeMap(s, s + 1, a1), dc.ad_to_full);
  if (po.rank != r + 1)
    throw Error("construction_failure", "extension lattice has wrong rank");
  pkg.projection = po.from_b2;

  auto ck = cokernel_invariants(pkg.projection);
  if (!ck.torsion.empty() || ck.free_rank != 1)
    throw Error("construction_failure", "extension sequence is not exact");

  pkg.theta = po.from_b1(theta1);
  pkg.xi = po.from_b1(xi1);

  IMat gk = integer_kernel(transpose(pkg.projection.m));
  if (gk.nc != 1) throw Error("construction_failure", "central cocharacter is not unique");
  pkg.gm_cochar = gk.col(0);
  Int t = dot(pkg.theta, pkg.gm_cochar);
  if (t == -1) pkg.gm_cochar = -pkg.gm_cochar;
  else if (t != 1)
    throw Error("construction_failure", "theta does not generate the quotient line");
  if (dot(pkg.xi, pkg.gm_cochar) != 2)
    throw Error("construction_failure", "xi has the wrong central weight");

  // roots lift along the projection; coroots are pinned by projecting to the
  // base coroot and pairing to zero against xi (they factor through the
  // derived group, which xi kills)
  BasedRootDatum td;
  td.rank = r + 1;
  td.simple = d.simple;
  QMat coroot_sys(r + 1, r + 1);
  {
    IMat pt = transpose(pkg.projection.m);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r + 1; ++j) coroot_sys.at(i, j) = Rat(pt.at(i, j));
    for (int j = 0; j < r + 1; ++j) coroot_sys.at(r, j) = Rat(pkg.xi[j]);
  }
  for (size_t k = 0; k < d.roots.size(); ++k) {
    td.roots.push_back(pkg.projection(d.roots[k]));
    QVec rhs = to_qvec(d.coroots[k]);
    rhs.push_back(Rat(0));
    td.coroots.push_back(solve_exact(coroot_sys, rhs, "lifted coroot"));
  }
  for (int i = 0; i < int(td.simple.size()); ++i)
    if (dot(pkg.theta, td.coroots[td.simple[i]]) != 1)
      throw Error("construction_failure", "theta is not a twisting element upstairs");

  // transport the action through both constructions
  GaloisAction tg;
  tg.table = gd.galois.table;
  IMat pfull = hcat(po.from_b1.m, po.from_b2.m);
  IMat rinv = right_inverse(pfull);
  for (int g = 0; g < gd.galois.order(); ++g) {
    IMat asc1 = dsum(dc.sc.galois.mats[g], IMat::identity(1));
    IMat a1g = solve_exact_mat(b1, asc1 * pb.to_a.m, "upstairs action");
    IMat big = dsum(a1g, gd.galois.mats[g]);
    IMat ag = pfull * (big * rinv);
    if (ag * pfull != pfull * big)
      throw Error("construction_failure", "action does not descend to the extension");
    tg.mats.push_back(ag);
  }
  pkg.g_tilde = GroupData{td, tg};
  for (const auto& a : tg.mats) {
    if (a * pkg.theta != pkg.theta)
      throw Error("construction_failure", "theta is not Galois-stable");
    if (a * pkg.xi != pkg.xi)
      throw Error("construction_failure", "xi is not Galois-stable");
  }
  validate(pkg.g_tilde);
  if (!is_twisting_element(pkg.g_tilde, pkg.theta))
    throw Error("construction_failure", "theta fails the twisting conditions");

  pkg.e_class = element_e(gd);
  pkg.c_group = l_group(pkg.g_tilde);
  return pkg;
}

std::vector<SplittingPair> splittings(const ExtensionPackage& pkg, long box) {
  const BasedRootDatum& td = pkg.g_tilde.datum;
  std::vector<SplittingPair> out;
  box_scan(td.rank, box, 5000000, [&](const IVec& chi) {
    if (dot(chi, pkg.gm_cochar) != 1) return;
    for (int i = 0; i < td.nsimple(); ++i)
      if (dot(chi, td.simple_coroot(i)) != 0) return;
    for (const auto& a : pkg.g_tilde.galois.mats)
      if (a * chi != chi) return;
    auto t = preimage(pkg.projection, pkg.theta - chi);
    if (!t) throw Error("construction_failure", "theta - chi is not a base character");
    if (!is_twisting_element(pkg.group, *t))
      throw Error("construction_failure", "splitting does not yield a twisting element");
    out.push_back(SplittingPair{chi, *t});
  });
  return out;
}

GroupData c_group_via_quotient(const GroupData& gd) {
  validate(gd);
  GroupData du = l_group(gd);
  int r = gd.datum.rank;
  IVec td = two_delta(gd.datum);

  // characters of (dual x Gm) killing (e, -1): (mu, m) with <mu, 2delta> + m even
  IMat gens(r + 1, r + 1);
  for (int i = 0; i < r; ++i) {
    gens.at(i, i) = 1;
    gens.at(r, i) = ((td[i] % 2) + 2) % 2;
  }
  gens.at(r, r) = 2;
  IMat hb = col_hnf(gens);
  if (hb.nc != r + 1) throw Error("construction_failure", "quotient lattice lost rank");
  QMat hq = to_qmat(hb);

  GroupData out;
  out.datum.rank = r + 1;
  out.datum.simple = du.datum.simple;
  IMat ht = transpose(hb);
  for (size_t k = 0; k < du.datum.roots.size(); ++k) {
    QVec root = to_qvec(du.datum.roots[k]);
    root.push_back(Rat(0));
    out.datum.roots.push_back(solve_exact(hq, root, "quotient root"));
    IVec cor = du.datum.coroots[k];
    cor.push_back(0);
    out.datum.coroots.push_back(ht * cor);
  }
  out.galois.table = du.galois.table;
  for (const auto& a : du.galois.mats) {
    IMat big = dsum(a, IMat::identity(1));
    out.galois.mats.push_back(solve_exact_mat(hq, big * hb, "quotient action"));
  }
  validate(out);
  return out;
}

std::optional<IMat> c_group_agreement(const ExtensionPackage& pkg) {
  GroupData quo = c_group_via_quotient(pkg.group);
  return based_isomorphism(pkg.c_group.datum, quo.datum, pkg.c_group.galois, quo.galois);
}

std::optional<IMat> c_group_agreement(const GroupData& gd) {
  return c_group_agreement(build_g_tilde(gd));
}

bool verify_chi_maps_to_2theta(const ExtensionPackage& pkg) {
  IVec td = two_delta(pkg.group.datum);
  IVec lhs = pkg.projection(td) + pkg.xi;
  return lhs == pkg.theta + pkg.theta;
}

}  // namespace rootdatum
