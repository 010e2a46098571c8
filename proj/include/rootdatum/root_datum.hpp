#pragma once

#include <optional>
#include <string>

#include "rootdatum/lattice.hpp"

namespace rootdatum {

// A based root datum in coordinates: X* = Z^rank, roots and coroots stored as
// index-paired lists, simple roots designated by index. Cocharacters pair with
// characters by the standard dot product.
struct BasedRootDatum {
  int rank = 0;
  std::vector<IVec> roots;    // X* coordinates
  std::vector<IVec> coroots;  // X_* coordinates, coroots[k] pairs with roots[k]
  std::vector<int> simple;    // indices into roots

  bool operator==(const BasedRootDatum&) const = default;

  int nsimple() const { return int(simple.size()); }
  const IVec& simple_root(int i) const { return roots[simple[i]]; }
  const IVec& simple_coroot(int i) const { return coroots[simple[i]]; }
};

// A finite group acting on X* preserving the based datum. Element 0 is the
// identity; table[g][h] is the product, mats[g] the matrix on X*.
struct GaloisAction {
  std::vector<std::vector<int>> table;
  std::vector<IMat> mats;

  bool operator==(const GaloisAction&) const = default;

  int order() const { return int(mats.size()); }
  static GaloisAction trivial(int rank) {
    return GaloisAction{{{0}}, {IMat::identity(rank)}};
  }
};

struct GroupData {
  BasedRootDatum datum;
  GaloisAction galois;

  bool operator==(const GroupData&) const = default;
};

// Root datum axioms; throws Error("invalid_root_datum", "<axiom>: ...") naming
// the first axiom that fails.
void validate(const BasedRootDatum& d);

// Additionally checks the action: group table sanity, unimodularity,
// permutation of the roots and of the simple roots, pairing preservation.
void validate(const GroupData& gd);

// Non-throwing form: valid flag plus the first failing axiom, empty when
// everything holds.
struct ValidationReport {
  bool valid = true;
  std::string diagnostic;
};

ValidationReport check(const BasedRootDatum& d);
ValidationReport check(const GroupData& gd);

BasedRootDatum dual(const BasedRootDatum& d);

// Induced action on the dual datum: gamma acts on X*(dual) = X_* by the
// inverse-transpose of its matrix on X* (the automorphism is inverted to
// cancel the contravariance of dualization). Involutive.
GaloisAction dual_action(const GaloisAction& g);

GroupData l_group(const GroupData& gd);

IMat reflection_matrix(const IVec& root, const IVec& coroot);

// Full Weyl group, sorted; guards rank <= 8 and order <= 10^6.
std::vector<IMat> weyl_group(const BasedRootDatum& d);

std::vector<int> positive_root_indices(const BasedRootDatum& d);

QVec half_sum_positive_roots(const BasedRootDatum& d);

// cartan(i, j) = <alpha_i, alpha_j^vee> over the simple roots.
IMat cartan_matrix(const BasedRootDatum& d);

// Expansion of v in the simple-root basis (rational); empty optional when v
// is outside their span.
std::optional<QVec> simple_coordinates(const BasedRootDatum& d, const QVec& v);

// Builds the full datum from a simple system by reflection closure; roots are
// sorted lexicographically.
BasedRootDatum datum_from_simple(int rank, const std::vector<IVec>& sroots,
                                 const std::vector<IVec>& scoroots);

// Catalog: Torus(n), GL(n), SL(n), PGL(n), Sp(n) (rank n, type C_n),
// UnitaryQuasiSplit(n) (GL_n with the order-2 action v -> -reverse(v)).
GroupData standard_group(const std::string& name, int n);

std::vector<std::pair<std::string, int>> catalog_entries();

GroupData direct_sum(const GroupData& a, const GroupData& b);

// Lattice isomorphism carrying simple roots to simple roots and simple
// coroots to simple coroots (composed with some Dynkin bijection), or nullopt.
// With actions supplied, the isomorphism must also intertwine them.
// Guards rank <= 6.
std::optional<IMat> based_isomorphism(const BasedRootDatum& a, const BasedRootDatum& b);
std::optional<IMat> based_isomorphism(const BasedRootDatum& a, const BasedRootDatum& b,
                                      const GaloisAction& ga, const GaloisAction& gb);

// Simply connected cover and adjoint quotient of the derived group, as data
// on the root/weight lattices of the root system, with transported actions.
struct DerivedCovers {
  GroupData sc, ad;
  LatticeMap ad_to_full;  // root lattice -> X*, simple roots as columns
  LatticeMap full_to_sc;  // X* -> weight lattice, pairing with simple coroots
  LatticeMap ad_to_sc;    // composite, the Cartan transpose
};

DerivedCovers derived_covers(const GroupData& gd);

}  // namespace rootdatum
