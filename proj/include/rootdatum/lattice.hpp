#pragma once

#include <optional>

#include "rootdatum/matrix.hpp"

namespace rootdatum {

// A map of finitely generated free Z-modules, matrix acting on column vectors.
struct LatticeMap {
  int src = 0, dst = 0;
  IMat m;  // dst x src

  LatticeMap() = default;
  LatticeMap(int s, int d, IMat mm) : src(s), dst(d), m(std::move(mm)) {
    if (m.nr != dst || m.nc != src)
      throw Error("dimension_mismatch", "lattice map shape");
  }
  IVec operator()(const IVec& v) const { return m * v; }
};

inline LatticeMap compose(const LatticeMap& f, const LatticeMap& g) {
  if (f.src != g.dst) throw Error("dimension_mismatch", "lattice map composition");
  return LatticeMap(g.src, f.dst, f.m * g.m);
}

// u*m*v = d with u, v unimodular and d diagonal, d[0][0] | d[1][1] | ...
struct Snf {
  IMat u, d, v;
};

Snf smith_normal_form(const IMat& m);

// Canonical basis of the row span: pivots positive and strictly to the right
// as rows descend, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped, so the result has full row rank.
IMat row_hnf(const IMat& m);

// Canonical basis (as columns) of the column span.
IMat col_hnf(const IMat& m);

int rank(const IMat& m);

// Columns form the canonical basis of {x : m*x = 0}.
IMat integer_kernel(const IMat& m);

// Particular integer solution of m*x = b, if one exists.
bool solve_integer(const IMat& m, const IVec& b, IVec& out);

struct CokernelInvariants {
  std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
  int free_rank = 0;
};

CokernelInvariants cokernel_invariants(const LatticeMap& f);

// Membership of v in the image of f over Z.
bool contains(const LatticeMap& f, const QVec& v);
bool contains(const LatticeMap& f, const IVec& v);

std::optional<IVec> preimage(const LatticeMap& f, const IVec& v);

// Fiber product A x_C B of f: A -> C, g: B -> C, with its two projections.
struct Pullback {
  int rank = 0;
  LatticeMap to_a, to_b;
};

Pullback pullback_lattice(const LatticeMap& f, const LatticeMap& g);

// Cokernel of the anti-diagonal a |-> (f(a), -g(a)) in B1 + B2, with the two
// inclusion maps. Requires the embedding to be injective with torsion-free
// quotient; the presentation is canonicalized so results are deterministic.
struct Pushout {
  int rank = 0;
  LatticeMap from_b1, from_b2;
};

Pushout pushout_lattice(const LatticeMap& f, const LatticeMap& g);

// Integer right inverse of a surjection Z^n -> Z^m.
IMat right_inverse(const IMat& p);

bool is_unimodular(const IMat& m);

}  // namespace rootdatum
