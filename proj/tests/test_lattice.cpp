#include <doctest.h>

#include <random>

#include "rootdatum/lattice.hpp"

using namespace rootdatum;

namespace {

// Brute-force membership: is v an integer combination of the columns of m
// with coefficients in [-bound, bound]? Exponential, so only for tiny cases.
bool contains_by_search(const IMat& m, const IVec& v, long long bound) {
  std::vector<long long> c(m.nc, -bound);
  for (;;) {
    IVec sum(m.nr, Int(0));
    for (int j = 0; j < m.nc; ++j)
      for (int i = 0; i < m.nr; ++i) sum[i] += Int(c[j]) * m.at(i, j);
    if (sum == v) return true;
    int j = 0;
    while (j < m.nc && c[j] == bound) c[j++] = -bound;
    if (j == m.nc) return false;
    ++c[j];
  }
}

IMat random_matrix(std::mt19937_64& g, int nr, int nc, long long lo, long long hi) {
  IMat m(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j)
      m.at(i, j) = Int(lo + (long long)(g() % (unsigned long long)(hi - lo + 1)));
  return m;
}

bool is_diagonal(const IMat& m) {
  for (int i = 0; i < m.nr; ++i)
    for (int j = 0; j < m.nc; ++j)
      if (i != j && m.at(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3)") {
  Snf s = smith_normal_form(imat_from({{2, 0}, {0, 3}}));
  CHECK(s.d == imat_from({{1, 0}, {0, 6}}));
  CHECK(s.u * imat_from({{2, 0}, {0, 3}}) * s.v == s.d);
  CHECK(is_unimodular(s.u));
  CHECK(is_unimodular(s.v));
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937_64 g(7);
  for (int trial = 0; trial < 40; ++trial) {
    int nr = 1 + int(g() % 4), nc = 1 + int(g() % 4);
    IMat m = random_matrix(g, nr, nc, -6, 6);
    Snf s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    CHECK(is_diagonal(s.d));
    Int prev = 0;
    for (int i = 0; i < std::min(s.d.nr, s.d.nc); ++i) {
      Int cur = s.d.at(i, i);
      CHECK(cur >= 0);
      if (prev != 0) CHECK((cur == 0 || cur % prev == 0));
      if (prev == 0 && i > 0) CHECK(cur == 0);
      prev = cur;
    }
  }
}

TEST_CASE("row hnf is canonical and preserves the row span") {
  IMat m = imat_from({{2, 4, 6}, {1, 2, 3}, {0, 0, 5}});
  IMat h = row_hnf(m);
  CHECK(row_hnf(h) == h);
  CHECK(rank(h) == h.nr);

  // Same span both ways: each row of one lies in the row lattice of the other.
  LatticeMap cols_h(h.nr, h.nc, transpose(h));
  for (int i = 0; i < m.nr; ++i) CHECK(contains(cols_h, m.row(i)));
  LatticeMap cols_m(m.nr, m.nc, transpose(m));
  for (int i = 0; i < h.nr; ++i) CHECK(contains(cols_m, h.row(i)));
}

TEST_CASE("hnf determinism across row order") {
  IMat a = imat_from({{3, 1}, {1, 2}});
  IMat b = imat_from({{1, 2}, {3, 1}});
  CHECK(row_hnf(a) == row_hnf(b));
  CHECK(col_hnf(transpose(a)) == transpose(row_hnf(a)));
}

TEST_CASE("membership matches brute-force search") {
  // With at most two columns, entries in [-3, 3] and targets in [-4, 4],
  // any solution is bounded by the Cramer estimate 3*4 + 3*4 = 24, so a
  // coefficient box of 50 makes the search a sound oracle.
  std::mt19937_64 g(11);
  for (int trial = 0; trial < 25; ++trial) {
    int nr = 1 + int(g() % 3), nc = 1 + int(g() % 2);
    IMat m = random_matrix(g, nr, nc, -3, 3);
    LatticeMap f(nc, nr, m);
    IVec v(nr);
    for (int i = 0; i < nr; ++i) v[i] = Int((long long)(g() % 9) - 4);
    bool expected = contains_by_search(m, v, 50);
    CHECK(contains(f, v) == expected);
    if (expected) {
      auto pre = preimage(f, v);
      REQUIRE(pre.has_value());
      CHECK(f(*pre) == v);
    }
  }
}

TEST_CASE("rational points outside the lattice") {
  LatticeMap id2(2, 2, IMat::identity(2));
  CHECK_FALSE(contains(id2, QVec{Rat(1, 2), Rat(-1, 2)}));
  CHECK(contains(id2, QVec{Rat(3), Rat(-7)}));

  // Index-2 sublattice of same-parity vectors.
  LatticeMap parity(2, 2, imat_from({{1, 0}, {1, 2}}));
  CHECK(contains(parity, ivec_from({1, 1})));
  CHECK(contains(parity, ivec_from({2, 0})));
  CHECK_FALSE(contains(parity, ivec_from({1, 0})));
  CHECK_FALSE(contains(parity, QVec{Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("integer kernel") {
  IMat m = imat_from({{1, 2, 3}});
  IMat k = integer_kernel(m);
  CHECK(k.nc == 2);
  IMat prod = m * k;
  for (int j = 0; j < prod.nc; ++j) CHECK(prod.at(0, j) == 0);
  CHECK(rank(k) == 2);

  // The kernel basis generates every small solution.
  LatticeMap kf(k.nc, k.nr, k);
  for (long long x = -3; x <= 3; ++x)
    for (long long y = -3; y <= 3; ++y)
      for (long long z = -3; z <= 3; ++z)
        if (x + 2 * y + 3 * z == 0) CHECK(contains(kf, ivec_from({x, y, z})));
}

TEST_CASE("integer solve") {
  IMat m = imat_from({{2, 0}, {0, 3}});
  IVec out;
  CHECK(solve_integer(m, ivec_from({4, 9}), out));
  CHECK(m * out == ivec_from({4, 9}));
  CHECK_FALSE(solve_integer(m, ivec_from({1, 0}), out));
}

TEST_CASE("cokernel invariants") {
  // 2Z inside Z.
  CokernelInvariants two = cokernel_invariants(LatticeMap(1, 1, imat_from({{2}})));
  CHECK(two.torsion == std::vector<Int>{Int(2)});
  CHECK(two.free_rank == 0);

  // Root lattice of a rank-1 system inside its weight lattice: index 2.
  CokernelInvariants a1 = cokernel_invariants(LatticeMap(1, 1, imat_from({{2}})));
  CHECK(a1.torsion == std::vector<Int>{Int(2)});

  // diag(2,3) has cyclic quotient of order 6.
  CokernelInvariants d23 = cokernel_invariants(LatticeMap(2, 2, imat_from({{2, 0}, {0, 3}})));
  CHECK(d23.torsion == std::vector<Int>{Int(6)});
  CHECK(d23.free_rank == 0);

  // A line in the plane leaves one free rank.
  CokernelInvariants line = cokernel_invariants(LatticeMap(1, 2, imat_from({{1}, {0}})));
  CHECK(line.torsion.empty());
  CHECK(line.free_rank == 1);

  CokernelInvariants zero = cokernel_invariants(LatticeMap(0, 2, IMat(2, 0)));
  CHECK(zero.free_rank == 2);
}

TEST_CASE("pullback against box enumeration") {
  // f, g into a common Z^2; the fiber product is {(a, b) : f(a) = g(b)}.
  LatticeMap f(2, 2, imat_from({{1, 0}, {1, 2}}));
  LatticeMap g(1, 2, imat_from({{2}, {0}}));
  Pullback pb = pullback_lattice(f, g);
  CHECK(compose(f, pb.to_a).m == compose(g, pb.to_b).m);

  // Stack the two projections into a single embedding and compare point sets.
  IMat stacked = vcat(pb.to_a.m, pb.to_b.m);
  LatticeMap emb(pb.rank, stacked.nr, stacked);
  int hits = 0;
  for (long long a0 = -2; a0 <= 2; ++a0)
    for (long long a1 = -2; a1 <= 2; ++a1)
      for (long long b0 = -2; b0 <= 2; ++b0) {
        IVec fa = f(ivec_from({a0, a1})), gb = g(ivec_from({b0}));
        if (fa != gb) continue;
        ++hits;
        CHECK(contains(emb, ivec_from({a0, a1, b0})));
      }
  CHECK(hits > 1);
}

TEST_CASE("pushout of two extensions of a line") {
  // Z --2--> Z and Z --3--> Z glued over the common source: the result is
  // spanned by 1/2 and 1/3 of the generator, a single copy of Z containing
  // both images with indices 2 and 3.
  LatticeMap f(1, 1, imat_from({{2}}));
  LatticeMap g(1, 1, imat_from({{3}}));
  Pushout po = pushout_lattice(f, g);
  CHECK(po.rank == 1);
  CHECK(compose(po.from_b1, f).m == compose(po.from_b2, g).m);
  CHECK(cokernel_invariants(po.from_b1).torsion == std::vector<Int>{Int(3)});
  CHECK(cokernel_invariants(po.from_b2).torsion == std::vector<Int>{Int(2)});
}

TEST_CASE("pushout along an isomorphism changes nothing") {
  LatticeMap id(2, 2, IMat::identity(2));
  LatticeMap f(2, 2, imat_from({{1, 1}, {0, 1}}));
  Pushout po = pushout_lattice(id, f);
  CHECK(po.rank == 2);
  CHECK(is_unimodular(po.from_b1.m));
  CHECK(is_unimodular(po.from_b2.m));
}

TEST_CASE("right inverse of a surjection") {
  IMat p = imat_from({{1, 0, 2}, {0, 1, 3}});
  IMat r = right_inverse(p);
  CHECK(p * r == IMat::identity(2));
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(imat_from({{1, 5}, {0, -1}})));
  CHECK_FALSE(is_unimodular(imat_from({{2, 0}, {0, 1}})));
  CHECK_FALSE(is_unimodular(imat_from({{1, 0}})));
}

TEST_CASE("lattice map shape errors") {
  CHECK_THROWS_AS(LatticeMap(2, 2, IMat(1, 1)), Error);
  LatticeMap f(2, 1, IMat(1, 2));
  LatticeMap g(3, 1, IMat(1, 3));
  CHECK_THROWS_AS(compose(f, g), Error);
}
