#include <doctest.h>

#include "rootdatum/root_datum.hpp"

using namespace rootdatum;

TEST_CASE("catalog entries all validate") {
  for (const auto& [name, n] : catalog_entries()) {
    GroupData g = standard_group(name, n);
    ValidationReport rep = check(g);
    INFO(name, "(", n, "): ", rep.diagnostic);
    CHECK(rep.valid);
  }
}

TEST_CASE("catalog shapes") {
  CHECK(standard_group("GL", 3).datum.rank == 3);
  CHECK(standard_group("GL", 3).datum.roots.size() == 6);
  CHECK(standard_group("SL", 3).datum.rank == 2);
  CHECK(standard_group("PGL", 4).datum.rank == 3);
  CHECK(standard_group("Torus", 2).datum.roots.empty());
  CHECK(standard_group("Sp", 2).datum.roots.size() == 8);
  CHECK(standard_group("UnitaryQuasiSplit", 3).galois.order() == 2);
  CHECK(standard_group("SL", 1).datum.rank == 0);
  CHECK_THROWS_AS(standard_group("GL", 0), Error);
  CHECK_THROWS_AS(standard_group("E8", 8), Error);
}

TEST_CASE("weyl group orders") {
  CHECK(weyl_group(standard_group("GL", 2).datum).size() == 2);
  CHECK(weyl_group(standard_group("GL", 3).datum).size() == 6);
  CHECK(weyl_group(standard_group("Torus", 3).datum).size() == 1);
  CHECK(weyl_group(standard_group("Sp", 2).datum).size() == 8);
  CHECK(weyl_group(standard_group("SL", 4).datum).size() == 24);
}

TEST_CASE("half sums of positive roots") {
  CHECK(half_sum_positive_roots(standard_group("GL", 2).datum) ==
        QVec{Rat(1, 2), Rat(-1, 2)});
  CHECK(half_sum_positive_roots(standard_group("GL", 3).datum) ==
        QVec{Rat(1), Rat(0), Rat(-1)});
  CHECK(half_sum_positive_roots(standard_group("Torus", 2).datum) == QVec{Rat(0), Rat(0)});
  // Fundamental-weight coordinates: the half sum is the all-ones vector.
  CHECK(half_sum_positive_roots(standard_group("SL", 3).datum) == QVec{Rat(1), Rat(1)});
}

TEST_CASE("duality swaps roots and coroots") {
  BasedRootDatum sl2 = standard_group("SL", 2).datum;
  BasedRootDatum pgl2 = standard_group("PGL", 2).datum;
  CHECK(dual(sl2) == pgl2);
  CHECK(dual(pgl2) == sl2);
  for (const auto& [name, n] : catalog_entries()) {
    BasedRootDatum d = standard_group(name, n).datum;
    CHECK(dual(dual(d)) == d);
    ValidationReport rep = check(dual(d));
    CHECK(rep.valid);
  }
  CHECK(dual(standard_group("GL", 3).datum) == standard_group("GL", 3).datum);
}

TEST_CASE("dual action inverts and transposes") {
  GroupData u3 = standard_group("UnitaryQuasiSplit", 3);
  GroupData lg = l_group(u3);
  CHECK(lg.datum == dual(u3.datum));
  CHECK(lg.galois.table == u3.galois.table);
  CHECK(lg.galois.mats[1] * transpose(u3.galois.mats[1]) == IMat::identity(3));
  CHECK(check(lg).valid);
  // Applying the construction twice restores the original group.
  CHECK(l_group(lg) == u3);
}

TEST_CASE("based isomorphism between distinct isogeny types fails") {
  BasedRootDatum sl2 = standard_group("SL", 2).datum;
  BasedRootDatum pgl2 = standard_group("PGL", 2).datum;
  CHECK_FALSE(based_isomorphism(sl2, pgl2).has_value());
  CHECK(based_isomorphism(sl2, sl2).has_value());

  auto m = based_isomorphism(dual(standard_group("GL", 3).datum),
                             standard_group("GL", 3).datum);
  REQUIRE(m.has_value());
  CHECK(is_unimodular(*m));
}

TEST_CASE("based isomorphism respects supplied actions") {
  GroupData u2 = standard_group("UnitaryQuasiSplit", 2);
  GroupData gl2 = standard_group("GL", 2);
  CHECK(based_isomorphism(u2.datum, gl2.datum).has_value());
  CHECK_FALSE(based_isomorphism(u2.datum, gl2.datum, u2.galois, gl2.galois).has_value());
  CHECK(based_isomorphism(u2.datum, u2.datum, u2.galois, u2.galois).has_value());
}

TEST_CASE("isomorphism images of simple roots") {
  BasedRootDatum a = standard_group("GL", 2).datum;
  auto m = based_isomorphism(a, a);
  REQUIRE(m.has_value());
  IMat mt = transpose(right_inverse(*m));
  for (int i = 0; i < a.nsimple(); ++i) {
    IVec im = *m * a.simple_root(i);
    bool hit = false;
    for (int j = 0; j < a.nsimple(); ++j)
      hit |= (im == a.simple_root(j) && mt * a.simple_coroot(i) == a.simple_coroot(j));
    CHECK(hit);
  }
}

TEST_CASE("derived covers of GL(2)") {
  DerivedCovers dc = derived_covers(standard_group("GL", 2));
  CHECK(dc.sc.datum == standard_group("SL", 2).datum);
  CHECK(dc.ad.datum == standard_group("PGL", 2).datum);
  CHECK(dc.ad_to_sc.m == transpose(cartan_matrix(standard_group("GL", 2).datum)));
  CHECK(compose(dc.full_to_sc, dc.ad_to_full).m == dc.ad_to_sc.m);
  // The embedded root lattice contains the simple roots as columns.
  CHECK(dc.ad_to_full.m.col(0) == standard_group("GL", 2).datum.simple_root(0));
}

TEST_CASE("derived covers of a torus are empty") {
  DerivedCovers dc = derived_covers(standard_group("Torus", 2));
  CHECK(dc.sc.datum.rank == 0);
  CHECK(dc.ad.datum.rank == 0);
}

TEST_CASE("validation diagnostics") {
  BasedRootDatum bad;
  bad.rank = 1;
  bad.roots = {ivec_from({1})};
  bad.coroots = {ivec_from({1})};
  bad.simple = {0};
  ValidationReport rep = check(bad);
  CHECK_FALSE(rep.valid);
  CHECK_FALSE(rep.diagnostic.empty());

  BasedRootDatum no_neg;
  no_neg.rank = 2;
  no_neg.roots = {ivec_from({1, -1})};
  no_neg.coroots = {ivec_from({1, -1})};
  no_neg.simple = {0};
  CHECK_FALSE(check(no_neg).valid);

  GroupData broken = standard_group("GL", 2);
  broken.galois.mats[0] = imat_from({{1, 1}, {0, 1}});
  CHECK_FALSE(check(broken).valid);

  GroupData scaled = standard_group("UnitaryQuasiSplit", 2);
  scaled.galois.table = {{0, 1}, {1, 1}};
  CHECK_FALSE(check(scaled).valid);
}

TEST_CASE("direct sums") {
  GroupData s = direct_sum(standard_group("GL", 2), standard_group("Torus", 1));
  CHECK(s.datum.rank == 3);
  CHECK(s.datum.roots.size() == 2);
  CHECK(check(s).valid);

  GroupData uu = direct_sum(standard_group("UnitaryQuasiSplit", 2),
                            standard_group("UnitaryQuasiSplit", 2));
  CHECK(uu.galois.order() == 2);
  CHECK(check(uu).valid);
}

TEST_CASE("reflections") {
  BasedRootDatum gl2 = standard_group("GL", 2).datum;
  IMat s = reflection_matrix(gl2.simple_root(0), gl2.simple_coroot(0));
  CHECK(s * s == IMat::identity(2));
  CHECK(s * gl2.simple_root(0) == -gl2.simple_root(0));
}

TEST_CASE("simple coordinates") {
  BasedRootDatum gl3 = standard_group("GL", 3).datum;
  auto c = simple_coordinates(gl3, QVec{Rat(1), Rat(0), Rat(-1)});
  REQUIRE(c.has_value());
  CHECK(*c == QVec{Rat(1), Rat(1)});
  CHECK_FALSE(simple_coordinates(gl3, QVec{Rat(1), Rat(0), Rat(0)}).has_value());
}
