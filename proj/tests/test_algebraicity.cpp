#include <doctest.h>

#include <algorithm>
#include <functional>

#include "rootdatum/algebraicity.hpp"
#include "rootdatum/cgroup.hpp"

using namespace rootdatum;

namespace {

QVec qvec(std::initializer_list<Rat> xs) { return QVec(xs); }

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  return "";
}

}  // namespace

TEST_CASE("parameter validation") {
  BasedRootDatum gl2 = standard_group("GL", 2).datum;
  CHECK(error_code([&] {
          validate_parameter(gl2, {qvec({Rat(1)}), qvec({Rat(1)}), Place::real});
        }) == "dimension_mismatch");
  CHECK(error_code([&] {
          validate_parameter(
              gl2, {qvec({Rat(1, 2), Rat(0)}), qvec({Rat(0), Rat(0)}), Place::real});
        }) == "invalid_parameter");
  validate_parameter(gl2, {qvec({Rat(1, 2), Rat(0)}), qvec({Rat(-1, 2), Rat(1)}),
                           Place::real});
}

TEST_CASE("canonical form is the least element of the diagonal orbit") {
  BasedRootDatum gl2 = standard_group("GL", 2).datum;
  InfinitesimalParameter p = make_parameter(gl2, qvec({Rat(1), Rat(0)}),
                                            qvec({Rat(1), Rat(0)}));
  CHECK(p.lambda_sigma == qvec({Rat(0), Rat(1)}));
  CHECK(p.lambda_tau == qvec({Rat(0), Rat(1)}));
  CHECK(canonicalize(gl2, p) == p);

  // The two exponents move by the same Weyl element, never independently.
  InfinitesimalParameter q = make_parameter(gl2, qvec({Rat(2), Rat(0)}),
                                            qvec({Rat(0), Rat(1)}));
  CHECK(q.lambda_sigma == qvec({Rat(0), Rat(2)}));
  CHECK(q.lambda_tau == qvec({Rat(1), Rat(0)}));
}

TEST_CASE("complex places forget the order of the embedding pair") {
  BasedRootDatum gl2 = standard_group("GL", 2).datum;
  QVec a = qvec({Rat(1), Rat(0)}), b = qvec({Rat(2), Rat(0)});
  CHECK(make_parameter(gl2, a, b, Place::complex_pair) ==
        make_parameter(gl2, b, a, Place::complex_pair));
  CHECK(make_parameter(gl2, a, b, Place::real) != make_parameter(gl2, b, a, Place::real));
}

TEST_CASE("integrality conditions on the exponents") {
  BasedRootDatum gl2 = standard_group("GL", 2).datum;
  QVec delta = half_sum_positive_roots(gl2);

  InfinitesimalParameter rho = make_parameter(gl2, delta, delta);
  CHECK_FALSE(is_l_algebraic(gl2, rho));
  CHECK(is_c_algebraic(gl2, rho));

  InfinitesimalParameter intp = make_parameter(gl2, qvec({Rat(1), Rat(0)}),
                                               qvec({Rat(1), Rat(0)}));
  CHECK(is_l_algebraic(gl2, intp));
  CHECK_FALSE(is_c_algebraic(gl2, intp));

  // Odd-rank general linear groups have an integral half sum, so both
  // conditions can hold at once.
  BasedRootDatum gl3 = standard_group("GL", 3).datum;
  QVec d3 = half_sum_positive_roots(gl3);
  InfinitesimalParameter both = make_parameter(gl3, d3, d3);
  CHECK(is_l_algebraic(gl3, both));
  CHECK(is_c_algebraic(gl3, both));

  BasedRootDatum sl2 = standard_group("SL", 2).datum;
  InfinitesimalParameter neither =
      make_parameter(sl2, qvec({Rat(1, 2)}), qvec({Rat(1, 2)}));
  CHECK_FALSE(is_l_algebraic(sl2, neither));
  CHECK_FALSE(is_c_algebraic(sl2, neither));
}

TEST_CASE("twisting by a central character flips the two conditions") {
  GroupData gl2 = standard_group("GL", 2);
  InfinitesimalParameter p = make_parameter(
      gl2.datum, qvec({Rat(1, 2), Rat(1, 2)}), qvec({Rat(1, 2), Rat(1, 2)}));
  CHECK(is_c_algebraic(gl2.datum, p));
  CHECK_FALSE(is_l_algebraic(gl2.datum, p));

  InfinitesimalParameter t = twist_parameter(gl2, p, qvec({Rat(1, 2), Rat(1, 2)}));
  CHECK(is_l_algebraic(gl2.datum, t));
  CHECK_FALSE(is_c_algebraic(gl2.datum, t));

  CHECK(error_code([&] { twist_parameter(gl2, p, qvec({Rat(1), Rat(0)})); }) ==
        "invalid_shift");
  CHECK(error_code([&] { twist_parameter(gl2, p, qvec({Rat(1)})); }) == "invalid_shift");

  // Stability under the order-2 action rules out every nonzero determinant
  // twist of the quasi-split unitary group.
  GroupData u3 = standard_group("UnitaryQuasiSplit", 3);
  InfinitesimalParameter pu = make_parameter(
      u3.datum, qvec({Rat(1), Rat(0), Rat(-1)}), qvec({Rat(1), Rat(0), Rat(-1)}));
  CHECK(error_code([&] {
          twist_parameter(u3, pu, qvec({Rat(1), Rat(1), Rat(1)}));
        }) == "invalid_shift");
  CHECK(twist_parameter(u3, pu, qvec({Rat(0), Rat(0), Rat(0)})) == pu);
}

TEST_CASE("infinitesimal characters of algebraic representations") {
  BasedRootDatum gl2 = standard_group("GL", 2).datum;
  InfinitesimalParameter p = infchar_of_algebraic_rep(gl2, ivec_from({1, 0}));
  CHECK(p.lambda_sigma == qvec({Rat(-1, 2), Rat(3, 2)}));
  CHECK(p.lambda_tau == p.lambda_sigma);
  CHECK(is_c_algebraic(gl2, p));
  CHECK_FALSE(is_l_algebraic(gl2, p));

  CHECK(error_code([&] { infchar_of_algebraic_rep(gl2, ivec_from({0, 1})); }) ==
        "non_dominant");
  CHECK(error_code([&] { infchar_of_algebraic_rep(gl2, ivec_from({1})); }) ==
        "dimension_mismatch");

  BasedRootDatum sp2 = standard_group("Sp", 2).datum;
  CHECK(is_c_algebraic(sp2, infchar_of_algebraic_rep(sp2, ivec_from({3, 1}))));
}

TEST_CASE("predicted labeled weights") {
  GroupData gl2 = standard_group("GL", 2);
  InfinitesimalParameter lp = make_parameter(gl2.datum, qvec({Rat(1), Rat(0)}),
                                             qvec({Rat(1), Rat(0)}));
  CHECK(hodge_tate_prediction(gl2, lp) ==
        std::vector<IVec>{ivec_from({0, 1}), ivec_from({1, 0})});

  GroupData gl3 = standard_group("GL", 3);
  InfinitesimalParameter lp3 = infchar_of_algebraic_rep(gl3.datum, ivec_from({2, 1, 0}));
  CHECK(hodge_tate_prediction(gl3, lp3) ==
        std::vector<IVec>{ivec_from({-1, 1, 3}), ivec_from({-1, 3, 1}),
                          ivec_from({1, -1, 3}), ivec_from({1, 3, -1}),
                          ivec_from({3, -1, 1}), ivec_from({3, 1, -1})});

  // In the half-integral case the prediction lives on the extension: two
  // integral weights pairing to -1 and +1 with the lifted simple coroot.
  QVec delta = half_sum_positive_roots(gl2.datum);
  InfinitesimalParameter cp = make_parameter(gl2.datum, delta, delta);
  std::vector<IVec> hw = hodge_tate_prediction(gl2, cp);
  REQUIRE(hw.size() == 2);
  CHECK(hw[0] != hw[1]);
  CHECK(std::is_sorted(hw.begin(), hw.end()));
  ExtensionPackage pkg = build_g_tilde(gl2);
  const IVec& cr = pkg.g_tilde.datum.simple_coroot(0);
  std::vector<Int> pairings{dot(hw[0], cr), dot(hw[1], cr)};
  std::sort(pairings.begin(), pairings.end());
  CHECK(pairings == std::vector<Int>{Int(-1), Int(1)});

  CHECK(error_code([&] {
          hodge_tate_prediction(gl2, {qvec({Rat(1, 3), Rat(0)}),
                                      qvec({Rat(1, 3), Rat(0)}), Place::real});
        }) == "not_algebraic");
  GroupData t1 = standard_group("Torus", 1);
  CHECK(hodge_tate_prediction(t1, make_parameter(t1.datum, qvec({Rat(2)}),
                                                 qvec({Rat(2)}))) ==
        std::vector<IVec>{ivec_from({2})});
  CHECK(error_code([&] {
          hodge_tate_prediction(t1, make_parameter(t1.datum, qvec({Rat(1, 2)}),
                                                   qvec({Rat(1, 2)})));
        }) == "not_algebraic");
}

TEST_CASE("transport along a weight map") {
  // Row (1, 1) is the determinant cocharacter pairing; it sends a parameter
  // of the rank 2 torus to its central character.
  IMat det_map = imat_from({{1, 1}});
  InfinitesimalParameter p{qvec({Rat(3, 2), Rat(-1, 2)}),
                           qvec({Rat(-1, 2), Rat(3, 2)}), Place::real};
  InfinitesimalParameter q = transfer_parameter(p, det_map);
  CHECK(q.lambda_sigma == qvec({Rat(1)}));
  CHECK(q.lambda_tau == qvec({Rat(1)}));
  CHECK(q.place == Place::real);
  CHECK(error_code([&] { transfer_parameter(p, imat_from({{1, 1, 1}})); }) ==
        "dimension_mismatch");
}

TEST_CASE("conjugation element squares to the identity") {
  ConjugationElement triv{GMat::identity(1), GMat::identity(1), GMat::identity(1)};
  AlphaResult rt = conjugation_element(triv);
  CHECK(rt.order_divides_two);
  CHECK(rt.alpha == GMat::identity(1));
  CHECK(alpha_infinity(triv) == GMat::identity(1));

  GMat neg1(1, 1);
  neg1.at(0, 0) = GQ(-1);
  GMat imat(1, 1);
  imat.at(0, 0) = GQ::i();
  AlphaResult r1 = conjugation_element({imat, imat, neg1});
  CHECK(r1.order_divides_two);
  CHECK(r1.alpha == GMat::identity(1));

  // Weight pair (1, 0) against (0, 1), with r(j) the standard symplectic
  // rotation; the result is the antidiagonal matrix with entries i and -i.
  GMat ls(2, 2), lt(2, 2), rj(2, 2);
  ls.at(0, 0) = GQ::i();
  ls.at(1, 1) = GQ(1);
  lt.at(0, 0) = GQ(1);
  lt.at(1, 1) = GQ::i();
  rj.at(0, 1) = GQ(1);
  rj.at(1, 0) = GQ(-1);
  AlphaResult r2 = conjugation_element({ls, lt, rj});
  CHECK(r2.order_divides_two);
  GMat expected(2, 2);
  expected.at(0, 1) = GQ::i();
  expected.at(1, 0) = GQ(Rat(0), Rat(-1));
  CHECK(r2.alpha == expected);
  CHECK(alpha_infinity({ls, lt, rj}) == expected);
  GMat sq = r2.alpha * r2.alpha;
  CHECK(sq == GMat::identity(2));
}

TEST_CASE("conjugation element rejects non-parameters") {
  GMat id2 = GMat::identity(2);
  GMat diag_i1(2, 2), antidiag11(2, 2);
  diag_i1.at(0, 0) = GQ::i();
  diag_i1.at(1, 1) = GQ(1);
  antidiag11.at(0, 1) = GQ(1);
  antidiag11.at(1, 0) = GQ(1);

  auto code = [](const ConjugationElement& c) {
    try {
      conjugation_element(c);
    } catch (const Error& e) {
      return e.code;
    }
    return std::string();
  };

  // Equal exponent matrices cannot intertwine with a plain transposition
  // here: conjugation by r(j) must swap the two restrictions.
  CHECK(code({diag_i1, diag_i1, antidiag11}) == "relation_violation");
  CHECK_THROWS_AS(alpha_infinity({diag_i1, diag_i1, antidiag11}), Error);

  // Commutation failure, with the swap relation intact by construction.
  GMat upper(2, 2), lower(2, 2), swp(2, 2);
  upper.at(0, 0) = GQ(1);
  upper.at(0, 1) = GQ(1);
  upper.at(1, 1) = GQ(1);
  lower.at(0, 0) = GQ(1);
  lower.at(1, 0) = GQ(1);
  lower.at(1, 1) = GQ(1);
  swp.at(0, 1) = GQ(1);
  swp.at(1, 0) = GQ(1);
  CHECK(code({upper, lower, swp}) == "relation_violation");

  // r(j)^2 must equal the value at -1.
  GMat imat(1, 1), one(1, 1);
  imat.at(0, 0) = GQ::i();
  one.at(0, 0) = GQ(1);
  CHECK(code({imat, imat, imat}) == "relation_violation");

  // A unipotent value satisfies every group relation with r(j) its square,
  // but fails the i -> -i covariance, which pins the fourth power of the
  // exponent matrix to the identity (and with it alpha^2 = 1).
  GMat uni(2, 2), uni2(2, 2);
  uni.at(0, 0) = GQ(1);
  uni.at(0, 1) = GQ(1);
  uni.at(1, 1) = GQ(1);
  uni2.at(0, 0) = GQ(1);
  uni2.at(0, 1) = GQ(2);
  uni2.at(1, 1) = GQ(1);
  CHECK(code({uni, uni, uni2}) == "relation_violation");

  CHECK(code({GMat::identity(2), GMat::identity(1), GMat::identity(2)}) ==
        "dimension_mismatch");
  CHECK(code({GMat(2, 3), GMat(2, 3), GMat(2, 3)}) == "dimension_mismatch");
}
