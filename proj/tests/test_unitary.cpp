#include <doctest.h>

#include <functional>
#include <random>

#include "rootdatum/unitary.hpp"

using namespace rootdatum;

namespace {

std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  return "";
}

Mat<FpElt> fp_mat(const FpField& F, std::initializer_list<std::initializer_list<long long>> rows) {
  Mat<FpElt> m(int(rows.size()), int(rows.begin()->size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long long x : row) m.at(i, j++) = F(x);
    ++i;
  }
  return m;
}

Mat<FpElt> random_invertible(std::mt19937_64& rng, const FpField& F, int n) {
  for (;;) {
    Mat<FpElt> g(n, n);
    for (auto& x : g.a) x = F(static_cast<long long>(rng() % static_cast<unsigned long long>(F.p)));
    try {
      field_inverse(g);
      return g;
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("field elements adopt a modulus on contact") {
  FpField F(7);
  CHECK(FpElt() + F(3) == F(3));
  CHECK(FpElt(2) * F(5) == F(3));
  CHECK(FpElt(3) == F(3));
  CHECK(-F(3) == F(4));
  CHECK(F(3).inv() == F(5));
  CHECK(F(2) / F(3) == F(3));
  CHECK(field_pow(F(3), -2) == F(4));
  CHECK(error_code([&] { F(1) + FpElt(11, 1); }) == "field_mismatch");
  CHECK(error_code([&] { F(0).inv(); }) == "division_by_zero");
  CHECK(error_code([] { FpElt(2).inv(); }) == "not_invertible");
  CHECK(error_code([] { FpField(9); }) == "invalid_prime");
  CHECK(error_code([] { FpElt(4, 1); }) == "invalid_prime");
}

TEST_CASE("alternating antidiagonal matrix") {
  GMat p1 = phi_matrix<GQ>(1);
  CHECK(p1.at(0, 0) == GQ(1));

  GMat p2 = phi_matrix<GQ>(2);
  CHECK(p2.at(0, 1) == GQ(1));
  CHECK(p2.at(1, 0) == GQ(-1));
  CHECK(p2.at(0, 0) == GQ(0));

  GMat p3 = phi_matrix<GQ>(3);
  CHECK(p3.at(0, 2) == GQ(1));
  CHECK(p3.at(1, 1) == GQ(-1));
  CHECK(p3.at(2, 0) == GQ(1));

  for (int n = 1; n <= 8; ++n) {
    GMat phi = phi_matrix<GQ>(n);
    GMat t = transpose(phi);
    CHECK(phi * t == GMat::identity(n));
    GQ sign = (n % 2 == 1) ? GQ(1) : GQ(-1);
    CHECK(t == scaled(phi, sign));
  }
  CHECK(error_code([] { phi_matrix<GQ>(0); }) == "unsupported");
}

TEST_CASE("similitude product twisted by the flip") {
  FpField F(7);
  GnElement<FpElt> a = make_gn(fp_mat(F, {{2}}), F(3), 1);
  GnElement<FpElt> b = make_gn(fp_mat(F, {{4}}), F(5), 0);
  // Acting first: (4, 5) goes to (5 * 4^{-1}, 5) = (3, 5).
  GnElement<FpElt> ab = gn_mul(a, b);
  CHECK(ab == make_gn(fp_mat(F, {{6}}), F(1), 1));

  GnElement<FpElt> id = gn_identity(2, F(1));
  GnElement<FpElt> x = make_gn(fp_mat(F, {{1, 2}, {3, 4}}), F(2), 1);
  CHECK(gn_mul(x, gn_inverse(x)) == id);
  CHECK(gn_mul(gn_inverse(x), x) == id);
  CHECK(gn_mul(x, id) == x);
  CHECK(gn_mul(id, x) == x);

  CHECK(error_code([&] { gn_mul(a, id); }) == "dimension_mismatch");
  CHECK(error_code([&] { make_gn(fp_mat(F, {{1, 2}}), F(1), 0); }) == "invalid_element");
  CHECK(error_code([&] { make_gn(fp_mat(F, {{1}}), F(0), 0); }) == "invalid_element");
  CHECK(error_code([&] { make_gn(fp_mat(F, {{1}}), F(1), 2); }) == "invalid_element");
}

TEST_CASE("central identification picks one representative") {
  FpField F(7);
  // Even rank: (g, mu) is glued to (-g, -mu).
  Mat<FpElt> g = fp_mat(F, {{3, 0}, {0, 3}});
  CUElement<FpElt> c = make_cu(g, F(2), 0);
  CHECK(c == make_cu(scaled(g, F(-1)), F(5), 0));
  CHECK(c.g.at(0, 0) == F(3));
  CHECK(c.mu == F(2));

  // Odd rank: the matrix part is fixed and only the scalar flips.
  Mat<FpElt> h = fp_mat(F, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(make_cu(h, F(2), 0) == make_cu(h, F(5), 0));
  CHECK(make_cu(h, F(2), 0).mu == F(2));
}

TEST_CASE("class multiplication is independent of the representative") {
  FpField F(7);
  Mat<FpElt> g = fp_mat(F, {{3, 1}, {0, 3}});
  CUElement<FpElt> canon = make_cu(g, F(2), 0);
  CUElement<FpElt> other{scaled(g, F(-1)), F(5), 0};
  CUElement<FpElt> b = make_cu(fp_mat(F, {{1, 2}, {3, 4}}), F(3), 1);
  CHECK(cu_mul(canon, b) == cu_mul(other, b));
  CHECK(cu_mul(b, canon) == cu_mul(b, other));

  CUElement<FpElt> id = cu_identity(2, F(1));
  CHECK(cu_mul(b, cu_inverse(b)) == id);
  CHECK(cu_mul(cu_inverse(b), b) == id);
}

TEST_CASE("products associate on sampled elements") {
  FpField F(101);
  std::mt19937_64 rng(411);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      auto rand_gn = [&] {
        return make_gn(random_invertible(rng, F, n),
                       F(1 + (long long)(rng() % (unsigned long long)(F.p - 1))),
                       int(rng() % 2));
      };
      GnElement<FpElt> x = rand_gn(), y = rand_gn(), z = rand_gn();
      CHECK(gn_mul(gn_mul(x, y), z) == gn_mul(x, gn_mul(y, z)));
      CUElement<FpElt> cx = make_cu(x.g, x.mu, x.gamma);
      CUElement<FpElt> cy = make_cu(y.g, y.mu, y.gamma);
      CUElement<FpElt> cz = make_cu(z.g, z.mu, z.gamma);
      CHECK(cu_mul(cu_mul(cx, cy), cz) == cu_mul(cx, cu_mul(cy, cz)));
    }
  }
}

TEST_CASE("the embedding into the similitude group") {
  FpField F(13);
  CUElement<FpElt> x = make_cu(fp_mat(F, {{2, 0}, {0, 3}}), F(5), 1);
  GnElement<FpElt> jx = j_map(x);
  CHECK(jx == make_gn(fp_mat(F, {{0, 3}, {2, 0}}), F(1), 1));
  CHECK(d_map(x) == F(12));

  // The scalar of the image of the identity-with-flip records the parity.
  CHECK(multiplier(j_map(make_cu(Mat<FpElt>::identity(2), F(1), 1))) == F(12));
  CHECK(multiplier(j_map(make_cu(Mat<FpElt>::identity(3), F(1), 1))) == F(1));
  CHECK(multiplier(j_map(make_cu(Mat<FpElt>::identity(4), F(1), 1))) == F(12));

  std::mt19937_64 rng(947);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      auto rand_cu = [&] {
        return make_cu(random_invertible(rng, F, n),
                       F(1 + (long long)(rng() % (unsigned long long)(F.p - 1))),
                       int(rng() % 2));
      };
      CUElement<FpElt> a = rand_cu(), b = rand_cu();
      CHECK(j_map(cu_mul(a, b)) == gn_mul(j_map(a), j_map(b)));
      CHECK(j_prime(j_map(a), d_map(a), a.mu) == a);
    }
  }
}

TEST_CASE("section of the embedding over the gaussian rationals") {
  GMat g(2, 2);
  g.at(0, 0) = GQ(1);
  g.at(0, 1) = GQ(2);
  g.at(1, 0) = GQ(3);
  g.at(1, 1) = GQ(4);
  GnElement<GQ> x = make_gn(g, GQ(1), 0);
  CUElement<GQ> lift = j_prime(x, GQ(4), GQ(2));
  CHECK(lift == make_cu(scaled(g, GQ(2)), GQ(2), 0));
  CHECK(j_prime(x, GQ(4), GQ(-2)) == lift);
  CHECK(error_code([&] { j_prime(x, GQ(4), GQ(3)); }) == "not_a_square");
  CHECK(error_code([&] { j_prime(x, GQ(0), GQ(0)); }) == "invalid_element");
}

TEST_CASE("kernel of the embedding") {
  FpField F101(101), F13(13);
  std::vector<CUElement<FpElt>> k2 = kernel_of_j(2, 101);
  CHECK(k2 == std::vector<CUElement<FpElt>>{cu_identity(2, F101(1))});

  std::vector<CUElement<FpElt>> k3 = kernel_of_j(3, 13);
  CHECK(k3 == std::vector<CUElement<FpElt>>{
                  cu_identity(3, F13(1)),
                  make_cu(scaled(Mat<FpElt>::identity(3), F13(12)), F13(5), 0)});

  // Entries must carry the modulus: the canonical representative is chosen
  // by comparing reduced values, and a bare integer matrix reduces later.
  std::vector<CUElement<FpElt>> k4 = kernel_of_j(4, 13);
  Mat<FpElt> i4 = scaled(Mat<FpElt>::identity(4), F13(1));
  CHECK(k4 == std::vector<CUElement<FpElt>>{cu_identity(4, F13(1)),
                                            make_cu(i4, F13(3), 0),
                                            make_cu(i4, F13(9), 0)});

  std::vector<CUElement<FpElt>> k5 = kernel_of_j(5, 41);
  CHECK(k5.size() == 4);
  FpField F41(41);
  for (const auto& e : k5) CHECK(j_map(e) == gn_identity(5, F41(1)));

  CHECK(error_code([] { kernel_of_j(3, 7); }) == "field_too_small");
  CHECK(error_code([] { kernel_of_j(1, 101); }) == "unsupported");
  CHECK(error_code([] { kernel_of_j(2, 4); }) == "invalid_prime");
}
