#pragma once

#include "rootdatum/gaussian.hpp"
#include "rootdatum/root_datum.hpp"

namespace rootdatum {

enum class Place { real, complex_pair };

// The pair of exponent vectors of an archimedean parameter restricted to the
// nonzero complex numbers, z |-> z^ls zbar^lt, in X*(T) x Q coordinates.
// ls - lt must be integral. Stored as the lexicographically least element of
// the diagonal Weyl orbit (for complex places also minimizing over the swap,
// since the pair depends on a choice of embedding).
struct InfinitesimalParameter {
  QVec lambda_sigma, lambda_tau;
  Place place = Place::real;

  bool operator==(const InfinitesimalParameter&) const = default;
};

void validate_parameter(const BasedRootDatum& d, const InfinitesimalParameter& p);

InfinitesimalParameter canonicalize(const BasedRootDatum& d, InfinitesimalParameter p);

InfinitesimalParameter make_parameter(const BasedRootDatum& d, QVec ls, QVec lt,
                                      Place place = Place::real);

// lambda_sigma lands in X*(T) (equivalently lambda_tau; the difference is
// integral by construction).
bool is_l_algebraic(const BasedRootDatum& d, const InfinitesimalParameter& p);

// lambda_sigma - delta lands in X*(T), delta the half-sum of positive roots.
bool is_c_algebraic(const BasedRootDatum& d, const InfinitesimalParameter& p);

// Shift both exponents by a character of the group: shift must pair to zero
// with every simple coroot and be Galois-stable (error "invalid_shift").
InfinitesimalParameter twist_parameter(const GroupData& gd, const InfinitesimalParameter& p,
                                       const QVec& shift);

// Infinitesimal character of the irreducible algebraic representation with
// dominant highest weight mu: lambda = mu + delta at a real place.
InfinitesimalParameter infchar_of_algebraic_rep(const BasedRootDatum& d, const IVec& mu);

// Predicted labeled weight multiset: the Weyl orbit of lambda_sigma when the
// parameter is L-algebraic; otherwise, when it is C-algebraic, the orbit of
// its avatar on the extension (lambda lifted along the projection, plus half
// of xi). Error "not_algebraic" when neither applies.
std::vector<IVec> hodge_tate_prediction(const GroupData& gd, const InfinitesimalParameter& p);

// Push a parameter through a homomorphism of parameter spaces (a cocharacter-
// side map between dual tori), e.g. the weight map of a representation.
InfinitesimalParameter transfer_parameter(const InfinitesimalParameter& p, const IMat& m);

// Matrix models of lambda_sigma(i), lambda_tau(i) and r(j) for a parameter of
// the real Weil group.
struct ConjugationElement {
  GMat lambda_sigma_i, lambda_tau_i, r_j;
};

struct AlphaResult {
  GMat alpha;
  bool order_divides_two = false;
};

// alpha = lambda_sigma(i) lambda_tau(i) r(j). Validates the Weil relations on
// the inputs (error "relation_violation"), reports whether alpha^2 = 1, and
// checks invariance under swapping sigma and tau and covariance under
// i -> -i (conjugation by lambda_sigma(-1)).
AlphaResult conjugation_element(const ConjugationElement& c);

// The matrix alone; throws "construction_failure" if alpha^2 != 1.
GMat alpha_infinity(const ConjugationElement& c);

}  // namespace rootdatum
