#pragma once

#include "rootdatum/root_datum.hpp"

namespace rootdatum {

// The canonical central Gm-extension of a group datum, at the level of
// character lattices, together with the distinguished elements living on it.
//
// X*(T~) sits in the exact sequence 0 -> X*(T) -> X*(T~) -> Z -> 0 via
// `projection` and pairing with `gm_cochar`. theta is the canonical twisting
// element (image of (half-sum-of-sc-weights, 1)), xi the character induced by
// squaring the central Gm coordinate.
struct ExtensionPackage {
  GroupData group;    // the input
  GroupData g_tilde;  // the extension, with the transported action
  LatticeMap projection;  // X*(T) -> X*(T~)
  IVec theta;
  IVec xi;
  IVec gm_cochar;
  IVec e_class;       // parities of the sum of positive roots, mod 2X*
  GroupData c_group;  // dual of g_tilde with the dual action
};

ExtensionPackage build_g_tilde(const GroupData& gd);

// Class of (sum of positive roots)(-1) in X*/2X*, as a 0/1 parity vector;
// verified central (even pairing against every coroot) and Weyl-invariant
// as a class.
IVec element_e(const GroupData& gd);

// Galois-stable theta with <theta, alpha^vee> = 1 for every simple coroot.
bool is_twisting_element(const GroupData& gd, const IVec& theta);

struct TwistingSearch {
  bool exists = false;        // exact, via an integer solve
  std::vector<IVec> in_box;   // all twisting elements with |coords| <= box
};

TwistingSearch enumerate_twisting_elements(const GroupData& gd, long box);

// Splittings of the extension found in a coordinate box: Galois-stable chi
// in X*(T~) restricting to the identity character of the central Gm and
// pairing to zero with every simple coroot. Each corresponds to the twisting
// element theta - chi of the base group.
struct SplittingPair {
  IVec chi;       // in X*(T~)
  IVec twisting;  // in X*(T), preimage of theta - chi
};

std::vector<SplittingPair> splittings(const ExtensionPackage& pkg, long box);

// The dual construction taken as a quotient: character lattice of
// (dual x Gm) / <(e, -1)>, carrying the transported roots and action.
GroupData c_group_via_quotient(const GroupData& gd);

// Based isomorphism (intertwining the actions) between the dual of the
// extension and the quotient presentation, when one exists.
std::optional<IMat> c_group_agreement(const GroupData& gd);
std::optional<IMat> c_group_agreement(const ExtensionPackage& pkg);

// The characteristic identity of the extension: the character-side map of
// (projection, squaring) sends (sum of positive roots, 1) to 2*theta.
bool verify_chi_maps_to_2theta(const ExtensionPackage& pkg);

}  // namespace rootdatum
