#pragma once

#include <utility>
#include <vector>

#include "thetalift/params.hpp"

namespace thetalift {

struct Signature {
  int p = 0;
  int q = 0;

  int n() const { return p + q; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Harish-Chandra parameter of pi(phi, eta) for discrete phi: the i-th
// exponent (in decreasing order, 1-based) lands in the plus block iff
// eta(e_{2a_i}) = (-1)^(i-1).  Throws on non-discrete input.
HCParam param_to_hc(const TempParam& phi, const ComponentChar& eta);

// Exact inverse of param_to_hc.
LParam hc_to_param(const HCParam& hc);

// Signature of the group carrying pi(phi, eta), for any tempered phi:
// the counting rule applied to the odd-multiplicity discrete part,
// plus one hyperbolic plane per remaining pair.
Signature signature_of(const TempParam& phi, const ComponentChar& eta);

// Parameter of the contragredient representation: exponents negated,
// pair entries inverted, and eta transported with a sign flip when n
// is even.
LParam contragredient(const TempParam& phi, const ComponentChar& eta);

// pi(phi, -eta): the same representation seen on U(q,p).
LParam swap_pq(const TempParam& phi, const ComponentChar& eta);

// Tensor with det^a: every exponent shifts by a, eta rides along the
// canonical identification of component groups.
LParam det_twist(const TempParam& phi, const ComponentChar& eta, std::int64_t a);

// A formal sum of characters of C^x: chi_{2a} summands with
// multiplicities plus xi + conj-dual(xi)^-1 blocks.
struct CharacterSum {
  std::vector<std::pair<HalfInt, int>> chi;
  std::vector<UnitaryChar> pairs;
};

// Root number at the center, for the fixed additive character:
// chi_{2a} contributes -1 when a is half-odd positive, +1 when a is
// half-odd negative or an integer; a conjugate pair contributes +1.
int epsilon_factor(const CharacterSum& sum);

// phi tensored with chi_{2a}, as a formal character sum.
CharacterSum tensor_with_chi(const TempParam& phi, HalfInt a);

// The exponent multiset of a discrete parameter.
std::vector<HalfInt> infinitesimal_character(const TempParam& phi);

// The component-group character attached to a Harish-Chandra parameter
// by the explicit Whittaker-datum formula: (-1)^(j-1) on the j-th
// merged exponent when it comes from the plus block, (-1)^j otherwise.
// minus_datum selects the other Whittaker datum, which flips every sign.
ComponentChar appendix_j(const HCParam& hc, bool minus_datum = false);

}  // namespace thetalift
