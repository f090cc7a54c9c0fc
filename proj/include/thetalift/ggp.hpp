#pragma once

#include <utility>

#include "thetalift/llc.hpp"
#include "thetalift/params.hpp"

namespace thetalift {

// The distinguished member of the product packet of (phi_n, phi_n1):
// the unique pair of component characters whose representations carry
// the nonzero equivariant Hom, with their signatures.
struct DistinguishedPair {
  ComponentChar eta_n;
  ComponentChar eta_n1;
  Signature sig_n;
  Signature sig_n1;
};

// Counting-rule recognition of the distinguished pair:
//   eta_n(e_{2a}) = (-1)^(#{distinct relevant b of phi_n1 with b < a} + n)
// and symmetrically for eta_n1.  Requires dim phi_n1 = dim phi_n + 1.
DistinguishedPair restriction_distinguished(const TempParam& phi_n,
                                            const TempParam& phi_n1);

// Root-number recognition of the same pair:
//   eta_n(e_{2a}) = epsilon(chi_{2a} (x) phi_n1),
//   eta_n1(e_{2b}) = epsilon(phi_n (x) chi_{2b}),
// with full multiplicities.
std::pair<ComponentChar, ComponentChar> conjecture_signs(const TempParam& phi_n,
                                                         const TempParam& phi_n1);

// (U(p,q), U(p',q')) is relevant when (p',q') = (p+1,q) for even n and
// (p,q+1) for odd n.
bool is_relevant_pair(const Signature& sig_n, const Signature& sig_n1);

}  // namespace thetalift
