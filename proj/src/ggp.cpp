#include "thetalift/ggp.hpp"

namespace thetalift {

namespace {

void check_dimensions(const TempParam& phi_n, const TempParam& phi_n1) {
  if (phi_n1.n != phi_n.n + 1)
    throw validation_error("the second parameter must have dimension n+1");
}

// Signs from the cross-counting rule, one per distinct relevant
// exponent of `phi`.  The count runs over the other parameter's
// multiplicity-one list, i.e. its odd-multiplicity exponents (even
// multiplicities sit entirely in conjugate pairs there).
ComponentChar counting_signs(const TempParam& phi, const TempParam& other, int n) {
  std::vector<int> signs;
  signs.reserve(phi.relevant.size());
  for (const auto& e : phi.relevant) {
    int below = 0;
    for (const auto& o : other.relevant)
      if (o.mult % 2 != 0 && o.alpha < e.alpha) ++below;
    signs.push_back((below + n) % 2 == 0 ? 1 : -1);
  }
  return ComponentChar{std::move(signs)};
}

}  // namespace

DistinguishedPair restriction_distinguished(const TempParam& phi_n,
                                            const TempParam& phi_n1) {
  check_dimensions(phi_n, phi_n1);
  const int n = phi_n.n;
  DistinguishedPair out;
  out.eta_n = counting_signs(phi_n, phi_n1, n);
  out.eta_n1 = counting_signs(phi_n1, phi_n, n);
  out.sig_n = signature_of(phi_n, out.eta_n);
  out.sig_n1 = signature_of(phi_n1, out.eta_n1);
  return out;
}

std::pair<ComponentChar, ComponentChar> conjecture_signs(const TempParam& phi_n,
                                                         const TempParam& phi_n1) {
  check_dimensions(phi_n, phi_n1);
  std::vector<int> signs_n, signs_n1;
  signs_n.reserve(phi_n.relevant.size());
  for (const auto& e : phi_n.relevant)
    signs_n.push_back(epsilon_factor(tensor_with_chi(phi_n1, e.alpha)));
  signs_n1.reserve(phi_n1.relevant.size());
  for (const auto& e : phi_n1.relevant)
    signs_n1.push_back(epsilon_factor(tensor_with_chi(phi_n, e.alpha)));
  return {ComponentChar{std::move(signs_n)}, ComponentChar{std::move(signs_n1)}};
}

bool is_relevant_pair(const Signature& sig_n, const Signature& sig_n1) {
  const int n = sig_n.n();
  if (n % 2 == 0) return sig_n1 == Signature{sig_n.p + 1, sig_n.q};
  return sig_n1 == Signature{sig_n.p, sig_n.q + 1};
}

}  // namespace thetalift
