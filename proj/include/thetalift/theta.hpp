#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "thetalift/llc.hpp"
#include "thetalift/params.hpp"

namespace thetalift {

// Subset of (1/2)Z x {±1}; at most one copy of each signed exponent,
// both signs at the same exponent allowed.  Iteration runs in
// decreasing exponent order with +1 before -1.
class SignedSet {
 public:
  struct Cmp {
    bool operator()(const std::pair<HalfInt, int>& a,
                    const std::pair<HalfInt, int>& b) const {
      if (a.first != b.first) return a.first > b.first;
      return a.second > b.second;
    }
  };
  using Storage = std::set<std::pair<HalfInt, int>, Cmp>;

  void insert(HalfInt beta, int sign) { elems_.insert({beta, sign}); }
  void erase(HalfInt beta, int sign) { elems_.erase({beta, sign}); }
  bool contains(HalfInt beta, int sign) const { return elems_.count({beta, sign}) > 0; }
  bool contains_either_sign(HalfInt beta) const {
    return contains(beta, 1) || contains(beta, -1);
  }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  // The distinct exponents, decreasing.
  std::vector<HalfInt> projection() const;

  bool is_subset_of(const SignedSet& other) const;
  friend bool operator==(const SignedSet& a, const SignedSet& b) {
    return a.elems_ == b.elems_;
  }

 private:
  Storage elems_;
};

// The invariants of a context lambda = (phi, eta, nu): the chain
// length k, the base signature (r, s), the signed exponent set and its
// pruned fixpoint.  r + s = n - k when k >= 0 and n when k = -1.
struct ThetaInvariants {
  int k = 0;
  int r = 0;
  int s = 0;
  SignedSet x;
  SignedSet x_inf;
};

// Maximal k with the chain / odd-multiplicity / alternating-sign
// conditions on phi*chi_V^{-1}, defaulting to kappa - 2.
int k_lambda(const ThetaContext& ctx);

std::pair<int, int> rs_lambda(const ThetaContext& ctx);

SignedSet x_lambda(const ThetaContext& ctx);

// One pruning pass: simultaneously delete every adjacent
// (beta', +1), (beta, -1) pair of same-sign exponents with
// min(|beta'|, |beta|) >= (k+1)/2.
SignedSet prune_once(const SignedSet& x, int k);

// Fixpoint of prune_once, reached within n passes.
SignedSet x_infinity(const SignedSet& x, int k);

// #{(beta, eps) in x_inf : 0 <= eps*beta + (k-1)/2 < T}; zero for T <= 0.
int c_count(const SignedSet& x_inf, int k, std::int64_t T, int eps);

ThetaInvariants invariants(const ThetaContext& ctx);

// The context of the contragredient twisted back into the same chi_V
// family; an involution.
ThetaContext dual_context(const ThetaContext& ctx);

// Whether the theta lift of pi(phi, eta) to U(r, s) is nonzero.
// Requires r, s >= 0 and r + s = nu (mod 2).
bool nonvanishing(const ThetaContext& ctx, std::int64_t r, std::int64_t s);

// Minimal r + s with r - s = d and a nonzero lift.  Requires
// d = nu (mod 2).
std::int64_t first_occurrence(const ThetaContext& ctx, std::int64_t d);

struct ConservationReport {
  std::int64_t m_plus = 0;
  std::int64_t m_minus = 0;
  std::int64_t sum = 0;
  bool holds = false;
};

// Pairs the Witt towers into the two conserved families and reports
// min first occurrences; holds <=> m_plus + m_minus = 2n + 2.
ConservationReport conservation_report(const ThetaContext& ctx);

// The unique target signature with r + s = n carrying a nonzero lift
// (equal-rank regime, nu = n (mod 2)).
Signature paul_equal_rank(const ThetaContext& ctx);

// The one or two minimal target signatures in the almost-equal-rank
// regime (nu = n+1 (mod 2)): two at r+s = n+1 when chi_V is not a
// summand of phi, otherwise one at r+s = n-1.
std::vector<Signature> paul_almost_equal_rank(const ThetaContext& ctx);

}  // namespace thetalift
