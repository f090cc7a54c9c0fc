#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "thetalift/halfint.hpp"

namespace thetalift {

using Rational = boost::rational<std::int64_t>;

// Unitary character of C^x:  z |-> (z/|z|)^winding * |z|^(i*radial).
// The characters chi_{2a} are exactly those with radial part zero
// (then winding = 2a).
struct UnitaryChar {
  std::int64_t winding = 0;
  Rational radial{0};

  bool is_chi() const { return radial == Rational(0); }
  friend bool operator==(const UnitaryChar& a, const UnitaryChar& b) {
    return a.winding == b.winding && a.radial == b.radial;
  }
  friend bool operator<(const UnitaryChar& a, const UnitaryChar& b) {
    if (a.winding != b.winding) return a.winding < b.winding;
    return a.radial < b.radial;
  }
};

// (N, t) -> (N, -t), the character z |-> xi(conj(z)^-1).
UnitaryChar conjugate_dual(const UnitaryChar& xi);

struct RelevantEntry {
  HalfInt alpha;
  int mult = 1;
};

// Tempered L-parameter of U_n(R): a multiset of characters of C^x,
// stored as
//   - `relevant`: the chi_{2a} with 2a = n-1 (mod 2), strictly
//     decreasing in a, with multiplicities, and
//   - `pairs`: one entry xi per summand xi + conj-dual(xi)^-1 of the
//     remaining part.
// Canonical form: every relevant-parity chi lives in `relevant`
// (even-multiplicity ones included); `pairs` never holds one.  Pair
// entries are stored with radial >= 0 and sorted.
struct TempParam {
  int n = 0;
  std::vector<RelevantEntry> relevant;
  std::vector<UnitaryChar> pairs;

  bool is_discrete() const;
  friend bool operator==(const TempParam&, const TempParam&);
};

// Canonicalizes raw input: merges duplicate relevant entries, folds
// relevant-parity pair entries into `relevant` with multiplicity 2,
// sorts, and checks the parity and dimension invariants.
// Throws validation_error on sum(mult) + 2*|pairs| != n or a relevant
// exponent with 2a != n-1 (mod 2).
TempParam build_param(int n, std::vector<RelevantEntry> relevant,
                      std::vector<UnitaryChar> pairs);

// Character eta of the component group A_phi: one sign per distinct
// relevant exponent of its TempParam, stored parallel to
// TempParam::relevant.
struct ComponentChar {
  std::vector<int> signs;

  friend bool operator==(const ComponentChar&, const ComponentChar&) = default;
};

ComponentChar make_component_char(const TempParam& phi, std::vector<int> signs);

// A parameter together with a character of its component group.
struct LParam {
  TempParam phi;
  ComponentChar eta;
};

// Harish-Chandra parameter of a discrete series representation of
// U(p,q): two strictly decreasing disjoint lists of half-integers,
// all in Z + (n-1)/2 with n = p+q.
struct HCParam {
  std::vector<HalfInt> plus;
  std::vector<HalfInt> minus;

  int n() const { return static_cast<int>(plus.size() + minus.size()); }
  friend bool operator==(const HCParam&, const HCParam&) = default;
};

HCParam make_hc_param(std::vector<HalfInt> plus, std::vector<HalfInt> minus);

// Input to every theta computation: lambda = (phi, eta) plus the twist
// nu defining chi_V = chi_nu.  kappa in {1,2} is determined by
// nu = n + kappa (mod 2).
struct ThetaContext {
  TempParam phi;
  ComponentChar eta;
  std::int64_t nu = 0;

  int kappa() const { return (nu + phi.n) % 2 == 0 ? 2 : 1; }
};

ThetaContext make_context(TempParam phi, ComponentChar eta, std::int64_t nu);

// One exponent of phi * chi_V^{-1}: beta = alpha - nu/2, with the
// multiplicity and eta-sign carried over from the relevant entry.
struct ShiftedEntry {
  HalfInt beta;
  int mult;
  int sign;
};

// Strictly decreasing in beta; 2*beta = kappa-1 (mod 2) throughout.
std::vector<ShiftedEntry> shifted_exponents(const ThetaContext& ctx);

}  // namespace thetalift
