#include "thetalift/params.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>

namespace thetalift {

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

HalfInt parse_half_int(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      const std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw validation_error("trailing characters in '" + text + "'");
      return HalfInt::whole(v);
    }
    const std::string den = text.substr(slash + 1);
    if (den != "2") throw validation_error("half-integer denominator must be 2 in '" + text + "'");
    std::size_t used = 0;
    const std::string num = text.substr(0, slash);
    const std::int64_t v = std::stoll(num, &used);
    if (used != num.size()) throw validation_error("bad numerator in '" + text + "'");
    return HalfInt::from_twice(v);
  } catch (const std::invalid_argument&) {
    throw validation_error("cannot parse half-integer '" + text + "'");
  } catch (const std::out_of_range&) {
    throw validation_error("half-integer out of range: '" + text + "'");
  }
}

UnitaryChar conjugate_dual(const UnitaryChar& xi) {
  return UnitaryChar{xi.winding, -xi.radial};
}

bool TempParam::is_discrete() const {
  if (!pairs.empty()) return false;
  return std::all_of(relevant.begin(), relevant.end(),
                     [](const RelevantEntry& e) { return e.mult == 1; });
}

bool operator==(const TempParam& a, const TempParam& b) {
  if (a.n != b.n || a.pairs.size() != b.pairs.size() ||
      a.relevant.size() != b.relevant.size())
    return false;
  for (std::size_t i = 0; i < a.relevant.size(); ++i)
    if (a.relevant[i].alpha != b.relevant[i].alpha ||
        a.relevant[i].mult != b.relevant[i].mult)
      return false;
  return std::equal(a.pairs.begin(), a.pairs.end(), b.pairs.begin());
}

namespace {

bool relevant_parity_ok(std::int64_t twice_alpha, int n) {
  // 2a = n-1 (mod 2)
  return ((twice_alpha - (n - 1)) % 2) == 0;
}

UnitaryChar canonical_pair(UnitaryChar xi) {
  // xi and conj-dual(xi)^-1 name the same summand; keep radial >= 0.
  if (xi.radial < Rational(0)) xi.radial = -xi.radial;
  return xi;
}

}  // namespace

TempParam build_param(int n, std::vector<RelevantEntry> relevant,
                      std::vector<UnitaryChar> pairs) {
  if (n <= 0) throw validation_error("dimension n must be positive");

  std::map<std::int64_t, long long> mult_by_twice;
  for (const auto& e : relevant) {
    if (e.mult <= 0) throw validation_error("relevant multiplicity must be positive");
    if (!relevant_parity_ok(e.alpha.twice, n))
      throw validation_error("relevant exponent 2a=" + std::to_string(e.alpha.twice) +
                             " violates 2a = n-1 (mod 2) for n=" + std::to_string(n));
    mult_by_twice[e.alpha.twice] += e.mult;
  }

  std::vector<UnitaryChar> kept;
  kept.reserve(pairs.size());
  for (const auto& xi : pairs) {
    if (xi.is_chi() && relevant_parity_ok(xi.winding, n)) {
      mult_by_twice[xi.winding] += 2;  // chi + chi = xi + conj-dual(xi)^-1
    } else {
      kept.push_back(canonical_pair(xi));
    }
  }
  std::sort(kept.begin(), kept.end());

  TempParam out;
  out.n = n;
  out.pairs = std::move(kept);
  long long total = 2 * static_cast<long long>(out.pairs.size());
  for (auto it = mult_by_twice.rbegin(); it != mult_by_twice.rend(); ++it) {
    out.relevant.push_back({HalfInt::from_twice(it->first), static_cast<int>(it->second)});
    total += it->second;
  }
  if (total != n)
    throw validation_error("dimension mismatch: sum of multiplicities plus 2*pairs is " +
                           std::to_string(total) + ", expected n=" + std::to_string(n));
  return out;
}

ComponentChar make_component_char(const TempParam& phi, std::vector<int> signs) {
  if (signs.size() != phi.relevant.size())
    throw validation_error("component character needs one sign per distinct relevant exponent");
  for (int s : signs)
    if (s != 1 && s != -1) throw validation_error("component character signs must be +1 or -1");
  return ComponentChar{std::move(signs)};
}

HCParam make_hc_param(std::vector<HalfInt> plus, std::vector<HalfInt> minus) {
  const int n = static_cast<int>(plus.size() + minus.size());
  if (n == 0) throw validation_error("empty Harish-Chandra parameter");
  auto check_block = [n](const std::vector<HalfInt>& block, const char* name) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (!relevant_parity_ok(block[i].twice, n))
        throw validation_error(std::string("entry ") + to_string(block[i]) + " of the " + name +
                               " block is not in Z + (n-1)/2 for n=" + std::to_string(n));
      if (i > 0 && !(block[i - 1] > block[i]))
        throw validation_error(std::string(name) + " block is not strictly decreasing");
    }
  };
  check_block(plus, "plus");
  check_block(minus, "minus");
  for (const auto& a : plus)
    if (std::binary_search(minus.begin(), minus.end(), a,
                           [](HalfInt x, HalfInt y) { return x > y; }))
      throw validation_error("plus and minus blocks share the entry " + to_string(a));
  return HCParam{std::move(plus), std::move(minus)};
}

ThetaContext make_context(TempParam phi, ComponentChar eta, std::int64_t nu) {
  if (eta.signs.size() != phi.relevant.size())
    throw validation_error("component character does not match the parameter");
  return ThetaContext{std::move(phi), std::move(eta), nu};
}

std::vector<ShiftedEntry> shifted_exponents(const ThetaContext& ctx) {
  std::vector<ShiftedEntry> out;
  out.reserve(ctx.phi.relevant.size());
  assert(ctx.eta.signs.size() == ctx.phi.relevant.size());
  for (std::size_t i = 0; i < ctx.phi.relevant.size(); ++i) {
    const auto& e = ctx.phi.relevant[i];
    out.push_back({HalfInt::from_twice(e.alpha.twice - ctx.nu), e.mult, ctx.eta.signs[i]});
  }
  return out;
}

}  // namespace thetalift
