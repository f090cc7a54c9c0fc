#include "thetalift/llc.hpp"

#include <algorithm>
#include <cassert>

namespace thetalift {

namespace {

// (-1)^i for 0-based positions.
int position_sign(std::size_t i) { return i % 2 == 0 ? 1 : -1; }

void require_discrete(const TempParam& phi, const char* op) {
  if (!phi.is_discrete())
    throw validation_error(std::string(op) + " requires a discrete parameter "
                           "(all multiplicities one, no conjugate pairs)");
}

}  // namespace

HCParam param_to_hc(const TempParam& phi, const ComponentChar& eta) {
  require_discrete(phi, "param_to_hc");
  assert(eta.signs.size() == phi.relevant.size());
  std::vector<HalfInt> plus, minus;
  for (std::size_t i = 0; i < phi.relevant.size(); ++i) {
    if (eta.signs[i] == position_sign(i))
      plus.push_back(phi.relevant[i].alpha);
    else
      minus.push_back(phi.relevant[i].alpha);
  }
  return make_hc_param(std::move(plus), std::move(minus));
}

LParam hc_to_param(const HCParam& hc) {
  std::vector<HalfInt> merged;
  merged.reserve(hc.n());
  std::merge(hc.plus.begin(), hc.plus.end(), hc.minus.begin(), hc.minus.end(),
             std::back_inserter(merged), [](HalfInt a, HalfInt b) { return a > b; });

  std::vector<RelevantEntry> relevant;
  std::vector<int> signs;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    relevant.push_back({merged[i], 1});
    const bool in_plus = std::binary_search(hc.plus.begin(), hc.plus.end(), merged[i],
                                            [](HalfInt a, HalfInt b) { return a > b; });
    signs.push_back(in_plus ? position_sign(i) : -position_sign(i));
  }
  TempParam phi = build_param(hc.n(), std::move(relevant), {});
  ComponentChar eta = make_component_char(phi, std::move(signs));
  return {std::move(phi), std::move(eta)};
}

Signature signature_of(const TempParam& phi, const ComponentChar& eta) {
  assert(eta.signs.size() == phi.relevant.size());
  int u = 0, p0 = 0;
  for (std::size_t i = 0; i < phi.relevant.size(); ++i) {
    if (phi.relevant[i].mult % 2 == 0) continue;
    if (eta.signs[i] == position_sign(u)) ++p0;
    ++u;
  }
  const int v = (phi.n - u) / 2;
  return Signature{p0 + v, u - p0 + v};
}

LParam contragredient(const TempParam& phi, const ComponentChar& eta) {
  assert(eta.signs.size() == phi.relevant.size());
  const int flip = phi.n % 2 == 0 ? -1 : 1;

  std::vector<RelevantEntry> relevant;
  std::vector<int> signs;
  for (std::size_t i = phi.relevant.size(); i-- > 0;) {
    relevant.push_back({-phi.relevant[i].alpha, phi.relevant[i].mult});
    signs.push_back(flip * eta.signs[i]);
  }
  std::vector<UnitaryChar> pairs;
  pairs.reserve(phi.pairs.size());
  for (const auto& xi : phi.pairs) pairs.push_back(UnitaryChar{-xi.winding, -xi.radial});

  TempParam dual = build_param(phi.n, std::move(relevant), std::move(pairs));
  ComponentChar deta = make_component_char(dual, std::move(signs));
  return {std::move(dual), std::move(deta)};
}

LParam swap_pq(const TempParam& phi, const ComponentChar& eta) {
  ComponentChar flipped = eta;
  for (int& s : flipped.signs) s = -s;
  return {phi, std::move(flipped)};
}

LParam det_twist(const TempParam& phi, const ComponentChar& eta, std::int64_t a) {
  std::vector<RelevantEntry> relevant = phi.relevant;
  for (auto& e : relevant) e.alpha = e.alpha + HalfInt::whole(a);
  std::vector<UnitaryChar> pairs = phi.pairs;
  for (auto& xi : pairs) xi.winding += 2 * a;
  TempParam twisted = build_param(phi.n, std::move(relevant), std::move(pairs));
  ComponentChar teta = make_component_char(twisted, eta.signs);
  return {std::move(twisted), std::move(teta)};
}

int epsilon_factor(const CharacterSum& sum) {
  int eps = 1;
  for (const auto& [alpha, mult] : sum.chi) {
    if (alpha.is_integer()) continue;
    assert(!alpha.is_zero());  // a half-odd exponent is never zero
    if (alpha > HalfInt{} && mult % 2 != 0) eps = -eps;
  }
  return eps;  // conjugate pairs contribute +1
}

CharacterSum tensor_with_chi(const TempParam& phi, HalfInt a) {
  CharacterSum sum;
  sum.chi.reserve(phi.relevant.size());
  for (const auto& e : phi.relevant) sum.chi.emplace_back(e.alpha + a, e.mult);
  for (const auto& xi : phi.pairs)
    sum.pairs.push_back(UnitaryChar{xi.winding + a.twice, xi.radial});
  return sum;
}

std::vector<HalfInt> infinitesimal_character(const TempParam& phi) {
  require_discrete(phi, "infinitesimal_character");
  std::vector<HalfInt> out;
  out.reserve(phi.relevant.size());
  for (const auto& e : phi.relevant) out.push_back(e.alpha);
  return out;
}

ComponentChar appendix_j(const HCParam& hc, bool minus_datum) {
  const std::size_t p = hc.plus.size();
  const std::size_t n = static_cast<std::size_t>(hc.n());

  // sigma sorts the concatenated (plus; minus) tuple into decreasing
  // order; entry j of the merged list came from the plus block exactly
  // when sigma^{-1}(j) <= p.
  std::vector<std::size_t> concat_index(n);
  for (std::size_t i = 0; i < n; ++i) concat_index[i] = i;
  auto concat_value = [&](std::size_t i) {
    return i < p ? hc.plus[i] : hc.minus[i - p];
  };
  std::vector<std::size_t> sigma = concat_index;
  std::sort(sigma.begin(), sigma.end(),
            [&](std::size_t a, std::size_t b) { return concat_value(a) > concat_value(b); });

  std::vector<int> signs(n);
  for (std::size_t j = 0; j < n; ++j) {
    const bool from_plus = sigma[j] < p;
    int s = from_plus ? position_sign(j) : -position_sign(j);
    if (minus_datum) s = -s;
    signs[j] = s;
  }
  return ComponentChar{std::move(signs)};
}

}  // namespace thetalift
