#include "thetalift/theta.hpp"

#include <algorithm>
#include <cassert>

namespace thetalift {

std::vector<HalfInt> SignedSet::projection() const {
  std::vector<HalfInt> betas;
  for (const auto& [beta, sign] : elems_) {
    (void)sign;
    if (betas.empty() || betas.back() != beta) betas.push_back(beta);
  }
  return betas;
}

bool SignedSet::is_subset_of(const SignedSet& other) const {
  return std::all_of(elems_.begin(), elems_.end(), [&](const auto& e) {
    return other.contains(e.first, e.second);
  });
}

namespace {

int position_sign(int i) { return i % 2 == 0 ? 1 : -1; }

// The shifted exponents split by multiplicity parity.  Entries keep
// their decreasing order; `sign` is the eta value on the matching
// component-group generator.
struct ShiftedView {
  std::vector<ShiftedEntry> odd;
  std::vector<ShiftedEntry> even;
  std::vector<ShiftedEntry> all;
  int n = 0;
  int kappa = 0;

  int pair_slots() const {
    // v in the u + 2v = n decomposition: every copy beyond the first of
    // an odd-multiplicity character, every even-multiplicity character,
    // and every genuine conjugate pair contribute here.
    return (n - static_cast<int>(odd.size())) / 2;
  }

  const ShiftedEntry* find(std::int64_t twice_beta) const {
    for (const auto& e : all)
      if (e.beta.twice == twice_beta) return &e;
    return nullptr;
  }
};

ShiftedView make_view(const ThetaContext& ctx) {
  ShiftedView view;
  view.all = shifted_exponents(ctx);
  view.n = ctx.phi.n;
  view.kappa = ctx.kappa();
  for (const auto& e : view.all)
    (e.mult % 2 != 0 ? view.odd : view.even).push_back(e);
  return view;
}

int k_lambda_impl(const ShiftedView& view) {
  int best = view.kappa - 2;
  for (int k = view.kappa; k <= view.n; k += 2) {
    bool ok = true;
    // chain + odd-ness: chi_{k-1}, chi_{k-3}, ..., chi_{-k+1} all
    // present with odd multiplicity
    for (int j = k - 1; j >= -k + 1 && ok; j -= 2) {
      const ShiftedEntry* e = view.find(j);
      if (e == nullptr || e->mult % 2 == 0) ok = false;
    }
    // alternating: eta flips between consecutive chain generators
    for (int j = k - 1; j >= -k + 3 && ok; j -= 2) {
      const ShiftedEntry* a = view.find(j);
      const ShiftedEntry* b = view.find(j - 2);
      if (a->sign != -b->sign) ok = false;
    }
    if (ok) best = k;
  }
  return best;
}

std::pair<int, int> rs_lambda_impl(const ShiftedView& view, int k) {
  int r = 0, s = 0;
  for (std::size_t i = 0; i < view.odd.size(); ++i) {
    const auto& e = view.odd[i];
    if (e.beta.abs().twice < k + 1) continue;  // |beta| >= (k+1)/2
    const int oriented = position_sign(static_cast<int>(i)) * e.sign * e.beta.sign();
    if (oriented > 0) ++r;
    if (oriented < 0) ++s;
  }
  const int v = view.pair_slots();
  return {r + v, s + v};
}

SignedSet x_lambda_impl(const ShiftedView& view) {
  SignedSet x;
  for (std::size_t i = 0; i < view.odd.size(); ++i)
    x.insert(view.odd[i].beta, position_sign(static_cast<int>(i)) * view.odd[i].sign);
  for (const auto& e : view.even) {
    int above = 0;
    for (const auto& o : view.odd)
      if (o.beta > e.beta) ++above;
    if (e.sign != position_sign(above)) {
      x.insert(e.beta, 1);
      x.insert(e.beta, -1);
    }
  }
  return x;
}

}  // namespace

SignedSet prune_once(const SignedSet& x, int k) {
  SignedSet cur = x;
  const std::vector<HalfInt> betas = cur.projection();
  std::vector<std::pair<HalfInt, HalfInt>> removals;
  for (std::size_t i = 1; i < betas.size(); ++i) {
    const HalfInt hi = betas[i - 1], lo = betas[i];
    if (!cur.contains(hi, 1) || !cur.contains(lo, -1)) continue;
    const std::int64_t min_twice_abs = std::min(hi.abs().twice, lo.abs().twice);
    if (min_twice_abs < k + 1) continue;  // min(|hi|,|lo|) >= (k+1)/2
    if (hi.sign() * lo.sign() < 0) continue;
    removals.emplace_back(hi, lo);
  }
  for (const auto& [hi, lo] : removals) {
    cur.erase(hi, 1);
    cur.erase(lo, -1);
  }
  return cur;
}

SignedSet x_infinity(const SignedSet& x, int k) {
  SignedSet cur = x;
  std::size_t passes = 0;
  for (;;) {
    SignedSet next = prune_once(cur, k);
    if (next == cur) break;
    cur = std::move(next);
    ++passes;
    assert(passes <= x.size() / 2 + 1);  // fixpoint within n steps
  }
  return cur;
}

int c_count(const SignedSet& x_inf, int k, std::int64_t T, int eps) {
  if (T <= 0) return 0;
  int count = 0;
  for (const auto& [beta, sign] : x_inf) {
    if (sign != eps) continue;
    const std::int64_t doubled = eps * beta.twice + (k - 1);  // 2*(eps*beta + (k-1)/2)
    if (doubled >= 0 && doubled < 2 * T) ++count;
  }
  return count;
}

int k_lambda(const ThetaContext& ctx) { return k_lambda_impl(make_view(ctx)); }

std::pair<int, int> rs_lambda(const ThetaContext& ctx) {
  const ShiftedView view = make_view(ctx);
  return rs_lambda_impl(view, k_lambda_impl(view));
}

SignedSet x_lambda(const ThetaContext& ctx) { return x_lambda_impl(make_view(ctx)); }

ThetaInvariants invariants(const ThetaContext& ctx) {
  const ShiftedView view = make_view(ctx);
  ThetaInvariants inv;
  inv.k = k_lambda_impl(view);
  std::tie(inv.r, inv.s) = rs_lambda_impl(view, inv.k);
  inv.x = x_lambda_impl(view);
  inv.x_inf = x_infinity(inv.x, inv.k);
  assert(inv.r + inv.s == (inv.k >= 0 ? view.n - inv.k : view.n));
  assert(inv.x_inf.is_subset_of(inv.x));
  return inv;
}

ThetaContext dual_context(const ThetaContext& ctx) {
  LParam dual = contragredient(ctx.phi, ctx.eta);
  dual = det_twist(dual.phi, dual.eta, ctx.nu);  // tensor by chi_V^2
  return make_context(std::move(dual.phi), std::move(dual.eta), ctx.nu);
}

namespace {

bool counts_within(const ThetaInvariants& inv, std::int64_t T, std::int64_t l) {
  return c_count(inv.x_inf, inv.k, T, 1) <= l && c_count(inv.x_inf, inv.k, T, -1) <= l;
}

// Threshold on l for the equal-difference tower when k = -1:
// the lift to U(r+1+l, s+l) is nonzero iff l >= this value.
std::int64_t t0_threshold_neg(const ThetaContext& ctx, const ThetaInvariants& inv) {
  const ShiftedView view = make_view(ctx);
  const ShiftedEntry* zero = view.find(0);
  if (zero == nullptr) return 0;  // phi does not contain chi_V
  return inv.x.contains_either_sign(HalfInt{}) ? 1 : -1;
}

// Threshold on l for the same tower when k >= 0: -1 exactly when the
// extended chain, even-multiplicity and strict-alternation conditions
// all hold.
std::int64_t t0_threshold_nonneg(const ThetaContext& ctx, const ThetaInvariants& inv) {
  const ShiftedView view = make_view(ctx);
  const int k = inv.k;
  const ShiftedEntry* top = view.find(k + 1);
  const ShiftedEntry* bottom = view.find(-(k + 1));
  if (top == nullptr || bottom == nullptr) return 0;
  if (top->mult % 2 != 0 && bottom->mult % 2 != 0) return 0;
  for (int j = k + 1; j >= -k + 1; j -= 2) {
    const ShiftedEntry* a = view.find(j);
    const ShiftedEntry* b = view.find(j - 2);
    assert(a != nullptr && b != nullptr);
    if (a->sign == b->sign) return 0;
  }
  return -1;
}

}  // namespace

bool nonvanishing(const ThetaContext& ctx, std::int64_t r, std::int64_t s) {
  if (r < 0 || s < 0) throw validation_error("target signature entries must be non-negative");
  if (((r + s - ctx.nu) % 2 + 2) % 2 != 0)
    throw validation_error("r + s and nu must have the same parity");

  const ThetaInvariants inv = invariants(ctx);
  const std::int64_t delta = (r - s) - (inv.r - inv.s);
  assert(((delta % 2 + 2) % 2 == 1) == (inv.k == -1));

  if (inv.k == -1) {
    if (delta < 1) return nonvanishing(dual_context(ctx), s, r);
    const std::int64_t t = (delta - 1) / 2;
    const std::int64_t l = s - inv.s;
    if (t >= 1) return l >= 0 && counts_within(inv, t + l, l);
    return l >= t0_threshold_neg(ctx, inv);
  }

  if (delta < 0) return nonvanishing(dual_context(ctx), s, r);
  const std::int64_t t = delta / 2;
  const std::int64_t l = s - inv.s;
  if (t >= 1) return l >= inv.k && counts_within(inv, t + l, l);
  return l >= t0_threshold_nonneg(ctx, inv);
}

std::int64_t first_occurrence(const ThetaContext& ctx, std::int64_t d) {
  if (((d - ctx.nu) % 2 + 2) % 2 != 0)
    throw validation_error("d and nu must have the same parity");

  const ThetaInvariants inv = invariants(ctx);
  const std::int64_t delta = d - (inv.r - inv.s);
  const std::int64_t base = inv.r + inv.s;

  auto scan = [&](std::int64_t t, std::int64_t l_min) {
    const std::int64_t l_max = l_min + static_cast<std::int64_t>(inv.x_inf.size()) + 1;
    for (std::int64_t l = l_min;; ++l) {
      assert(l <= l_max);
      if (counts_within(inv, t + l, l)) return l;
    }
  };

  if (inv.k == -1) {
    if (delta < 1) return first_occurrence(dual_context(ctx), -d);
    const std::int64_t t = (delta - 1) / 2;
    const std::int64_t l =
        t >= 1 ? scan(t, 0) : t0_threshold_neg(ctx, inv);
    return base + 2 * t + 2 * l + 1;
  }

  if (delta < 0) return first_occurrence(dual_context(ctx), -d);
  const std::int64_t t = delta / 2;
  const std::int64_t l = t >= 1 ? scan(t, inv.k) : t0_threshold_nonneg(ctx, inv);
  return base + 2 * t + 2 * l;
}

ConservationReport conservation_report(const ThetaContext& ctx) {
  const std::int64_t n = ctx.phi.n;
  const std::int64_t delta_parity = ((ctx.nu % 2) + 2) % 2;

  ConservationReport report;
  bool have_plus = false, have_minus = false;
  for (std::int64_t d = -(2 * n + 2); d <= 2 * n + 2; ++d) {
    if (((d - delta_parity) % 2 + 2) % 2 != 0) continue;
    const std::int64_t m = first_occurrence(ctx, d);
    const bool plus_family = ((d - delta_parity) / 2) % 2 == 0;
    if (plus_family) {
      report.m_plus = have_plus ? std::min(report.m_plus, m) : m;
      have_plus = true;
    } else {
      report.m_minus = have_minus ? std::min(report.m_minus, m) : m;
      have_minus = true;
    }
  }
  assert(have_plus && have_minus);
  report.sum = report.m_plus + report.m_minus;
  report.holds = report.sum == 2 * n + 2;
  return report;
}

namespace {

// The multiplicity-parity-free counts behind the equal and almost
// equal rank statements: oriented-sign tallies over the
// odd-multiplicity exponents plus one per conjugate pair.
std::pair<int, int> oriented_counts(const ShiftedView& view) {
  int r = 0, s = 0;
  for (std::size_t i = 0; i < view.odd.size(); ++i) {
    const auto& e = view.odd[i];
    const int oriented = position_sign(static_cast<int>(i)) * e.sign * e.beta.sign();
    if (oriented > 0) ++r;
    if (oriented < 0) ++s;
  }
  const int v = view.pair_slots();
  return {r + v, s + v};
}

}  // namespace

Signature paul_equal_rank(const ThetaContext& ctx) {
  if (ctx.kappa() != 2)
    throw validation_error("equal-rank regime requires nu = n (mod 2)");
  const ShiftedView view = make_view(ctx);
  const auto [r, s] = oriented_counts(view);
  assert(r + s == view.n);
  return Signature{r, s};
}

std::vector<Signature> paul_almost_equal_rank(const ThetaContext& ctx) {
  if (ctx.kappa() != 1)
    throw validation_error("almost-equal-rank regime requires nu = n+1 (mod 2)");
  const ShiftedView view = make_view(ctx);
  const auto [r, s] = oriented_counts(view);
  const ShiftedEntry* zero = view.find(0);

  if (zero == nullptr) return {Signature{r + 1, s}, Signature{r, s + 1}};
  if (zero->mult % 2 != 0) return {Signature{r, s}};

  const SignedSet x = x_lambda_impl(view);
  if (x.contains_either_sign(HalfInt{})) return {Signature{r - 1, s}};
  return {Signature{r, s - 1}};
}

}  // namespace thetalift
