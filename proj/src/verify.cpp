#include "thetalift/verify.hpp"

#include <algorithm>
#include <sstream>

#include "thetalift/paramfile.hpp"

namespace thetalift {

namespace {

// The discrete part of the context: odd multiplicities reduced to one,
// pairs dropped, eta restricted.  Identity on discrete parameters.
LParam discrete_core(const ThetaContext& ctx) {
  std::vector<RelevantEntry> relevant;
  std::vector<int> signs;
  for (std::size_t i = 0; i < ctx.phi.relevant.size(); ++i) {
    if (ctx.phi.relevant[i].mult % 2 == 0) continue;
    relevant.push_back({ctx.phi.relevant[i].alpha, 1});
    signs.push_back(ctx.eta.signs[i]);
  }
  if (relevant.empty()) return {};
  const int core_n = static_cast<int>(relevant.size());
  TempParam phi = build_param(core_n, std::move(relevant), {});
  ComponentChar eta = make_component_char(phi, std::move(signs));
  return {std::move(phi), std::move(eta)};
}

CheckResult check_conservation(const ThetaContext& ctx) {
  const ConservationReport rep = conservation_report(ctx);
  std::ostringstream detail;
  detail << "m_+ = " << rep.m_plus << ", m_- = " << rep.m_minus << ", sum = " << rep.sum
         << ", expected " << 2 * ctx.phi.n + 2;
  return {"conservation", rep.holds, detail.str()};
}

CheckResult check_tower(const ThetaContext& ctx) {
  const std::int64_t bound = 2 * ctx.phi.n + 6;
  for (std::int64_t r = 0; r <= bound; ++r)
    for (std::int64_t s = 0; r + s <= bound; ++s) {
      if (((r + s - ctx.nu) % 2 + 2) % 2 != 0) continue;
      if (nonvanishing(ctx, r, s) && !nonvanishing(ctx, r + 1, s + 1)) {
        std::ostringstream detail;
        detail << "nonzero at (" << r << "," << s << ") but zero at (" << r + 1 << ","
               << s + 1 << ")";
        return {"tower", false, detail.str()};
      }
    }
  return {"tower", true, "monotone up every Witt tower"};
}

CheckResult check_duality(const ThetaContext& ctx) {
  const ThetaContext dual = dual_context(ctx);
  const std::int64_t bound = 2 * ctx.phi.n + 6;
  for (std::int64_t r = 0; r <= bound; ++r)
    for (std::int64_t s = 0; r + s <= bound; ++s) {
      if (((r + s - ctx.nu) % 2 + 2) % 2 != 0) continue;
      if (nonvanishing(ctx, r, s) != nonvanishing(dual, s, r)) {
        std::ostringstream detail;
        detail << "mismatch with the dual context at (" << r << "," << s << ")";
        return {"duality", false, detail.str()};
      }
    }
  return {"duality", true, "agrees with the dual context on the scanned range"};
}

CheckResult check_llc_roundtrip(const ThetaContext& ctx) {
  const LParam core = discrete_core(ctx);
  if (core.phi.n == 0) return {"llc-roundtrip", true, "no discrete part to check"};
  const HCParam hc = param_to_hc(core.phi, core.eta);
  const LParam back = hc_to_param(hc);
  const bool ok = back.phi == core.phi && back.eta == core.eta;
  return {"llc-roundtrip", ok,
          ok ? "hc_to_param inverts param_to_hc on the discrete part (" + format_hc(hc) + ")"
             : "round trip through " + format_hc(hc) + " does not close"};
}

CheckResult check_appendix_j(const ThetaContext& ctx) {
  const LParam core = discrete_core(ctx);
  if (core.phi.n == 0) return {"appendix-j", true, "no discrete part to check"};
  const HCParam hc = param_to_hc(core.phi, core.eta);
  const bool ok = appendix_j(hc) == core.eta;
  return {"appendix-j", ok,
          ok ? "Whittaker-datum formula matches the packet character"
             : "Whittaker-datum formula disagrees with the packet character"};
}

}  // namespace

std::vector<std::string> all_check_names() {
  return {"conservation", "tower", "duality", "llc-roundtrip", "appendix-j"};
}

std::vector<CheckResult> run_checks(const ThetaContext& ctx,
                                    const std::vector<std::string>& names) {
  std::vector<CheckResult> results;
  for (const auto& name : names) {
    if (name == "conservation")
      results.push_back(check_conservation(ctx));
    else if (name == "tower")
      results.push_back(check_tower(ctx));
    else if (name == "duality")
      results.push_back(check_duality(ctx));
    else if (name == "llc-roundtrip")
      results.push_back(check_llc_roundtrip(ctx));
    else if (name == "appendix-j")
      results.push_back(check_appendix_j(ctx));
    else
      throw validation_error("unknown check '" + name + "'");
  }
  return results;
}

}  // namespace thetalift
