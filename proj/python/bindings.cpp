#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetalift/diagram.hpp"
#include "thetalift/ggp.hpp"
#include "thetalift/llc.hpp"
#include "thetalift/paramfile.hpp"
#include "thetalift/theta.hpp"

namespace py = pybind11;
using namespace thetalift;

namespace {

// (two_alpha, mult, eta) triples and (winding, t_num, t_den) triples,
// mirroring the parameter file schema.
using RelevantTriples = std::vector<std::tuple<std::int64_t, int, int>>;
using PairTriples = std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>;

ThetaContext build_context(int n, const RelevantTriples& relevant, const PairTriples& pairs,
                           std::int64_t nu) {
  std::vector<RelevantEntry> entries;
  std::vector<std::pair<std::int64_t, int>> signs;
  for (const auto& [two_alpha, mult, eta] : relevant) {
    entries.push_back({HalfInt::from_twice(two_alpha), mult});
    signs.emplace_back(two_alpha, eta);
  }
  std::vector<UnitaryChar> xi;
  for (const auto& [winding, t_num, t_den] : pairs) {
    if (t_den == 0) throw validation_error("pair denominator must be nonzero");
    xi.push_back({winding, Rational(t_num, t_den)});
  }
  TempParam phi = build_param(n, std::move(entries), std::move(xi));
  std::vector<int> ordered;
  for (const auto& e : phi.relevant) {
    int sign = 0;
    for (const auto& [two_alpha, s] : signs)
      if (two_alpha == e.alpha.twice) sign = s;
    if (sign == 0)
      throw validation_error("every distinct relevant exponent needs an eta sign");
    ordered.push_back(sign);
  }
  ComponentChar eta = make_component_char(phi, std::move(ordered));
  return make_context(std::move(phi), std::move(eta), nu);
}

py::list signed_set_to_list(const SignedSet& set) {
  py::list out;
  for (const auto& [beta, sign] : set) out.append(py::make_tuple(beta.twice, sign));
  return out;
}

py::dict analyze(int n, const RelevantTriples& relevant, const PairTriples& pairs,
                 std::int64_t nu) {
  const ThetaContext ctx = build_context(n, relevant, pairs, nu);
  const ThetaInvariants inv = invariants(ctx);
  const Signature sig = signature_of(ctx.phi, ctx.eta);
  py::dict out;
  out["n"] = ctx.phi.n;
  out["kappa"] = ctx.kappa();
  out["k"] = inv.k;
  out["r"] = inv.r;
  out["s"] = inv.s;
  out["x"] = signed_set_to_list(inv.x);
  out["x_inf"] = signed_set_to_list(inv.x_inf);
  out["signature"] = py::make_tuple(sig.p, sig.q);
  out["hc"] = ctx.phi.is_discrete()
                  ? py::object(py::str(format_hc(param_to_hc(ctx.phi, ctx.eta))))
                  : py::object(py::none());
  return out;
}

}  // namespace

PYBIND11_MODULE(_thetalift, m) {
  m.doc() = "Exact non-vanishing criteria for archimedean theta lifts of "
            "tempered representations of U(p,q)";

  py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);

  m.def("analyze", &analyze, py::arg("n"), py::arg("relevant"),
        py::arg("pairs") = PairTriples{}, py::arg("nu") = 0,
        "Invariants (k, r, s, X, X_inf, signature) of a parameter");

  m.def(
      "nonvanishing",
      [](int n, const RelevantTriples& relevant, const PairTriples& pairs, std::int64_t nu,
         std::int64_t r, std::int64_t s) {
        return nonvanishing(build_context(n, relevant, pairs, nu), r, s);
      },
      py::arg("n"), py::arg("relevant"), py::arg("pairs"), py::arg("nu"), py::arg("r"),
      py::arg("s"), "Whether the theta lift to U(r,s) is nonzero");

  m.def(
      "first_occurrence",
      [](int n, const RelevantTriples& relevant, const PairTriples& pairs, std::int64_t nu,
         std::int64_t d) {
        return first_occurrence(build_context(n, relevant, pairs, nu), d);
      },
      py::arg("n"), py::arg("relevant"), py::arg("pairs"), py::arg("nu"), py::arg("d"),
      "First occurrence index of the d-th Witt tower");

  m.def(
      "conservation",
      [](int n, const RelevantTriples& relevant, const PairTriples& pairs,
         std::int64_t nu) {
        const ConservationReport rep =
            conservation_report(build_context(n, relevant, pairs, nu));
        py::dict out;
        out["m_plus"] = rep.m_plus;
        out["m_minus"] = rep.m_minus;
        out["sum"] = rep.sum;
        out["holds"] = rep.holds;
        return out;
      },
      py::arg("n"), py::arg("relevant"), py::arg("pairs"), py::arg("nu"));

  m.def(
      "hc_to_param",
      [](const std::string& hc) {
        const LParam lp = hc_to_param(parse_hc_string(hc));
        py::list relevant;
        for (std::size_t i = 0; i < lp.phi.relevant.size(); ++i)
          relevant.append(py::make_tuple(lp.phi.relevant[i].alpha.twice,
                                         lp.phi.relevant[i].mult, lp.eta.signs[i]));
        return py::make_tuple(lp.phi.n, relevant);
      },
      py::arg("hc"), "Parameter data attached to a Harish-Chandra string");

  m.def(
      "param_to_hc",
      [](int n, const RelevantTriples& relevant) {
        const ThetaContext ctx = build_context(n, relevant, {}, 0);
        return format_hc(param_to_hc(ctx.phi, ctx.eta));
      },
      py::arg("n"), py::arg("relevant"),
      "Harish-Chandra string of a discrete parameter");

  m.def(
      "epsilon_factor",
      [](const std::vector<std::pair<std::int64_t, int>>& chi) {
        CharacterSum sum;
        for (const auto& [two_alpha, mult] : chi)
          sum.chi.emplace_back(HalfInt::from_twice(two_alpha), mult);
        return epsilon_factor(sum);
      },
      py::arg("chi"), "Root number of a formal sum of chi_{2a} (two_alpha, mult) terms");

  m.def(
      "ggp_distinguished",
      [](int n, const RelevantTriples& rel_n, const PairTriples& pairs_n,
         const RelevantTriples& rel_n1, const PairTriples& pairs_n1) {
        const ThetaContext a = build_context(n, rel_n, pairs_n, 0);
        const ThetaContext b = build_context(n + 1, rel_n1, pairs_n1, 0);
        const DistinguishedPair pair = restriction_distinguished(a.phi, b.phi);
        py::dict out;
        out["eta_n"] = pair.eta_n.signs;
        out["eta_n1"] = pair.eta_n1.signs;
        out["signature_n"] = py::make_tuple(pair.sig_n.p, pair.sig_n.q);
        out["signature_n1"] = py::make_tuple(pair.sig_n1.p, pair.sig_n1.q);
        return out;
      },
      py::arg("n"), py::arg("relevant_n"), py::arg("pairs_n"), py::arg("relevant_n1"),
      py::arg("pairs_n1"), "Distinguished pair of component characters");

  m.def(
      "diagram",
      [](int n, const RelevantTriples& relevant, const PairTriples& pairs, std::int64_t nu,
         std::int64_t r_max, std::int64_t s_max) {
        const ThetaContext ctx = build_context(n, relevant, pairs, nu);
        py::list out;
        for (const auto& cell : diagram_cells(ctx, {r_max, s_max, DiagramFormat::json}))
          out.append(py::make_tuple(cell.r, cell.s, cell.nonzero));
        return out;
      },
      py::arg("n"), py::arg("relevant"), py::arg("pairs"), py::arg("nu"), py::arg("rmax"),
      py::arg("smax"), "In-parity occurrence cells as (r, s, nonzero) tuples");
}
