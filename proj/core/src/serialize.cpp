#include "hftlab/serialize.hpp"

namespace hftlab {

json complex_to_json(complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const WindowTrace& t) {
  return json{{"partial", json::array({t.partial[0], t.partial[1], t.partial[2]})}, {"converged", t.converged}};
}

json to_json(const DomainReport& r) {
  json domains = json::array();
  for (auto d : r.member_of) domains.push_back(std::string(to_string(d)));
  return json{{"in_L2", r.in_L2},
              {"abs_cont", r.abs_continuous_proxy},
              {"f0", complex_to_json(r.boundary_value_at_zero)},
              {"domains", domains},
              {"norm_trace", to_json(r.norm_trace)},
              {"moment_trace", to_json(r.moment_trace)},
              {"derivative_trace", to_json(r.derivative_trace)}};
}

json to_json(const NormTrace& t) {
  return json{{"windows", t.windows},
              {"cumulative", t.cumulative},
              {"increments", t.increments},
              {"verdict", std::string(to_string(t.verdict))}};
}

json to_json(const KernelCandidate& k) {
  return json{{"sign", k.sign},
              {"exponent", complex_to_json(k.exponent)},
              {"exponent_description", k.exponent_description},
              {"L2_member", k.L2_member},
              {"trace", to_json(k.trace)}};
}

json to_json(const DeficiencyReport& r) {
  json cands = json::array();
  for (const auto& k : r.kernel_candidates) cands.push_back(to_json(k));
  return json{{"d_plus", r.d_plus},
              {"d_minus", r.d_minus},
              {"operator", std::string(to_string(r.op))},
              {"hbar", r.hbar},
              {"kernel_candidates", cands},
              {"paper_ref", "deficiency indices of S, Z and Z^2"}};
}

json to_json(const ResidualMembership& r) {
  return json{{"lambda", complex_to_json(r.lambda)},
              {"member", r.member},
              {"boundary_case", r.boundary_case},
              {"trace", to_json(r.trace)}};
}

json to_json(const Evidence& e) {
  return json{{"claim", e.claim}, {"statistic", e.statistic}, {"detail", e.detail}, {"pass", e.pass}};
}

json to_json(const SpectrumReport& r) {
  json ev = json::array();
  for (const auto& e : r.numerical_evidence) ev.push_back(to_json(e));
  return json{{"operator", r.operator_name},
              {"point", r.point},
              {"residual", r.residual},
              {"continuous", r.continuous},
              {"numerical_evidence", ev},
              {"all_pass", r.all_pass()},
              {"paper_ref", "point, residual and continuous spectra"}};
}

json to_json(const SupNormResult& r) {
  return json{{"value", r.value},
              {"probe_max", r.probe_max},
              {"argmax_y", r.argmax_y},
              {"limit", r.limit},
              {"strictly_decreasing", r.strictly_decreasing},
              {"probes", r.probes},
              {"line_norms", r.line_norms}};
}

json to_json(const NoncommutationWitness& w) {
  json entries = json::array();
  for (const auto& e : w.entries) entries.push_back(json{{"function", e.function}, {"value", e.value}});
  return json{{"value", w.value},
              {"entries", entries},
              {"root_eigen_residual", w.root_eigen_residual},
              {"z_eigen_residual", w.z_eigen_residual},
              {"first_root_eigenvalue", w.first_root_eigenvalue},
              {"paper_ref", "square root does not commute with Z"}};
}

json to_json(const MobiusTransform& m) { return json::array({m.a(), m.b(), m.c(), m.d()}); }

json to_json(const FreeParticleMap& m) {
  json eig = json::array();
  for (const auto& u : m.eigenfunctions) eig.push_back(json{{"p", u.momentum}, {"u", u.formula}});
  return json{{"E_p", m.energy},
              {"eigenfunctions", eig},
              {"degeneracy", eig.size()},
              {"positive_time_branch", m.positive_time_branch},
              {"negative_time_branch", m.negative_time_branch}};
}

json make_report(const std::string& experiment, const json& body) {
  json out{{"schema", report_schema}, {"experiment", experiment}};
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hftlab
