#include "classent/entangle.hpp"
#include "classent/matrix_json.hpp"

namespace classent::lab {

namespace {

using nlohmann::json;

json complex_json(tensor::Complex c) { return json::array({c.real(), c.imag()}); }

json pair_json(const tensor::EigenPair& p) {
  json j;
  j["value"] = complex_json(p.value);
  if (p.exact_value) j["exact_value"] = tensor::dyadic_to_json(*p.exact_value);
  json vec = json::array();
  for (auto c : p.vector) vec.push_back(complex_json(c));
  j["vector"] = std::move(vec);
  j["ghost"] = p.ghost;
  return j;
}

json values_json(const std::vector<tensor::Complex>& vs) {
  json arr = json::array();
  for (auto v : vs) arr.push_back(complex_json(v));
  return arr;
}

}  // namespace

json eigen_to_json(const EigenReport& r) {
  json j;
  j["eigenvalues"] = values_json(r.eigenvalues);
  j["exact_path"] = r.exact_path;
  j["right"] = json::array();
  for (const auto& p : r.right) j["right"].push_back(pair_json(p));
  j["left"] = json::array();
  for (const auto& p : r.left) j["left"].push_back(pair_json(p));
  return j;
}

json report_to_json(const AnalysisReport& r) {
  json j;
  j["format_version"] = 1;
  j["split"] = r.split.str();
  j["input_trace"] = tensor::dyadic_to_json(r.input_trace);
  j["rho_uv"] = tensor::matrix_to_json(r.illegal.rho_uv);
  j["rho_vu"] = tensor::matrix_to_json(r.illegal.rho_vu);
  j["trace_uv"] = tensor::dyadic_to_json(r.illegal.trace_uv);
  j["trace_vu"] = tensor::dyadic_to_json(r.illegal.trace_vu);
  j["transpose_relation_holds"] = r.illegal.transpose_relation_holds;
  j["product_identity"] = tensor::matrix_to_json(r.illegal.product_identity);
  j["reduced_left"] = tensor::matrix_to_json(r.reduced_left);
  j["reduced_right"] = tensor::matrix_to_json(r.reduced_right);
  j["reduced_left_vu"] = tensor::matrix_to_json(r.reduced_left_vu);
  j["reduced_right_vu"] = tensor::matrix_to_json(r.reduced_right_vu);
  j["eigen_left"] = eigen_to_json(r.eigen_left);
  j["eigen_right"] = eigen_to_json(r.eigen_right);
  j["eigen_uv"] = eigen_to_json(r.eigen_uv);
  j["scaled_left_eigenvalues"] = values_json(r.scaled_left_eigenvalues);
  j["scaled_right_eigenvalues"] = values_json(r.scaled_right_eigenvalues);
  j["det_u"] = tensor::dyadic_to_json(r.det_u);
  j["det_v"] = tensor::dyadic_to_json(r.det_v);
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"verdict", verdict_name(c.verdict)}, {"detail", c.detail}});
  }
  j["known_discrepancies"] = json::array();
  for (const auto& d : r.known_discrepancies) {
    j["known_discrepancies"].push_back({{"name", d.name}, {"detail", d.detail}});
  }
  return j;
}

json quantum_to_json(const QuantumRecord& q) {
  return {{"theta", q.theta},
          {"joint_amplitudes", q.joint_amplitudes},
          {"rho_m", q.rho_m},
          {"p0", q.p0},
          {"p1", q.p1},
          {"correlation", q.correlation}};
}

}  // namespace classent::lab
