#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "classent/eigen.hpp"
#include "classent/exact_matrix.hpp"
#include "classent/machine.hpp"

namespace classent::lab {

using machine::CompiledOperator;
using tensor::Dyadic;
using tensor::EigenReport;
using tensor::ExactMatrix;

/// (1/2^n) times the identity: the uniformly mixed n-bit state.
ExactMatrix uniform_density(std::size_t n_bits);

struct IllegalProductResult {
  ExactMatrix rho_uv;  // U rho V^T
  ExactMatrix rho_vu;  // V rho U^T
  Dyadic trace_uv;
  Dyadic trace_vu;
  bool transpose_relation_holds = false;
  ExactMatrix product_identity;  // rho_uv * rho_vu
};

/// Applies U from the left and V^T from the right. Not trace-preserving in
/// general; nothing is renormalized.
IllegalProductResult illegal_product(const CompiledOperator& u, const CompiledOperator& v, const ExactMatrix& rho);

/// Partition of the register into a left and a right subsystem.
struct BitSplit {
  std::set<std::size_t> left;
  std::set<std::size_t> right;

  /// "2|2" splits off the first two bits; "0,2|1,3" lists positions.
  static BitSplit parse(std::string_view text, std::size_t register_bits);
  static BitSplit halves(std::size_t register_bits);
  void validate(std::size_t register_bits) const;
  std::string str() const;
};

enum class Verdict { kPass, kFail, kExpectedFail };
std::string_view verdict_name(Verdict v);

struct Check {
  std::string name;
  Verdict verdict = Verdict::kFail;
  std::string detail;
};

struct Discrepancy {
  std::string name;
  std::string detail;
};

struct AnalysisReport {
  BitSplit split;
  Dyadic input_trace;
  IllegalProductResult illegal;
  ExactMatrix reduced_left;   // Tr_R rho_UV
  ExactMatrix reduced_right;  // Tr_L rho_UV
  ExactMatrix reduced_left_vu;
  ExactMatrix reduced_right_vu;
  EigenReport eigen_left;
  EigenReport eigen_right;
  /// Spectrum of the operator U V^T (= 2^n rho_UV for the uniform input).
  EigenReport eigen_uv;
  /// Eigenvalues of 2^n rho_L and 2^n rho_R, for comparison with unit-scaled claims.
  std::vector<tensor::Complex> scaled_left_eigenvalues;
  std::vector<tensor::Complex> scaled_right_eigenvalues;
  Dyadic det_u;
  Dyadic det_v;
  std::vector<Check> checks;
  std::vector<Discrepancy> known_discrepancies;

  const Check& check(std::string_view name) const;
};

/// Every check listed in AnalysisReport::checks, in report order.
const std::vector<std::string>& analysis_check_names();

AnalysisReport analyze_pair(const CompiledOperator& u, const CompiledOperator& v, const BitSplit& split);

struct QubitMeasurementModel {
  double theta = 0;
};

struct QuantumRecord {
  double theta = 0;  // canonical, in [0, pi]
  /// Amplitudes of |00>, |01>, |10>, |11> (system bit first).
  std::array<double, 4> joint_amplitudes{};
  std::array<std::array<double, 2>, 2> rho_m{};
  double p0 = 0;
  double p1 = 0;
  double correlation = 0;
};

/// Entangling measurement of a qubit prepared at angle theta, real amplitudes.
QuantumRecord quantum_reference(const QubitMeasurementModel& model);
/// theta_k = k pi / (points - 1), k = 0 .. points - 1.
std::vector<QuantumRecord> quantum_curve(std::size_t points = 25);

nlohmann::json eigen_to_json(const EigenReport& r);
nlohmann::json report_to_json(const AnalysisReport& r);
nlohmann::json quantum_to_json(const QuantumRecord& q);

}  // namespace classent::lab
