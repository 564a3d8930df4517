#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "classent/entangle.hpp"

namespace classent::lab {

using tensor::partial_trace;
using tensor::transpose;

ExactMatrix uniform_density(std::size_t n_bits) {
  if (n_bits == 0) throw std::invalid_argument("uniform density needs at least one bit");
  if (n_bits > 12) throw std::invalid_argument("uniform density limited to 12 bits");
  return Dyadic(1, static_cast<std::int32_t>(n_bits)) * ExactMatrix::identity(std::size_t{1} << n_bits);
}

IllegalProductResult illegal_product(const CompiledOperator& u, const CompiledOperator& v, const ExactMatrix& rho) {
  if (u.matrix.rows() != v.matrix.rows() || u.matrix.rows() != rho.rows() || !rho.square()) {
    throw std::invalid_argument("illegal product: operator and state dimensions differ");
  }
  IllegalProductResult r;
  r.rho_uv = u.matrix * rho * transpose(v.matrix);
  r.rho_vu = v.matrix * rho * transpose(u.matrix);
  r.trace_uv = tensor::trace(r.rho_uv);
  r.trace_vu = tensor::trace(r.rho_vu);
  r.transpose_relation_holds = transpose(r.rho_uv) == r.rho_vu;
  r.product_identity = r.rho_uv * r.rho_vu;
  return r;
}

BitSplit BitSplit::halves(std::size_t register_bits) {
  BitSplit s;
  for (std::size_t b = 0; b < register_bits; ++b) (b < register_bits / 2 ? s.left : s.right).insert(b);
  return s;
}

BitSplit BitSplit::parse(std::string_view text, std::size_t register_bits) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("split must look like '2|2' or '0,1|2,3'");
  auto side = [](std::string_view part) {
    std::vector<std::size_t> vals;
    std::size_t pos = 0;
    while (pos <= part.size()) {
      const auto comma = part.find(',', pos);
      const std::string tok(part.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("malformed split component '" + std::string(part) + "'");
      }
      vals.push_back(std::stoul(tok));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return vals;
  };
  const auto lhs = side(text.substr(0, bar));
  const auto rhs = side(text.substr(bar + 1));
  BitSplit s;
  const bool counts = lhs.size() == 1 && rhs.size() == 1 && text.find(',') == std::string_view::npos &&
                      lhs[0] + rhs[0] == register_bits;
  if (counts) {
    for (std::size_t b = 0; b < register_bits; ++b) (b < lhs[0] ? s.left : s.right).insert(b);
  } else {
    s.left.insert(lhs.begin(), lhs.end());
    s.right.insert(rhs.begin(), rhs.end());
  }
  s.validate(register_bits);
  return s;
}

void BitSplit::validate(std::size_t register_bits) const {
  if (left.empty() || right.empty()) throw std::invalid_argument("split: both sides need at least one bit");
  if (left.size() + right.size() != register_bits) {
    throw std::invalid_argument("split: sides must cover the " + std::to_string(register_bits) + "-bit register");
  }
  for (auto b : left) {
    if (b >= register_bits || right.contains(b)) throw std::invalid_argument("split: invalid or shared bit position");
  }
  for (auto b : right) {
    if (b >= register_bits) throw std::invalid_argument("split: invalid bit position");
  }
}

std::string BitSplit::str() const {
  std::string out;
  auto emit = [&out](const std::set<std::size_t>& s) {
    bool first = true;
    for (auto b : s) {
      if (!first) out += ',';
      out += std::to_string(b);
      first = false;
    }
  };
  emit(left);
  out += '|';
  emit(right);
  return out;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kExpectedFail:
      return "expected_fail";
  }
  return "fail";
}

const Check& AnalysisReport::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named '" + std::string(name) + "'");
}

const std::vector<std::string>& analysis_check_names() {
  static const std::vector<std::string> names = {
      "orthogonality",         "involution",           "determinant_sign",
      "so4_membership_of_UV",  "projector_claim",      "unit_modulus_spectrum",
      "ghost_superposition_present", "transpose_relation", "legal_channel_invariance",
      "product_identity",      "reduced_transpose_relation"};
  return names;
}

namespace {

Verdict pass_if(bool ok) { return ok ? Verdict::kPass : Verdict::kFail; }

std::vector<tensor::Complex> scaled(const EigenReport& r, double factor) {
  std::vector<tensor::Complex> out;
  for (const auto& v : r.eigenvalues) out.push_back(v * factor);
  return out;
}

}  // namespace

AnalysisReport analyze_pair(const CompiledOperator& u, const CompiledOperator& v, const BitSplit& split) {
  if (u.register_bits() != v.register_bits()) {
    throw std::invalid_argument("machines act on registers of different size");
  }
  const std::size_t n = u.register_bits();
  split.validate(n);
  const ExactMatrix& um = u.matrix;
  const ExactMatrix& vm = v.matrix;
  const ExactMatrix id = ExactMatrix::identity(um.rows());

  AnalysisReport rep;
  rep.split = split;
  const ExactMatrix rho = uniform_density(n);
  rep.input_trace = tensor::trace(rho);
  rep.illegal = illegal_product(u, v, rho);
  const auto& il = rep.illegal;

  rep.reduced_left = partial_trace(il.rho_uv, split.left);
  rep.reduced_right = partial_trace(il.rho_uv, split.right);
  rep.reduced_left_vu = partial_trace(il.rho_vu, split.left);
  rep.reduced_right_vu = partial_trace(il.rho_vu, split.right);

  rep.eigen_left = tensor::eigen_decompose(rep.reduced_left, true);
  rep.eigen_right = tensor::eigen_decompose(rep.reduced_right, true);
  const ExactMatrix uv = um * transpose(vm);
  rep.eigen_uv = tensor::eigen_decompose(uv, false);
  const double scale = std::ldexp(1.0, static_cast<int>(n));
  rep.scaled_left_eigenvalues = scaled(rep.eigen_left, scale);
  rep.scaled_right_eigenvalues = scaled(rep.eigen_right, scale);

  rep.det_u = tensor::determinant(um);
  rep.det_v = tensor::determinant(vm);

  auto add = [&rep](std::string name, Verdict verdict, std::string detail) {
    rep.checks.push_back(Check{std::move(name), verdict, std::move(detail)});
  };

  add("orthogonality", pass_if(tensor::is_orthogonal(um) && tensor::is_orthogonal(vm)), "U U^T = V V^T = 1");
  add("involution", pass_if(um * um == id && vm * vm == id), "U^2 = V^2 = 1");
  {
    const Dyadic one(1);
    const bool unit = (rep.det_u == one || rep.det_u == -one) && (rep.det_v == one || rep.det_v == -one);
    add("determinant_sign", pass_if(unit), "det U = " + rep.det_u.str() + ", det V = " + rep.det_v.str());
  }
  {
    const bool orth = tensor::is_orthogonal(uv);
    const Dyadic det = tensor::determinant(uv);
    add("so4_membership_of_UV", pass_if(orth && det == Dyadic(1)),
        "2^n rho_UV orthogonal: " + std::string(orth ? "yes" : "no") + ", det = " + det.str());
  }
  {
    const bool proj_uv = il.rho_uv * il.rho_uv == il.rho_uv;
    const bool proj_vu = il.rho_vu * il.rho_vu == il.rho_vu;
    const bool holds = proj_uv && proj_vu;
    add("projector_claim", holds ? Verdict::kPass : Verdict::kExpectedFail,
        std::string("rho_UV^2 = rho_UV: ") + (proj_uv ? "true" : "false") +
            ", rho_VU^2 = rho_VU: " + (proj_vu ? "true" : "false"));
    if (!holds) {
      rep.known_discrepancies.push_back(
          {"projector_claim", "rho_UV and rho_VU are claimed to be projectors; exact squares differ"});
    }
  }
  {
    bool unit = true;
    double worst = 0;
    for (const auto& l : rep.eigen_uv.eigenvalues) {
      worst = std::max(worst, std::abs(std::abs(l) - 1.0));
      unit = unit && std::abs(std::abs(l) - 1.0) < 1e-10;
    }
    std::ostringstream d;
    d << "max | |lambda| - 1 | = " << worst;
    add("unit_modulus_spectrum", pass_if(unit), d.str());
  }
  {
    const bool ghost = rep.eigen_left.has_ghost() || rep.eigen_right.has_ghost();
    add("ghost_superposition_present", pass_if(ghost),
        ghost ? "zero-eigenvalue superposition eigenvector found" : "no zero-eigenvalue superpositions");
  }
  add("transpose_relation", pass_if(il.transpose_relation_holds), "rho_UV^T = rho_VU");
  add("legal_channel_invariance",
      pass_if(um * rho * transpose(um) == rho && vm * rho * transpose(vm) == rho), "U rho U^T = V rho V^T = rho");
  add("product_identity", pass_if(il.product_identity == rho * rho), "rho_UV rho_VU = rho_in^2");
  {
    const bool same_size = split.left.size() == split.right.size();
    const bool holds = same_size && rep.reduced_right == transpose(rep.reduced_left);
    add("reduced_transpose_relation", pass_if(holds), "rho_R = rho_L^T");
  }

  if (rep.reduced_left != rep.reduced_left_vu || rep.reduced_right != rep.reduced_right_vu) {
    rep.known_discrepancies.push_back(
        {"reduced_order_independence",
         "Tr_R rho_UV = Tr_R rho_VU is claimed; exactly Tr_R rho_VU = " +
             std::string(rep.reduced_left_vu == transpose(rep.reduced_left) ? "(Tr_R rho_UV)^T" : "a different matrix")});
  }
  return rep;
}

QuantumRecord quantum_reference(const QubitMeasurementModel& model) {
  if (!std::isfinite(model.theta)) throw std::invalid_argument("theta must be finite");
  constexpr double kTwoPi = 2 * M_PI;
  double t = std::fmod(model.theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t > M_PI) t = kTwoPi - t;

  QuantumRecord q;
  q.theta = t;
  const double c = std::cos(t / 2);
  const double s = std::sin(t / 2);
  q.joint_amplitudes = {c, 0.0, 0.0, s};
  q.p0 = c * c;
  q.p1 = s * s;
  q.rho_m = {{{q.p0, 0.0}, {0.0, q.p1}}};
  // Outcomes +1 / -1 for 0 / 1 on both sides.
  q.correlation = q.p0 - q.p1;
  return q;
}

std::vector<QuantumRecord> quantum_curve(std::size_t points) {
  if (points < 2) throw std::invalid_argument("quantum curve needs at least two points");
  std::vector<QuantumRecord> out;
  for (std::size_t k = 0; k < points; ++k) {
    out.push_back(quantum_reference({M_PI * static_cast<double>(k) / static_cast<double>(points - 1)}));
  }
  return out;
}

}  // namespace classent::lab
