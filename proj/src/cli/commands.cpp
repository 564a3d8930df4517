#include "classent/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "classent/entangle.hpp"
#include "classent/machine_json.hpp"
#include "classent/omega.hpp"
#include "classent/reproduce.hpp"

namespace classent::cli {

namespace {

struct Emit {
  std::ostream& out;
  std::string path;

  /// Writes to --out when given, stdout otherwise.
  bool operator()(const std::string& text, std::ostream& err) const {
    if (path.empty()) {
      out << text;
      return true;
    }
    std::ofstream f(path, std::ios::trunc);
    if (!f || !(f << text)) {
      err << "error: cannot write " << path << "\n";
      return false;
    }
    return true;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::string frac_text(const tensor::Dyadic& d) {
  if (d.exponent() == 0) return std::to_string(d.numerator());
  return std::to_string(d.numerator()) + "/" + std::to_string(std::int64_t{1} << d.exponent());
}

std::string analysis_text(const lab::AnalysisReport& r, const std::string& u_name, const std::string& v_name) {
  std::ostringstream o;
  o << "machines: U = " << u_name << ", V = " << v_name << ", split " << r.split.str() << "\n";
  o << "Tr rho_in = " << frac_text(r.input_trace) << ", Tr rho_UV = " << frac_text(r.illegal.trace_uv)
    << ", Tr rho_VU = " << frac_text(r.illegal.trace_vu) << "\n";
  o << "det U = " << r.det_u.str() << ", det V = " << r.det_v.str() << "\n";
  o << "\nrho_UV:\n" << tensor::to_text(r.illegal.rho_uv);
  o << "\nrho_L = Tr_R rho_UV:\n" << tensor::to_text(r.reduced_left);
  o << "\nrho_R = Tr_L rho_UV:\n" << tensor::to_text(r.reduced_right);
  auto pairs = [&o](const char* title, const std::vector<tensor::EigenPair>& ps) {
    o << title << "\n";
    for (const auto& p : ps) {
      o << "  " << (p.exact_value ? p.exact_value->str() : std::to_string(p.value.real()) + "+" +
                                                                std::to_string(p.value.imag()) + "i")
        << " :";
      for (auto c : p.vector) o << " " << c.real() << (c.imag() != 0 ? "+" + std::to_string(c.imag()) + "i" : "");
      o << (p.ghost ? "   (ghost)" : "") << "\n";
    }
  };
  o << "\n";
  pairs("rho_L right eigenpairs:", r.eigen_left.right);
  pairs("rho_L left eigenpairs:", r.eigen_left.left);
  pairs("rho_R right eigenpairs:", r.eigen_right.right);
  pairs("rho_R left eigenpairs:", r.eigen_right.left);
  o << "\nchecks:\n";
  for (const auto& c : r.checks) o << "  [" << lab::verdict_name(c.verdict) << "] " << c.name << ": " << c.detail << "\n";
  if (!r.known_discrepancies.empty()) {
    o << "\nknown discrepancies:\n";
    for (const auto& d : r.known_discrepancies) o << "  " << d.name << ": " << d.detail << "\n";
  }
  return o.str();
}

machine::CompiledOperator load_machine(const std::string& where) {
  // A bare builtin name is accepted as shorthand for {"builtin": name}.
  for (const auto& name : machine::builtin_names()) {
    if (where == name) return machine::builtin(name);
  }
  return machine::machine_from_text(read_file(where));
}

std::string omega_text(const omega::OmegaResult& r) {
  std::ostringstream o;
  o << "Omega_" << r.n << "(" << r.t << ") = " << frac_text(r.omega) << "  (" << r.omega.str() << ")\n";
  o << "halting programs: " << r.census.size() << "\n";
  o << "timed-out subtrees: " << r.timeout_count << ", unfinished length-" << r.n
    << " programs: " << r.needs_more_count << "\n";
  const std::size_t shown = std::min<std::size_t>(r.census.size(), 64);
  for (std::size_t i = 0; i < shown; ++i) o << "  " << r.census[i].str() << "\n";
  if (shown < r.census.size()) o << "  ... (" << r.census.size() - shown << " more; use --format json)\n";
  return o.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classically entangled machine simulator and finite halting probabilities"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string out_path;

  auto* reproduce = app.add_subcommand("reproduce", "Recompute a documented artifact and diff it against stored values");
  std::string case_name;
  bool strict = false;
  reproduce->add_option("--case", case_name, "copy-gate | cnot | two-bit-pair | appendix-pair | quantum-curve | all")
      ->required();
  reproduce->add_flag("--strict", strict, "Exit 2 on any mismatch not on the expected-fail ledger");

  auto* analyze = app.add_subcommand("analyze", "Analyze an arbitrary machine pair");
  std::string u_path;
  std::string v_path;
  std::string split_text;
  analyze->add_option("machine_u", u_path, "Machine description (JSON file or builtin name)")->required();
  analyze->add_option("machine_v", v_path, "Machine description (JSON file or builtin name)")->required();
  analyze->add_option("--split", split_text, "Bit partition, e.g. 1|1 or 0,1|2,3 (default: halves)");

  auto* omega_cmd = app.add_subcommand("omega", "Compute the finite halting probability of the bit VM");
  std::size_t max_len = 0;
  std::uint64_t max_steps = 0;
  int workers = 0;
  std::string checkpoint;
  bool resume = false;
  double time_limit = 0;
  std::size_t stop_after = 0;
  omega_cmd->add_option("--max-len", max_len, "Maximum program length n")->required()->check(CLI::Range(1, 62));
  omega_cmd->add_option("--max-steps", max_steps, "Step budget T (default 16 n)");
  omega_cmd->add_option("--workers", workers, std::string("Worker threads (default $") + kWorkersEnv +
                                                  " or hardware concurrency)");
  omega_cmd->add_option("--checkpoint", checkpoint, "Checkpoint file, rewritten atomically as work completes");
  omega_cmd->add_flag("--resume", resume, "Resume from --checkpoint");
  omega_cmd->add_option("--time-limit", time_limit, "Stop after this many seconds, leaving a checkpoint");
  omega_cmd->add_option("--stop-after", stop_after, "Stop after this many subtree tasks, leaving a checkpoint");

  for (auto* sub : {reproduce, analyze, omega_cmd}) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "Write the report to this file");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const Emit emit{out, out_path};
  const bool json = format == "json";

  try {
    if (reproduce->parsed()) {
      std::vector<std::string> cases;
      if (case_name == "all") {
        cases = case_names();
      } else if (std::find(case_names().begin(), case_names().end(), case_name) != case_names().end()) {
        cases = {case_name};
      } else {
        err << "error: unknown case '" << case_name << "'\n";
        return kExitUsage;
      }
      std::string text;
      nlohmann::json arr = nlohmann::json::array();
      std::size_t unexpected = 0;
      for (const auto& c : cases) {
        const auto rep = reproduce_case(c);
        unexpected += rep.unexpected_failures();
        if (json) {
          arr.push_back(render_json(rep));
        } else {
          text += (text.empty() ? "" : "\n") + render_text(rep);
        }
      }
      if (json) text = (cases.size() == 1 ? arr[0] : arr).dump(2) + "\n";
      if (!emit(text, err)) return kExitUsage;
      return strict && unexpected > 0 ? kExitMismatch : kExitOk;
    }

    if (analyze->parsed()) {
      machine::CompiledOperator u;
      machine::CompiledOperator v;
      try {
        u = load_machine(u_path);
        v = load_machine(v_path);
      } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      if (u.register_bits() != v.register_bits()) {
        err << "error: machines act on " << u.register_bits() << " and " << v.register_bits() << " bits\n";
        return kExitUsage;
      }
      const auto split = split_text.empty() ? lab::BitSplit::halves(u.register_bits())
                                            : lab::BitSplit::parse(split_text, u.register_bits());
      const auto rep = lab::analyze_pair(u, v, split);
      const std::string text = json ? lab::report_to_json(rep).dump(2) + "\n" : analysis_text(rep, u.source, v.source);
      return emit(text, err) ? kExitOk : kExitUsage;
    }

    if (omega_cmd->parsed()) {
      omega::EnumerationOptions opts;
      opts.workers = workers > 0 ? workers : default_workers();
      if (!checkpoint.empty()) opts.checkpoint_path = checkpoint;
      if (time_limit > 0) opts.time_limit_seconds = time_limit;
      if (stop_after > 0) opts.stop_after_tasks = stop_after;
      if (resume && checkpoint.empty()) {
        err << "error: --resume requires --checkpoint\n";
        return kExitUsage;
      }
      omega::OmegaResult result;
      try {
        if (resume) {
          const auto cp = omega::read_checkpoint(checkpoint);
          if (cp.n != max_len || (max_steps && cp.t != max_steps)) {
            err << "error: checkpoint is for n = " << cp.n << ", t = " << cp.t << "\n";
            return kExitUsage;
          }
          result = omega::resume_omega(cp, opts);
        } else {
          result = omega::compute_omega(max_len, max_steps ? max_steps : omega::default_step_budget(max_len), opts);
        }
      } catch (const omega::EnumerationInterrupted& e) {
        err << "error: " << e.what();
        if (opts.checkpoint_path) err << "; checkpoint written to " << opts.checkpoint_path->string();
        err << "\n";
        return kExitUsage;
      }
      err << "workers: " << result.worker_count << "\n";
      const std::string text = json ? omega::result_to_json(result).dump(2) + "\n" : omega_text(result);
      return emit(text, err) ? kExitOk : kExitUsage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace classent::cli
