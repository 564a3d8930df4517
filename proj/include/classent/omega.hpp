#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "classent/bitstring.hpp"
#include "classent/dyadic.hpp"

namespace classent::omega {

using tensor::Dyadic;

// Bit VM. Instructions are two bits, fetched from the program tape only when
// execution first reaches them:
//   00 HALT   01 INC R   10 DEC R (saturating)   11 if R != 0 jump to bit 0
// A jump re-reads already consumed bits without consuming new ones, so the
// set of validly halting programs is prefix-free.

struct VmState {
  std::uint64_t reg = 0;
  std::size_t instruction_pointer = 0;
  std::size_t consumed_bits = 0;
  std::uint64_t steps_executed = 0;
};

enum class Outcome { kHalt, kPrefixHalt, kNeedsMoreBits, kTimeout };
std::string_view outcome_name(Outcome o);

struct RunOutcome {
  Outcome kind = Outcome::kTimeout;
  /// Bits consumed when the run stopped (the prefix length for kPrefixHalt).
  std::size_t consumed = 0;
  std::uint64_t steps_used = 0;
};

/// Runs at most `max_steps` instructions. The budget is checked before each
/// fetch, so a kTimeout run never asked for bits beyond what it consumed.
RunOutcome run_program(std::span<const std::uint8_t> program, std::uint64_t max_steps);
RunOutcome run_program(const BitString& program, std::uint64_t max_steps);

struct OmegaResult {
  std::size_t n = 0;
  std::uint64_t t = 0;
  Dyadic omega;
  /// Programs of length <= n that halt after consuming exactly all their bits,
  /// in canonical order (shorter first, then lexicographic).
  std::vector<BitString> census;
  /// Pruned subtree roots that ran out of steps.
  std::uint64_t timeout_count = 0;
  /// Length-n programs that still wanted more bits.
  std::uint64_t needs_more_count = 0;
  /// Threads used for this run; not part of the serialized report.
  int worker_count = 1;
};

struct EnumerationCheckpoint {
  std::size_t n = 0;
  std::uint64_t t = 0;
  /// Unexplored subtree roots, in canonical order.
  std::vector<BitString> frontier;
  Dyadic omega;
  std::vector<BitString> census;
  std::uint64_t timeout_count = 0;
  std::uint64_t needs_more_count = 0;
};

inline constexpr int kCheckpointFormatVersion = 1;

struct EnumerationOptions {
  int workers = 1;
  /// Depth of the fixed-length prefixes handed out as parallel tasks.
  std::size_t split_depth = 8;
  /// Written after every batch of `checkpoint_every` tasks when set.
  std::optional<std::filesystem::path> checkpoint_path;
  std::size_t checkpoint_every = 64;
  /// Stop (after checkpointing) once this many tasks ran in this call.
  std::optional<std::size_t> stop_after_tasks;
  /// Stop (after checkpointing) once this much wall time has passed.
  std::optional<double> time_limit_seconds;
};

/// Thrown when a run stops early; the checkpoint (if a path was given) is on disk.
class EnumerationInterrupted : public std::runtime_error {
 public:
  EnumerationInterrupted(const std::string& what, EnumerationCheckpoint cp)
      : std::runtime_error(what), checkpoint(std::move(cp)) {}
  EnumerationCheckpoint checkpoint;
};

/// Omega_n(t): sum of 2^-|p| over validly halting programs with |p| <= n.
OmegaResult compute_omega(std::size_t n, std::uint64_t t, const EnumerationOptions& options = {});
OmegaResult resume_omega(const EnumerationCheckpoint& checkpoint, const EnumerationOptions& options = {});

/// Single-threaded pruned enumeration; reference for the parallel path.
OmegaResult compute_omega_serial(std::size_t n, std::uint64_t t);

inline std::uint64_t default_step_budget(std::size_t n) { return 16 * static_cast<std::uint64_t>(n); }

struct TailReport {
  Dyadic delta;
  Dyadic bound;  // 2^-n_small
  bool bound_satisfied = false;
};

/// Omega_{n_large}(t) - Omega_{n_small}(t) against 2^-n_small. Informational.
TailReport tail_report(std::size_t n_small, std::size_t n_large, std::uint64_t t, int workers = 1);

nlohmann::json result_to_json(const OmegaResult& r);
nlohmann::json checkpoint_to_json(const EnumerationCheckpoint& cp);
/// Throws std::invalid_argument on malformed or inconsistent documents.
EnumerationCheckpoint checkpoint_from_json(const nlohmann::json& j);

/// Writes to a sibling temporary file, then renames over `path`.
void write_checkpoint(const std::filesystem::path& path, const EnumerationCheckpoint& cp);
EnumerationCheckpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace classent::omega
