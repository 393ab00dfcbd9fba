#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "linkage_kit/error.hpp"
#include "linkage_kit/linkage.hpp"
#include "linkage_kit/root_system.hpp"
#include "linkage_kit/weights.hpp"

namespace linkage_kit::cli {

inline constexpr std::string_view kSchema = "linkage-kit/1";

enum class Command { factors, candidates, obstructions, linkset, dominance, orbit };

std::string to_string(Command c);
Command parse_command(std::string_view text);

enum class OutputFormat { json, table };

// One CLI invocation. Parabolic indices are 1-based simple-root indices.
struct JobSpec {
  CartanSpec root_system = CartanSpec::named("A_1");
  std::size_t embeddings = 1;
  std::vector<std::size_t> parabolic;
  std::optional<WeightL> weight;  // defaults to zero
  std::string smooth_tag;
  std::string pi_tag;
  Convention convention = Convention::paper;
  Command command = Command::linkset;
  bool oracle = false;
  bool witnesses = false;

  bool operator==(const JobSpec&) const = default;
};

// A validation failure pinned to one input field, e.g. "character.weight[0][1]".
class JobError : public Error {
 public:
  JobError(ErrorKind kind, std::string field, const std::string& message)
      : Error(kind, message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Parses a job document. Unknown keys are rejected.
JobSpec parse_job(const nlohmann::json& doc);

// Normalized echo of a job: canonical type name, sorted parabolic indices,
// reduced "p/q" coordinates. parse_job(to_json(job)) reproduces the job after
// normalize().
nlohmann::json to_json(const JobSpec& job);

// Canonicalizes a parsed job in place against its root system (fills in the
// default weight, sorts parabolic indices).
void normalize(JobSpec& job);

// "0,0;1/2,-3" -> one component per ';'-separated group.
WeightL parse_weight_text(std::string_view text);

// Orbit guard from LINKAGE_ORBIT_GUARD, or kDefaultOrbitGuard when unset.
std::size_t orbit_guard_from_env();

struct RunOptions {
  std::size_t orbit_guard = kDefaultOrbitGuard;
  OutputFormat format = OutputFormat::json;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitGuard = 3,
  kExitOracleDisagreement = 4,
};

struct RunOutcome {
  int exit_code = kExitOk;
  std::string output;  // stdout document
  std::string error;   // stderr document (JSON), empty on success
};

RunOutcome run(const JobSpec& job, const RunOptions& options = {});

// Parses then runs; validation errors become exit code 2.
RunOutcome run_document(const nlohmann::json& doc, const RunOptions& options = {});

// Structured error document for the error stream.
std::string error_document(ErrorKind kind, const std::string& field, const std::string& message, int exit_code);

int exit_code_for(ErrorKind kind);

}  // namespace linkage_kit::cli
