#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cyh/lattice_oracle.hpp"
#include "cyh/polytope.hpp"

namespace cyh::cli {

enum class Command {
  validate,
  faces,
  volume_poly,
  count,
  ehrhart,
  khovanskii,
  boundary_formula,
  hilbert_cy,
  cross_check,
};

enum class Method { oracle, operator_formula };
enum class OutputFormat { text, json, tsv };

/// Process exit statuses; disjoint per failure class.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsageError = 2,
  kParseError = 3,
  kValidationFailure = 4,
  kFormulaViolation = 5,
  kBudgetExceeded = 6,
  kIoError = 7,
};

struct CommandConfig {
  Command command = Command::validate;
  std::int64_t k = 1;
  RegionSpec region = RegionSpec::full();
  EhrhartKind kind = EhrhartKind::full;
  Method method = Method::oracle;
  std::uint64_t budget = kDefaultBudget;
  OutputFormat format = OutputFormat::text;
  bool normalize = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<Command> parse_command(std::string_view name);
std::string command_name(Command c);

/// "full", "interior", "boundary", or "face:1,3" (1-based facet indices).
RegionSpec parse_region(std::string_view text);
EhrhartKind parse_kind(std::string_view text);
Method parse_method(std::string_view text);
OutputFormat parse_format(std::string_view text);

/// Rejects flag combinations before any computation (UsageError).
void validate_config(const CommandConfig& config);

/// Dispatches one command on a parsed polytope; the report goes to `out`,
/// diagnostics to `err`. Returns an ExitCode.
int run_command(const CommandConfig& config, const HalfSpaceSpec& spec,
                std::ostream& out, std::ostream& err);

/// Parses the polytope text first; parse failures map to kParseError.
int run_cli(const CommandConfig& config, std::string_view polytope_text,
            std::ostream& out, std::ostream& err);

}  // namespace cyh::cli
