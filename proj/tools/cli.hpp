#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "cogclust/align.hpp"
#include "cogclust/crp.hpp"
#include "cogclust/pmi.hpp"

namespace cogclust::cli {

enum class Command { kAlign, kCluster, kEvaluate, kPmiEstimate };
enum class ScorerKind { kVanilla, kPmi };
enum class ReportFormat { kText, kKeyValue };

// Exit statuses. Library error families map to 2/3/4.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitIo = 4;

struct RunConfig {
  Command command = Command::kCluster;
  std::string input;
  std::string gold;         // optional separate gold word list
  std::string predictions;  // evaluate: score an existing partition TSV
  ScorerKind scorer = ScorerKind::kVanilla;
  std::string pmi_matrix;
  GapParams gaps;
  VanillaScores vanilla;
  CrpConfig crp;
  std::optional<double> threshold;  // selects the average-linkage baseline
  bool normalize = false;
  bool strict_modifiers = false;
  double smoothing = kDefaultSmoothing;
  std::string out;
  std::string out_dir;
  std::string report;
  ReportFormat report_format = ReportFormat::kText;
  int decimals = 4;
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws UsageError for flag combinations that make no sense.
void validate(const RunConfig& config);

// Runs one subcommand. Data goes to files or `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and runs. Handles --help and --version.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cogclust::cli
