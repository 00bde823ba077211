#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clf/exact_arith.hpp"
#include "clf/sequences.hpp"

namespace clf {

struct ConfigInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OutputUnwritable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ReportFormat { JsonLines, CsvSummary };
enum class SeqFormat { Csv, JsonLines };

struct CampaignConfig {
  std::vector<std::string> checks;
  std::vector<ExactInt> primes;
  std::int64_t m_max = 1;
  std::int64_t r_max = 1;
  std::int64_t n_max = 1;
  std::string out_path;  // empty or "-" means stdout
  ReportFormat format = ReportFormat::JsonLines;
  unsigned workers = 1;
};

/// One campaign verdict, ready for serialization. Integer payloads are
/// decimal strings so arbitrary precision survives downstream tools.
struct CheckRecord {
  std::string check;
  std::optional<ExactInt> p;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<long long> k_required;
  std::optional<std::string> lhs_residue;
  std::optional<std::string> rhs_residue;
  std::optional<std::string> achieved_valuation;  // decimal or "inf"
  bool holds = false;
  std::optional<std::string> error;
};

struct CampaignSummary {
  std::size_t total = 0;  // passed + failed + errored
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errored = 0;
  std::size_t skipped = 0;  // precondition-violating grid cells, not recorded
};

struct CampaignReport {
  CampaignConfig config;  // canonical form actually run
  std::vector<CheckRecord> records;
  CampaignSummary summary;
  double wall_seconds = 0.0;
};

/// Names accepted in CampaignConfig::checks, sorted.
const std::vector<std::string>& campaign_check_names();

/// Runs every selected check over the parameter grid; precondition-violating
/// cells are skipped and tallied. Record order is fixed by the case key
/// (check name, prime, remaining parameters) independent of worker count.
CampaignReport run_campaign(const CampaignConfig& config);

/// Serializes per config.format. JSON lines end with a summary line and a
/// separate trailing wall-time line so byte comparison can ignore timing.
void write_report(const CampaignReport& report, std::ostream& os);

/// Exact decimal dump of P, S or f, one index per row.
void emit_sequences(Sequences& seq, char id, std::size_t n_max, SeqFormat format,
                    std::ostream& os);

}  // namespace clf
