#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "opinion/engine.hpp"
#include "opinion/model.hpp"

namespace opinion {

/// %.17g: parsing the text recovers the double exactly.
std::string format_double(double v);

// ticks.csv: tick,law,median_belief,belief_sd,ads_sent,advertiser_belief,profit,funds_after
// advertiser_belief is the mean over A agents (empty without A agents);
// funds_after is the total over A agents after the profit credit.
void write_ticks_csv(std::ostream& out, std::span<const TickRecord> records);

/// Inverse of write_ticks_csv. advertiser_beliefs holds the one recorded
/// value (or nothing). Throws std::runtime_error on malformed input.
std::vector<TickRecord> read_ticks_csv(std::istream& in);

// final_beliefs.csv: agent_id,kind,belief
void write_final_beliefs_csv(std::ostream& out, std::span<const AgentKind> kinds,
                             std::span<const double> beliefs);

// snapshots.csv: tick,agent_id,kind,belief
void write_snapshots_csv(std::ostream& out, std::span<const BeliefSnapshot> snapshots,
                         std::span<const AgentKind> kinds);

// quantiles.csv: tick,q<level>... one column per requested level
void write_quantiles_csv(std::ostream& out, std::span<const double> levels,
                         const std::vector<std::vector<double>>& series);

// sweep.csv: <axis>...,seed,steady_median,steady_sd,final_median
void write_sweep_csv(std::ostream& out, const SweepResult& result);

// sweep_agg.csv: <axis>...,seeds,steady_median,steady_sd,final_median
void write_sweep_agg_csv(std::ostream& out, const SweepResult& result);

/// Header and string cells of a comma-separated file without quoting.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Throws std::out_of_range for a missing column.
  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);

}  // namespace opinion
