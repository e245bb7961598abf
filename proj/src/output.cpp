#include "opinion/output.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace opinion {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_ticks_csv(std::ostream& out, std::span<const TickRecord> records) {
  out << "tick,law,median_belief,belief_sd,ads_sent,advertiser_belief,profit,funds_after\n";
  for (const auto& r : records) {
    out << r.tick << ',' << format_double(r.law) << ',' << format_double(r.median_belief) << ','
        << format_double(r.belief_sd) << ',' << r.ads_sent << ',';
    if (!r.advertiser_beliefs.empty()) {
      double sum = 0.0;
      for (double b : r.advertiser_beliefs) sum += b;
      out << format_double(sum / static_cast<double>(r.advertiser_beliefs.size()));
    }
    out << ',' << format_double(r.profit) << ',' << format_double(r.funds_after) << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::runtime_error("malformed number \"" + s + "\"");
  return v;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  t.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != t.header.size()) {
      throw std::runtime_error("CSV row has " + std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

std::size_t CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw std::out_of_range("no CSV column \"" + name + "\"");
  return static_cast<std::size_t>(it - header.begin());
}

std::vector<TickRecord> read_ticks_csv(std::istream& in) {
  const CsvTable t = read_csv(in);
  const std::size_t c_tick = t.column("tick"), c_law = t.column("law"),
                    c_med = t.column("median_belief"), c_sd = t.column("belief_sd"),
                    c_ads = t.column("ads_sent"), c_adv = t.column("advertiser_belief"),
                    c_profit = t.column("profit"), c_funds = t.column("funds_after");
  std::vector<TickRecord> out;
  out.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    TickRecord r;
    r.tick = std::stoull(row[c_tick]);
    r.law = to_double(row[c_law]);
    r.median_belief = to_double(row[c_med]);
    r.belief_sd = to_double(row[c_sd]);
    r.ads_sent = std::stoull(row[c_ads]);
    if (!row[c_adv].empty()) r.advertiser_beliefs.push_back(to_double(row[c_adv]));
    r.profit = to_double(row[c_profit]);
    r.funds_after = to_double(row[c_funds]);
    out.push_back(std::move(r));
  }
  return out;
}

void write_final_beliefs_csv(std::ostream& out, std::span<const AgentKind> kinds,
                             std::span<const double> beliefs) {
  out << "agent_id,kind,belief\n";
  for (std::size_t i = 0; i < beliefs.size(); ++i) {
    out << i << ',' << to_char(kinds[i]) << ',' << format_double(beliefs[i]) << '\n';
  }
}

void write_snapshots_csv(std::ostream& out, std::span<const BeliefSnapshot> snapshots,
                         std::span<const AgentKind> kinds) {
  out << "tick,agent_id,kind,belief\n";
  for (const auto& snap : snapshots) {
    for (std::size_t i = 0; i < snap.beliefs.size(); ++i) {
      out << snap.tick << ',' << i << ',' << to_char(kinds[i]) << ','
          << format_double(snap.beliefs[i]) << '\n';
    }
  }
}

void write_quantiles_csv(std::ostream& out, std::span<const double> levels,
                         const std::vector<std::vector<double>>& series) {
  out << "tick";
  for (double q : levels) out << ",q" << format_double(q);
  out << '\n';
  const std::size_t ticks = series.empty() ? 0 : series.front().size();
  for (std::size_t t = 0; t < ticks; ++t) {
    out << t + 1;
    for (const auto& s : series) out << ',' << format_double(s[t]);
    out << '\n';
  }
}

namespace {

void write_axis_header(std::ostream& out, const SweepResult& result) {
  for (const auto& axis : result.axes) out << axis.name << ',';
}

void write_coords(std::ostream& out, const SweepCell& cell) {
  for (const auto& v : cell.coords) out << format_axis_value(v) << ',';
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  write_axis_header(out, result);
  out << "seed,steady_median,steady_sd,final_median\n";
  for (const auto& cell : result.cells) {
    for (const auto& rep : cell.replicates) {
      write_coords(out, cell);
      out << rep.seed << ',' << format_double(rep.steady_median) << ','
          << format_double(rep.steady_sd) << ',' << format_double(rep.final_median) << '\n';
    }
  }
}

void write_sweep_agg_csv(std::ostream& out, const SweepResult& result) {
  write_axis_header(out, result);
  out << "seeds,steady_median,steady_sd,final_median\n";
  for (const auto& cell : result.cells) {
    write_coords(out, cell);
    out << cell.replicates.size() << ',' << format_double(cell.mean.steady_median) << ','
        << format_double(cell.mean.steady_sd) << ',' << format_double(cell.mean.final_median)
        << '\n';
  }
}

}  // namespace opinion
