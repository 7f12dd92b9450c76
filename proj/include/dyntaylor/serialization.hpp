#pragma once

#include <nlohmann/json.hpp>

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

#include "dyntaylor/blocks.hpp"
#include "dyntaylor/inference.hpp"
#include "dyntaylor/longrun.hpp"
#include "dyntaylor/montecarlo.hpp"
#include "dyntaylor/process.hpp"
#include "dyntaylor/statistics.hpp"

namespace dyntaylor {

using json = nlohmann::json;

// JSON bindings. Documents use a flat layout with a "kind"/"mode"
// discriminator where applicable; schemas live under schemas/.
void to_json(json& j, const ProcessSpec& spec);
void from_json(const json& j, ProcessSpec& spec);

void to_json(json& j, const BlockPlan& plan);
void from_json(const json& j, BlockPlan& plan);

void to_json(json& j, const TaylorStatistics& stats);
void to_json(json& j, const LongRunVarianceEstimate& est);
void to_json(json& j, const ConfidenceInterval& interval);
void to_json(json& j, const GofTestResult& result);
void to_json(json& j, const BetaEstimate& est);
void to_json(json& j, const PowerResult& result);

void to_json(json& j, const MCConfig& config);
void from_json(const json& j, MCConfig& config);
void to_json(json& j, const MCReport& report);

std::string mode_name(TaylorMode mode);
TaylorMode mode_from_name(const std::string& name);

// Shortest-exact decimal rendering (%.17g); locale independent.
std::string format_double(double value);

// RFC 4180 CSV: header row, CRLF line endings, '.' decimal point.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);
void write_series_csv(std::ostream& out, const std::string& column,
                      const Eigen::VectorXd& values);

// Single-column trajectory reader; accepts an optional header row.
Eigen::VectorXd read_series_csv(std::istream& in);
Eigen::VectorXd read_series_csv_file(const std::string& path);

}  // namespace dyntaylor
