#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace riparian::cli {

/// A linear-river problem kept as decimal text so both backends read it
/// without rounding.
struct ClaimsDataset {
  std::string name;
  std::vector<std::string> agents;
  std::vector<std::string> claims;
  std::string budget;
};

/// A reference two-family comparison: one row per agent, five geometric
/// columns then five averaging columns at parameters 0, 1/4, 1/2, 3/4, 1.
struct FamilyTable {
  std::string name;
  ClaimsDataset data;
  std::vector<std::vector<std::string>> cells;
  std::string printed_total;
};

struct BasinDataset {
  std::string name;
  std::vector<std::string> ids;
  std::vector<std::string> claims;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string budget;
  std::string gamma;
  /// Retained shares and awards as printed, in node order.
  std::vector<std::string> printed_shares;
  std::vector<std::string> printed_awards;
  /// Printed awards known to be misprints: (position, recomputed value).
  std::vector<std::pair<std::size_t, std::string>> errata;
};

struct ThresholdTarget {
  std::string label;
  std::string dataset;  // name of a ClaimsDataset
  bool averaging = false;
  double printed = 0;
  double tolerance = 0;
};

const std::vector<std::string>& parameter_labels();

const ClaimsDataset& tuojiang();
const ClaimsDataset& tuojiang_equal_middle();
const ClaimsDataset& tuojiang_swapped_top();
const ClaimsDataset& example_four_agents();
const std::vector<ClaimsDataset>& small_examples();
const std::vector<ClaimsDataset>& all_claims_datasets();
const ClaimsDataset& claims_dataset(const std::string& name);

const std::vector<FamilyTable>& family_tables();
const std::vector<BasinDataset>& basin_datasets();
const std::vector<ThresholdTarget>& threshold_targets();

/// Writes every embedded dataset as a ClaimsFile CSV or BasinFile JSON, plus
/// budgets.csv listing the budget that goes with each claims file. Returns
/// the paths written.
std::vector<std::string> dump_datasets(const std::string& directory);

}  // namespace riparian::cli
