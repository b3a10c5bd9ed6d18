#include "riparian/cli/datasets.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace riparian::cli {

namespace {

const std::vector<std::string> kCities = {"Deyang", "Chengdu", "Ziyang", "Neijiang", "Zigong", "Luzhou"};

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  return ids;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

const std::vector<std::string>& parameter_labels() {
  static const std::vector<std::string> labels = {"0", "1/4", "1/2", "3/4", "1"};
  return labels;
}

const ClaimsDataset& tuojiang() {
  static const ClaimsDataset d{"tuojiang", kCities, {"4.17", "53.98", "2.13", "3.30", "2.48", "15.18"}, "64.3"};
  return d;
}

const ClaimsDataset& tuojiang_equal_middle() {
  static const ClaimsDataset d{"tuojiang_hat", kCities, {"4.17", "19.89", "14", "14", "14", "15.18"}, "64.3"};
  return d;
}

const ClaimsDataset& tuojiang_swapped_top() {
  static const ClaimsDataset d{"tuojiang_tilde", kCities, {"53.98", "4.17", "2.13", "3.30", "2.48", "15.18"}, "64.3"};
  return d;
}

const ClaimsDataset& example_four_agents() {
  static const ClaimsDataset d{"example1", numbered(4), {"2", "5", "5", "3"}, "5"};
  return d;
}

const std::vector<ClaimsDataset>& small_examples() {
  static const std::vector<ClaimsDataset> d = {
      {"small_222", numbered(3), {"2", "2", "2"}, "4"},
      {"small_2221", numbered(4), {"2", "2", "2", "1"}, "4"},
      {"small_2223", numbered(4), {"2", "2", "2", "3"}, "4"},
  };
  return d;
}

const std::vector<ClaimsDataset>& all_claims_datasets() {
  static const std::vector<ClaimsDataset> d = [] {
    std::vector<ClaimsDataset> all = {tuojiang(), tuojiang_equal_middle(), tuojiang_swapped_top(),
                                      example_four_agents()};
    for (const auto& s : small_examples()) all.push_back(s);
    return all;
  }();
  return d;
}

const ClaimsDataset& claims_dataset(const std::string& name) {
  for (const auto& d : all_claims_datasets()) {
    if (d.name == name) return d;
  }
  throw std::out_of_range("no embedded dataset '" + name + "'");
}

const std::vector<FamilyTable>& family_tables() {
  static const std::vector<FamilyTable> tables = {
      {"table1",
       tuojiang(),
       {
           {"0", "0.83", "1.65", "2.48", "3.30", "0", "0.83", "1.65", "2.48", "3.30"},
           {"0", "11.30", "22.19", "32.66", "42.72", "0", "10.68", "21.36", "32.04", "42.72"},
           {"0", "8.90", "11.94", "9.43", "1.69", "0", "0.42", "0.84", "1.26", "1.69"},
           {"0", "7.33", "7.27", "4.32", "2.61", "0", "0.65", "1.31", "1.96", "2.61"},
           {"0", "5.98", "4.62", "2.55", "1.96", "0", "0.49", "0.98", "1.47", "1.96"},
           {"64.3", "29.97", "16.63", "12.87", "12.01", "64.3", "51.23", "38.16", "25.09", "12.01"},
       },
       "64.3"},
      {"table4",
       tuojiang_equal_middle(),
       {
           {"0.00", "0.83", "1.65", "2.48", "3.30", "0.00", "0.83", "1.65", "2.48", "3.30"},
           {"0.00", "4.55", "8.70", "12.43", "15.74", "0.00", "3.94", "7.87", "11.81", "15.74"},
           {"0.00", "6.19", "9.89", "11.42", "11.08", "0.00", "2.77", "5.54", "8.31", "11.08"},
           {"0.00", "7.41", "10.48", "11.16", "11.08", "0.00", "2.77", "5.54", "8.31", "11.08"},
           {"0.00", "8.33", "10.78", "11.10", "11.08", "0.00", "2.77", "5.54", "8.31", "11.08"},
           {"64.30", "37.00", "22.80", "15.72", "12.01", "64.30", "51.23", "38.16", "25.09", "12.01"},
       },
       "64.3"},
      {"table5",
       tuojiang_swapped_top(),
       {
           {"0.00", "10.68", "21.36", "32.04", "42.72", "0.00", "10.68", "21.36", "32.04", "42.72"},
           {"0.00", "8.84", "12.33", "10.49", "3.30", "0.00", "0.83", "1.65", "2.48", "3.30"},
           {"0.00", "7.05", "7.01", "3.89", "1.69", "0.00", "0.42", "0.84", "1.26", "1.69"},
           {"0.00", "5.94", "4.81", "2.93", "2.61", "0.00", "0.65", "1.31", "1.96", "2.61"},
           {"0.00", "4.95", "3.39", "2.20", "1.96", "0.00", "0.49", "0.98", "1.47", "1.96"},
           {"64.30", "26.85", "15.40", "12.75", "12.01", "64.30", "51.23", "38.16", "25.09", "12.01"},
       },
       "64.3"},
  };
  return tables;
}

const std::vector<BasinDataset>& basin_datasets() {
  static const std::vector<BasinDataset> basins = {
      {"case_a",
       numbered(4),
       {"2", "5", "5", "3"},
       {{"1", "2"}, {"2", "3"}, {"3", "4"}},
       "5",
       "1/2",
       {"1", "3", "4", "7"},
       {"1/3", "1", "4/3", "7/3"},
       {}},
      // Six claims: the printed problem lists five, but the printed shares
      // only follow from (2,5,5,3,6,8).
      {"case_b",
       numbered(6),
       {"2", "5", "5", "3", "6", "8"},
       {{"1", "2"}, {"1", "3"}, {"3", "4"}, {"3", "5"}, {"5", "6"}},
       "5",
       "1/2",
       {"1", "11/2", "11/4", "35/8", "59/16", "187/16"},
       {"5/29", "55/58", "55/116", "175/232", "295/464", "935/264"},
       {{5, "935/464"}}},
      // Five claims: the printed problem lists six.
      {"case_c",
       numbered(5),
       {"2", "5", "5", "3", "6"},
       {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}, {"4", "5"}},
       "5",
       "1/2",
       {"1", "11/4", "11/4", "17/4", "41/4"},
       {"5/21", "55/84", "55/84", "85/84", "205/84"},
       {}},
  };
  return basins;
}

const std::vector<ThresholdTarget>& threshold_targets() {
  static const std::vector<ThresholdTarget> targets = {
      {"tuojiang min gamma", "tuojiang", false, 0.989, 1e-3},
      {"tuojiang min lambda", "tuojiang", true, 0.94, 5e-3},
      {"(2,2,2) min gamma", "small_222", false, 0.634, 1e-3},
      {"(2,2,2,1) min gamma", "small_2221", false, 0.722, 1e-3},
      {"(2,2,2,3) min gamma", "small_2223", false, 0.217, 1e-3},
      {"equal-middle min gamma", "tuojiang_hat", false, 0.778, 1e-3},
      {"equal-middle min lambda", "tuojiang_hat", true, 0.94, 5e-3},
      {"swapped-top min gamma", "tuojiang_tilde", false, 0.977, 1e-3},
      {"swapped-top min lambda", "tuojiang_tilde", true, 0.94, 5e-3},
  };
  return targets;
}

std::vector<std::string> dump_datasets(const std::string& directory) {
  namespace fs = std::filesystem;
  const fs::path dir(directory);
  fs::create_directories(dir);
  std::vector<std::string> written;

  std::string budgets = "file,budget\n";
  for (const auto& d : all_claims_datasets()) {
    std::string csv = "agent,claim\n";
    for (std::size_t i = 0; i < d.agents.size(); ++i) csv += d.agents[i] + "," + d.claims[i] + "\n";
    const fs::path path = dir / (d.name + ".csv");
    write_file(path, csv);
    written.push_back(path.string());
    budgets += d.name + ".csv," + d.budget + "\n";
  }
  write_file(dir / "budgets.csv", budgets);
  written.push_back((dir / "budgets.csv").string());

  for (const auto& b : basin_datasets()) {
    nlohmann::ordered_json doc;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < b.ids.size(); ++i) {
      doc["nodes"].push_back({{"id", b.ids[i]}, {"claim", b.claims[i]}});
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [from, to] : b.edges) doc["edges"].push_back({from, to});
    doc["budget"] = b.budget;
    const fs::path path = dir / (b.name + ".json");
    write_file(path, doc.dump(2) + "\n");
    written.push_back(path.string());
  }
  return written;
}

}  // namespace riparian::cli
