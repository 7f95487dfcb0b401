#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace degsq::cli {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

struct RunReport {
  json doc;
  int exit_code = kExitOk;
};

RunReport cmd_gen_tight(int d, const std::string& out_path, const std::string& witness_path = "");
RunReport cmd_gen_random(int n, int attach, std::uint64_t seed, const std::string& out_path);
RunReport cmd_square(const std::string& in_path, const std::string& out_path);
RunReport cmd_clique(const std::string& in_path, std::uint64_t node_budget);
RunReport cmd_degeneracy(const std::string& in_path, std::optional<int> k,
                         const std::string& order_out = "");
RunReport cmd_mad(const std::string& in_path);
RunReport cmd_extract_nice(const std::string& graph_path, const std::string& clique_path, int d,
                           std::int64_t secondary_threshold);
RunReport cmd_hstar(const std::string& graph_path, const std::string& clique_path, int d,
                    std::int64_t secondary_threshold);
RunReport cmd_pipeline(const std::string& graph_path, const std::string& clique_path, int d,
                       std::int64_t secondary_threshold);
RunReport cmd_verify_tight(const std::vector<int>& d_list, std::uint64_t node_budget);
RunReport cmd_bound_sweep(int n, int trials, std::uint64_t seed, std::uint64_t node_budget);
RunReport cmd_lp_solutions();

}  // namespace degsq::cli
