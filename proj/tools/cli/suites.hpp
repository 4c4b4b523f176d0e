#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coframes/chain/generators.hpp"
#include "coframes/chain/reedy.hpp"
#include "report.hpp"

namespace coframes::cli {

struct SuiteConfig {
  std::string name;
  std::uint64_t seed = 1;
  std::optional<int> cap;
  int prime = 2;
  int budget = 8;
  std::optional<int> cases;
  std::string k;  ///< nh-unit input; empty runs the whole corpus
  chain::FactorStrategy strategy = chain::FactorStrategy::Minimal;

  int cap_or(int fallback) const { return cap.value_or(fallback); }
  int cases_or(int fallback) const { return cases.value_or(fallback); }
};

/// Independent stream for case `k` of a suite.
chain::Rng case_rng(std::uint64_t seed, std::uint64_t stream, int k);

struct SuiteInfo {
  std::string name;
  std::string summary;
  Report (*run)(const SuiteConfig&);
};

const std::vector<SuiteInfo>& suites();
/// Throws coframes::Error on an unknown name.
Report run_suite(const SuiteConfig& config);

}  // namespace coframes::cli
