#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chevalley/json_io.hpp"

namespace chevalley::cli {

struct CheckResult {
  std::string suite;
  std::string anchor;  // the statement being exercised
  std::string check;
  bool passed = false;
  std::string detail;
};

struct SuiteConfig {
  std::shared_ptr<WeightModule const> module;
  std::uint64_t seed = 0;
};

std::vector<CheckResult> algebra_suite(SuiteConfig const& cfg);
std::vector<CheckResult> module_suite(SuiteConfig const& cfg);
std::vector<CheckResult> group_suite(SuiteConfig const& cfg);
std::vector<CheckResult> integrality_suite(SuiteConfig const& cfg);

// "sc-default", "adjoint" or "a,b,..;c,d,.." (fundamental-weight coordinates).
std::vector<IntVec> parse_module_spec(RootSystem const& rs, std::string const& spec);

}  // namespace chevalley::cli
