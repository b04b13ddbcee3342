#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qaff/cartan.hpp"
#include "qaff/quiver.hpp"
#include "qaff/tsystem.hpp"

namespace qaff {

// Named (type, ell, anchor) configurations reproducing the worked figures.
struct Preset {
  std::string name;
  std::string type;
  int ell = 0;
  Vertex anchor;
};

const std::vector<Preset>& presets();
// Throws InvalidConfig.
const Preset& find_preset(const std::string& name);

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  void add(std::string name, bool passed, std::string detail = {});
  void skip(std::string name, std::string why);
};

struct VerifyOptions {
  CartanData cd{LieType{}};
  int kmax = 4;
  int window = 10;  // spectral exponents -window..window
  int ell = 1;
  Vertex anchor;
  std::size_t max_seeds = 10000;
  std::optional<FundamentalProvider> fundamentals;  // builtin when absent and available
  unsigned seed = 20240611;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tsystem", "geometric", "sl2", "cluster", "all"};
  return names;
}

// Throws InvalidConfig for an unknown suite name.
SuiteReport run_suite(const std::string& suite, const VerifyOptions& opt);

SuiteReport verify_tsystem_suite(const VerifyOptions& opt);
SuiteReport verify_geometric_suite(const VerifyOptions& opt);
SuiteReport verify_sl2_suite(const VerifyOptions& opt);
SuiteReport verify_cluster_suite(const VerifyOptions& opt);

// The strings inside {0, -2, ..., -2 ell} match the cluster variables of the
// A1 truncation (anchor (1,-1)) through their q-characters, and each exchange
// relation of the closure is an instance of tensor_pair. Returns a failure
// description or an empty string.
std::string sl2_cluster_crosscheck(int ell);

}  // namespace qaff
