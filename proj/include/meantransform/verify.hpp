#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "meantransform/json_io.hpp"
#include "meantransform/report.hpp"
#include "meantransform/types.hpp"

namespace meantransform {

enum class OutputMode { human, json };

/// Defaults for every command-line run. The CLI, the acceptance suite and
/// the Python bindings all read them from here.
struct CliConfig {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int trials = 200;
  std::vector<int> dims{3, 4, 5, 6, 7, 8};
  double lambda = 0.5;
  OutputMode output = OutputMode::human;

  void validate() const;
  Tolerance tolerance() const;
};

struct VerifyResult {
  std::vector<CheckReport> reports;  // ordered by (property, dim)
  int failures = 0;
  int indeterminate = 0;
};

/// Runs one registered property, or every property expected to hold when
/// `property` is "all", over each configured dimension. "all" skips
/// dimensions below a property's minimum; naming such a property with such a
/// dimension throws InputError.
VerifyResult run_verify(const std::string& property, const CliConfig& config);

json verify_to_json(const std::string& property, const CliConfig& config,
                    const VerifyResult& result);
void print_verify_human(std::ostream& os, const VerifyResult& result);

}  // namespace meantransform
