#include "meantransform/verify.hpp"

#include <cmath>
#include <iomanip>

#include "meantransform/theorem_suite.hpp"

namespace meantransform {

void CliConfig::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw InputError("--tol must be positive");
  }
  if (trials < 0) {
    throw InputError("--trials must be nonnegative");
  }
  if (dims.empty()) {
    throw InputError("--dims must not be empty");
  }
  for (int d : dims) {
    if (d < 2) {
      throw InputError("--dims entries must be >= 2");
    }
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InputError("--lambda must lie in [0, 1]");
  }
}

Tolerance CliConfig::tolerance() const {
  Tolerance t;
  t.abs_tol = tol;
  t.rel_tol = tol;
  return t;
}

VerifyResult run_verify(const std::string& property, const CliConfig& config) {
  config.validate();
  std::vector<const PropertyInfo*> selected;
  const bool all = property == "all";
  if (all) {
    for (const auto& info : property_registry()) {
      if (info.expected_to_hold) {
        selected.push_back(&info);
      }
    }
  } else {
    selected.push_back(&find_property(property));
  }

  VerifyResult result;
  for (const PropertyInfo* info : selected) {
    for (int dim : config.dims) {
      if (dim < info->min_dim) {
        if (all) {
          continue;
        }
        throw InputError("property " + info->id + " requires dim >= " +
                         std::to_string(info->min_dim));
      }
      GeneratorSpec spec;
      spec.dim = dim;
      spec.seed = config.seed;
      CheckReport report = falsify(info->id, spec, config.trials, config.tolerance());
      result.failures += report.failures;
      result.indeterminate += report.indeterminate;
      result.reports.push_back(std::move(report));
    }
  }
  return result;
}

json verify_to_json(const std::string& property, const CliConfig& config,
                    const VerifyResult& result) {
  json reports = json::array();
  for (const auto& r : result.reports) {
    reports.push_back(report_to_json(r));
  }
  json out;
  out["property"] = property;
  out["config"] = json{{"tol", config.tol},
                       {"seed", config.seed},
                       {"trials", config.trials},
                       {"dims", config.dims}};
  out["failures"] = result.failures;
  out["indeterminate"] = result.indeterminate;
  out["reports"] = std::move(reports);
  return out;
}

void print_verify_human(std::ostream& os, const VerifyResult& result) {
  os << std::left << std::setw(28) << "property" << std::setw(5) << "dim" << std::setw(8)
     << "trials" << std::setw(8) << "fail" << std::setw(8) << "indet" << std::setw(14)
     << "worst" << "min gap\n";
  for (const auto& r : result.reports) {
    os << std::left << std::setw(28) << r.property_id << std::setw(5) << r.dim << std::setw(8)
       << r.trials << std::setw(8) << r.failures << std::setw(8) << r.indeterminate
       << std::setw(14) << std::setprecision(3) << std::scientific << r.worst_residual;
    if (r.min_reverse_gap) {
      os << *r.min_reverse_gap;
    } else {
      os << "-";
    }
    os << std::defaultfloat << '\n';
  }
  os << (result.failures == 0 ? "all properties held" : "counterexample found") << " ("
     << result.failures << " failures, " << result.indeterminate << " indeterminate)\n";
}

}  // namespace meantransform
