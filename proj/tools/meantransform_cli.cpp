// meantransform: compute operator transforms, classify matrices and run the
// randomized property suite from the command line.
//
// Exit codes: 0 success / all properties held, 1 counterexample found,
// 2 input or usage error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meantransform/classifiers.hpp"
#include "meantransform/json_io.hpp"
#include "meantransform/numerics.hpp"
#include "meantransform/phi_maps.hpp"
#include "meantransform/theorem_suite.hpp"
#include "meantransform/transforms.hpp"
#include "meantransform/verify.hpp"

namespace mt = meantransform;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

int cmd_transform(const std::string& which, const std::vector<std::string>& files,
                  const mt::CliConfig& config) {
  const mt::Tolerance tol = config.tolerance();
  const bool binary = which == "jordan";
  if (files.size() != (binary ? 2U : 1U)) {
    throw mt::InputError(which + " expects " + (binary ? "two matrix files" : "one matrix file"));
  }
  const mt::ComplexMatrix t = mt::load_matrix_file(files[0]);
  mt::ComplexMatrix out;
  if (which == "mean") {
    out = mt::mean_transform(t, tol);
  } else if (which == "aluthge") {
    out = mt::aluthge_transform(t, config.lambda, tol);
  } else if (which == "duggal") {
    out = mt::duggal_transform(t, tol);
  } else {
    out = mt::jordan_product(t, mt::load_matrix_file(files[1]));
  }
  std::cout << mt::matrix_to_json(out).dump() << '\n';
  return kExitOk;
}

int cmd_classify(const std::string& file, const mt::CliConfig& config) {
  const mt::Tolerance tol = config.tolerance();
  const mt::ComplexMatrix t = mt::load_matrix_file(file);
  mt::require_square(t, "classify");
  const std::vector<std::pair<std::string, mt::ClassVerdict>> rows{
      {"self-adjoint", mt::is_self_adjoint(t, tol)},
      {"projection", mt::is_orthogonal_projection(t, tol)},
      {"partial isometry", mt::is_partial_isometry(t, tol)},
      {"isometry", mt::is_isometry(t, tol)},
      {"unitary", mt::is_unitary(t, tol)},
      {"normal", mt::is_normal(t, tol)},
      {"quasi-normal", mt::is_quasinormal(t, tol)},
      {"nilpotent2", mt::is_nilpotent2(t, tol)},
  };
  if (config.output == mt::OutputMode::json) {
    mt::json out = mt::json::object();
    for (const auto& [name, verdict] : rows) {
      out[name] = mt::verdict_to_json(verdict);
    }
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& [name, verdict] : rows) {
      std::cout << std::left << std::setw(18) << (name + ":") << std::setw(15)
                << mt::to_string(verdict.holds) << "residual " << std::setprecision(6)
                << verdict.residual << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& property, const mt::CliConfig& config) {
  const mt::VerifyResult result = mt::run_verify(property, config);
  if (config.output == mt::OutputMode::json) {
    std::cout << mt::verify_to_json(property, config, result).dump(2) << '\n';
  } else {
    mt::print_verify_human(std::cout, result);
    for (const auto& report : result.reports) {
      if (report.failures == 0) {
        continue;
      }
      std::cout << "\ncounterexample for " << report.property_id << " (dim " << report.dim
                << ", seed " << report.seed << ", trial " << *report.witness_trial << "):\n";
      for (const auto& w : report.witness) {
        std::cout << "  " << w.label << " = " << mt::matrix_to_json(w.matrix).dump() << '\n';
      }
    }
  }
  return result.failures == 0 ? kExitOk : kExitCounterexample;
}

int cmd_iterate(const std::string& file, int max_steps, double stop_tol,
                const mt::CliConfig& config) {
  const mt::ComplexMatrix t = mt::load_matrix_file(file);
  const mt::MeanIterationTrace trace = mt::iterate_mean(t, max_steps, stop_tol, config.tolerance());
  if (config.output == mt::OutputMode::json) {
    std::cout << mt::iteration_to_json(trace).dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "step  delta         trace\n";
  std::cout << std::scientific << std::setprecision(6);
  for (std::size_t k = 0; k < trace.deltas.size(); ++k) {
    const mt::Complex tr = mt::trace(trace.iterates[k + 1]);
    std::cout << std::left << std::setw(6) << (k + 1) << std::setw(14) << trace.deltas[k] << tr.real()
              << (tr.imag() < 0 ? " - " : " + ") << std::abs(tr.imag()) << "i\n";
  }
  std::cout << (trace.converged ? "converged" : "not converged") << " after " << trace.steps
            << " steps\n";
  return kExitOk;
}

int cmd_commute(const std::string& map_file, const std::string& a_file, const std::string& b_file,
                const mt::CliConfig& config) {
  const mt::Tolerance tol = config.tolerance();
  std::ifstream in(map_file);
  if (!in) {
    throw mt::InputError("cannot open " + map_file);
  }
  mt::json map_json;
  try {
    map_json = mt::json::parse(in);
  } catch (const mt::json::parse_error& e) {
    throw mt::InputError(std::string("phi map json: ") + e.what());
  }
  const mt::PhiMap map = mt::phimap_from_json(map_json, tol);
  const mt::ComplexMatrix a = mt::load_matrix_file(a_file);
  const mt::ComplexMatrix b = mt::load_matrix_file(b_file);
  const double residual = mt::commuting_residual(map, a, b, tol);
  const double scale = std::max(1.0, mt::operator_norm(a) * mt::operator_norm(b));
  const mt::Verdict verdict = mt::decide(residual / scale, tol);
  if (config.output == mt::OutputMode::json) {
    std::cout << mt::json{{"residual", residual},
                          {"normalized_residual", residual / scale},
                          {"commutes", std::string(mt::to_string(verdict))}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "commuting residual " << std::setprecision(6) << residual << " (" << mt::to_string(verdict)
              << ")\n";
  }
  return verdict == mt::Verdict::no ? kExitCounterexample : kExitOk;
}

int cmd_list() {
  for (const auto& info : mt::property_registry()) {
    std::cout << std::left << std::setw(28) << info.id << (info.expected_to_hold ? "holds     " : "falsifier ")
              << info.statement << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mean, Aluthge and Duggal transforms with a randomized property checker"};
  app.require_subcommand(1);
  app.fallthrough();

  mt::CliConfig config;
  std::string output = "human";
  app.add_option("--tol", config.tol, "Absolute/relative comparison tolerance")->capture_default_str();
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--trials", config.trials, "Trials per property and dimension")->capture_default_str();
  app.add_option("--dims", config.dims, "Dimensions to sweep")->delimiter(',')->capture_default_str();
  app.add_option("--lambda", config.lambda, "Aluthge exponent in [0, 1]")->capture_default_str();
  app.add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();

  std::string which;
  std::vector<std::string> files;
  auto* transform = app.add_subcommand("transform", "Apply a transform and print the result matrix");
  transform->add_option("which", which, "mean | aluthge | duggal | jordan")
      ->required()
      ->check(CLI::IsMember({"mean", "aluthge", "duggal", "jordan"}));
  transform->add_option("files", files, "Matrix file(s)")->required();

  std::string classify_file;
  auto* classify = app.add_subcommand("classify", "Report operator-class verdicts with residuals");
  classify->add_option("file", classify_file, "Matrix file")->required();

  std::string property;
  auto* verify = app.add_subcommand("verify", "Run a registered property (or all) over random inputs");
  verify->add_option("property", property, "Property id or \"all\"")->required();

  std::string iterate_file;
  int max_steps = 50;
  double stop_tol = 1e-12;
  auto* iterate = app.add_subcommand("iterate", "Iterate the mean transform");
  iterate->add_option("file", iterate_file, "Matrix file")->required();
  iterate->add_option("--max-steps", max_steps, "Maximum number of applications")->capture_default_str();
  iterate->add_option("--stop-tol", stop_tol, "Stop when the step norm drops to this")->capture_default_str();

  std::string map_file;
  std::string a_file;
  std::string b_file;
  auto* commute = app.add_subcommand("commute", "Commuting residual of a map with the mean transform");
  commute->add_option("map", map_file, "PhiMap JSON file")->required();
  commute->add_option("A", a_file, "Matrix file")->required();
  commute->add_option("B", b_file, "Matrix file")->required();

  auto* list = app.add_subcommand("list", "List registered properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    config.output = output == "json" ? mt::OutputMode::json : mt::OutputMode::human;
    config.validate();
    if (*transform) {
      return cmd_transform(which, files, config);
    }
    if (*classify) {
      return cmd_classify(classify_file, config);
    }
    if (*verify) {
      return cmd_verify(property, config);
    }
    if (*iterate) {
      return cmd_iterate(iterate_file, max_steps, stop_tol, config);
    }
    if (*commute) {
      return cmd_commute(map_file, a_file, b_file, config);
    }
    if (*list) {
      return cmd_list();
    }
  } catch (const mt::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
