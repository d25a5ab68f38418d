#include "meantransform/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "meantransform/numerics.hpp"

namespace meantransform {

namespace {

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) {
    throw InputError(std::string("matrix json: ") + what + " must be a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw InputError(std::string("matrix json: ") + what + " must be finite");
  }
  return v;
}

Eigen::Index dimension(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw InputError(std::string("matrix json: missing \"") + key + "\"");
  }
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw InputError(std::string("matrix json: \"") + key + "\" must be a positive integer");
  }
  return static_cast<Eigen::Index>(v.get<long long>());
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw InputError(std::string(what) + " must be a [re, im] pair");
  }
  return {finite_number(j[0], "real part"), finite_number(j[1], "imaginary part")};
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      data.push_back(complex_to_json(m(i, j)));
    }
  }
  json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  return out;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) {
    throw InputError("matrix json: expected an object");
  }
  const Eigen::Index rows = dimension(j, "rows");
  const Eigen::Index cols = dimension(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) {
    throw InputError("matrix json: \"data\" must be an array");
  }
  const json& data = j.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows * cols) {
    throw InputError("matrix json: expected " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(data.size()));
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index k = 0; k < cols; ++k) {
      m(i, k) = complex_from_json(data[static_cast<std::size_t>(i * cols + k)], "matrix entry");
    }
  }
  return m;
}

ComplexMatrix parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("matrix json: ") + e.what());
  }
  return matrix_from_json(j);
}

ComplexMatrix load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

namespace {

struct PhiEncoder {
  json operator()(const UnitaryConjugation& m) const {
    return json{{"variant", "unitary"}, {"U", matrix_to_json(m.U)}};
  }
  json operator()(const AntiunitaryConjugation& m) const {
    return json{{"variant", "antiunitary"}, {"U", matrix_to_json(m.W)}};
  }
  json operator()(const Scale& m) const {
    return json{{"variant", "scale"}, {"c", complex_to_json(m.c)}};
  }
  json operator()(const AdjointMap&) const { return json{{"variant", "adjoint"}}; }
  json operator()(const Compose& m) const {
    json maps = json::array();
    for (const auto& inner_map : m.maps) {
      maps.push_back(phimap_to_json(inner_map));
    }
    return json{{"variant", "compose"}, {"maps", std::move(maps)}};
  }
};

const json& required(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw InputError(std::string("phi map json: missing \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

json phimap_to_json(const PhiMap& map) { return std::visit(PhiEncoder{}, map.variant); }

PhiMap phimap_from_json(const json& j, const Tolerance& tol) {
  if (!j.is_object()) {
    throw InputError("phi map json: expected an object");
  }
  const json& variant = required(j, "variant");
  if (!variant.is_string()) {
    throw InputError("phi map json: \"variant\" must be a string");
  }
  const std::string name = variant.get<std::string>();
  if (name == "unitary") {
    return PhiMap::unitary(matrix_from_json(required(j, "U")), tol);
  }
  if (name == "antiunitary") {
    return PhiMap::antiunitary(matrix_from_json(required(j, "U")), tol);
  }
  if (name == "scale") {
    return PhiMap::scale(complex_from_json(required(j, "c"), "scale factor"));
  }
  if (name == "adjoint") {
    return PhiMap::adjoint();
  }
  if (name == "compose") {
    const json& maps = required(j, "maps");
    if (!maps.is_array()) {
      throw InputError("phi map json: \"maps\" must be an array");
    }
    std::vector<PhiMap> parts;
    for (const auto& item : maps) {
      parts.push_back(phimap_from_json(item, tol));
    }
    return PhiMap::compose(std::move(parts));
  }
  throw InputError("phi map json: unknown variant \"" + name + "\"");
}

json report_to_json(const CheckReport& report) {
  json out;
  out["property_id"] = report.property_id;
  out["dim"] = report.dim;
  out["trials"] = report.trials;
  out["passes"] = report.passes;
  out["failures"] = report.failures;
  out["indeterminate"] = report.indeterminate;
  out["worst_residual"] = report.worst_residual;
  out["reverse_samples"] = report.reverse_samples;
  out["min_reverse_gap"] = report.min_reverse_gap ? json(*report.min_reverse_gap) : json(nullptr);
  out["seed"] = report.seed;
  if (report.witness_trial) {
    json witness = json::array();
    for (const auto& w : report.witness) {
      witness.push_back(json{{"label", w.label}, {"matrix", matrix_to_json(w.matrix)}});
    }
    out["witness_trial"] = *report.witness_trial;
    out["witness"] = std::move(witness);
  } else {
    out["witness_trial"] = nullptr;
    out["witness"] = nullptr;
  }
  return out;
}

json verdict_to_json(const ClassVerdict& verdict) {
  return json{{"holds", std::string(to_string(verdict.holds))},
              {"residual", verdict.residual},
              {"normalized_residual", verdict.normalized_residual},
              {"description", verdict.description}};
}

json iteration_to_json(const MeanIterationTrace& trace) {
  json steps = json::array();
  for (std::size_t k = 0; k < trace.deltas.size(); ++k) {
    const Complex tr = meantransform::trace(trace.iterates[k + 1]);
    steps.push_back(json{{"step", k + 1}, {"delta", trace.deltas[k]}, {"trace", complex_to_json(tr)}});
  }
  return json{{"converged", trace.converged},
              {"steps", trace.steps},
              {"initial_trace", complex_to_json(meantransform::trace(trace.iterates.front()))},
              {"trace", std::move(steps)},
              {"final", matrix_to_json(trace.iterates.back())}};
}

}  // namespace meantransform
