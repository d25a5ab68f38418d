#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "meantransform/classifiers.hpp"
#include "meantransform/phi_maps.hpp"
#include "meantransform/report.hpp"
#include "meantransform/transforms.hpp"
#include "meantransform/types.hpp"

namespace meantransform {

using json = nlohmann::ordered_json;

// Matrix interchange format:
//   {"rows": n, "cols": m, "data": [[re, im], ...]}   row-major, rows * cols pairs.
json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

ComplexMatrix parse_matrix(const std::string& text);
ComplexMatrix load_matrix_file(const std::filesystem::path& path);

// {"variant": "unitary"|"antiunitary"|"scale"|"adjoint"|"compose",
//  "U": matrix, "c": [re, im], "maps": [...]}
json phimap_to_json(const PhiMap& map);
PhiMap phimap_from_json(const json& j, const Tolerance& tol = {});

json report_to_json(const CheckReport& report);
json verdict_to_json(const ClassVerdict& verdict);
json iteration_to_json(const MeanIterationTrace& trace);

}  // namespace meantransform
