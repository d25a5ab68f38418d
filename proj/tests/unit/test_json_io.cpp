#include <cstdio>
#include <limits>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "meantransform/generators.hpp"
#include "meantransform/json_io.hpp"
#include "meantransform/theorem_suite.hpp"
#include "support.hpp"

namespace mt = meantransform;
using mt::json;
using mt::testing::mat2;

namespace {

TEST(MatrixJson, RoundTripIsExact) {
  mt::Rng rng(61);
  const mt::ComplexMatrix m = mt::ginibre(4, rng).leftCols(3);
  const mt::ComplexMatrix back = mt::matrix_from_json(json::parse(mt::matrix_to_json(m).dump()));
  EXPECT_EQ(back, m);
}

TEST(MatrixJson, LayoutIsRowMajorPairs) {
  const json j = mt::matrix_to_json(mat2({1, 2}, {3, 4}, {5, 6}, {7, 8}));
  EXPECT_EQ(j.dump(), R"({"rows":2,"cols":2,"data":[[1.0,2.0],[3.0,4.0],[5.0,6.0],[7.0,8.0]]})");
}

TEST(MatrixJson, RejectsMalformed) {
  const char* bad[] = {
      R"([1, 2])",
      R"({"rows": 2, "cols": 2, "data": [[1,0],[0,0],[0,0]]})",
      R"({"rows": 0, "cols": 2, "data": []})",
      R"({"rows": 1.5, "cols": 1, "data": [[1,0]]})",
      R"({"cols": 1, "data": [[1,0]]})",
      R"({"rows": 1, "cols": 1, "data": [[1]]})",
      R"({"rows": 1, "cols": 1, "data": [["a", 0]]})",
      R"({"rows": 1, "cols": 1, "data": [1, 0]})",
      R"({"rows": 1, "cols": 1})",
      R"({"rows": 1, "cols": 1, "data": [[1, 0]]  )",
      R"(not json)",
  };
  for (const char* text : bad) {
    EXPECT_THROW(mt::parse_matrix(text), mt::InputError) << text;
  }
}

TEST(MatrixJson, RejectsNonFiniteValues) {
  json j = mt::matrix_to_json(mt::ComplexMatrix::Identity(1, 1));
  j["data"][0][0] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(mt::matrix_from_json(j), mt::InputError);
}

TEST(MatrixJson, LoadFile) {
  const auto path = std::filesystem::temp_directory_path() / "meantransform_test_matrix.json";
  {
    std::ofstream out(path);
    out << R"({"rows": 2, "cols": 2, "data": [[0,0],[1,0],[0,0],[0,0]]})";
  }
  EXPECT_EQ(mt::load_matrix_file(path), mat2(0.0, 1.0, 0.0, 0.0));
  std::filesystem::remove(path);
  EXPECT_THROW(mt::load_matrix_file(path), mt::InputError);
}

TEST(PhiJson, RoundTripsEveryVariant) {
  mt::Rng rng(62);
  const mt::ComplexMatrix u = mt::haar_unitary(3, rng);
  const std::vector<mt::PhiMap> maps{
      mt::PhiMap::unitary(u), mt::PhiMap::antiunitary(u), mt::PhiMap::scale({2.0, -1.0}),
      mt::PhiMap::adjoint(),
      mt::PhiMap::compose({mt::PhiMap::unitary(u), mt::PhiMap::adjoint()})};
  const mt::ComplexMatrix t = mt::ginibre(3, rng);
  for (const auto& map : maps) {
    const json j = mt::phimap_to_json(map);
    const mt::PhiMap back = mt::phimap_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.variant.index(), map.variant.index()) << j.dump();
    EXPECT_EQ(mt::apply_phi(back, t), mt::apply_phi(map, t)) << j.dump();
  }
}

TEST(PhiJson, RejectsMalformed) {
  EXPECT_THROW(mt::phimap_from_json(json::parse(R"({"variant": "rotate"})")), mt::InputError);
  EXPECT_THROW(mt::phimap_from_json(json::parse(R"({"variant": "scale"})")), mt::InputError);
  EXPECT_THROW(mt::phimap_from_json(json::parse(R"({"variant": 3})")), mt::InputError);
  EXPECT_THROW(mt::phimap_from_json(json::parse(R"([])")), mt::InputError);
  EXPECT_THROW(mt::phimap_from_json(json::parse(
                   R"({"variant": "unitary", "U": {"rows": 1, "cols": 1, "data": [[2, 0]]}})")),
               mt::InputError);
  EXPECT_THROW(mt::phimap_from_json(json::parse(R"({"variant": "compose", "maps": 1})")),
               mt::InputError);
}

TEST(ReportJson, Shape) {
  mt::GeneratorSpec spec;
  spec.dim = 3;
  const mt::CheckReport ok = mt::falsify("zero_iff", spec, 3);
  const json j = mt::report_to_json(ok);
  EXPECT_EQ(j["property_id"], "zero_iff");
  EXPECT_EQ(j["trials"], 3);
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["passes"].get<int>() + j["failures"].get<int>() + j["indeterminate"].get<int>(), 3);

  const mt::CheckReport bad = mt::falsify("mean_is_linear", spec, 3);
  const json jb = mt::report_to_json(bad);
  ASSERT_TRUE(jb["witness"].is_array());
  EXPECT_EQ(jb["witness"][0]["label"], "A");
  EXPECT_EQ(mt::matrix_from_json(jb["witness"][0]["matrix"]), bad.witness[0].matrix);
}

TEST(VerdictJson, Shape) {
  const json j = mt::verdict_to_json(mt::is_partial_isometry(mat2(2.0, 0.0, 0.0, 0.0)));
  EXPECT_EQ(j["holds"], "false");
  EXPECT_DOUBLE_EQ(j["residual"].get<double>(), 6.0);
}

TEST(IterationJson, Shape) {
  const json j = mt::iteration_to_json(mt::iterate_mean(mat2(0.0, 1.0, 0.0, 0.0), 3, 1e-12));
  EXPECT_EQ(j["steps"], 3);
  EXPECT_EQ(j["trace"].size(), 3U);
  EXPECT_DOUBLE_EQ(j["trace"][2]["delta"].get<double>(), 0.125);
}

}  // namespace
