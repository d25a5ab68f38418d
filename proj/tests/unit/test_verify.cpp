#include <sstream>

#include <gtest/gtest.h>

#include "meantransform/theorem_suite.hpp"
#include "meantransform/verify.hpp"

namespace mt = meantransform;

namespace {

mt::CliConfig quick() {
  mt::CliConfig c;
  c.trials = 5;
  c.dims = {2, 3};
  return c;
}

TEST(CliConfig, Defaults) {
  const mt::CliConfig c;
  EXPECT_DOUBLE_EQ(c.tol, 1e-8);
  EXPECT_EQ(c.seed, 0U);
  EXPECT_EQ(c.trials, 200);
  EXPECT_EQ(c.dims, (std::vector<int>{3, 4, 5, 6, 7, 8}));
  EXPECT_DOUBLE_EQ(c.lambda, 0.5);
  EXPECT_EQ(c.output, mt::OutputMode::human);
  EXPECT_NO_THROW(c.validate());
}

TEST(CliConfig, Validation) {
  mt::CliConfig c;
  c.tol = 0.0;
  EXPECT_THROW(c.validate(), mt::InputError);
  c = {};
  c.trials = -1;
  EXPECT_THROW(c.validate(), mt::InputError);
  c = {};
  c.dims = {3, 1};
  EXPECT_THROW(c.validate(), mt::InputError);
  c = {};
  c.dims.clear();
  EXPECT_THROW(c.validate(), mt::InputError);
  c = {};
  c.lambda = 2.0;
  EXPECT_THROW(c.validate(), mt::InputError);
}

TEST(RunVerify, AllSkipsFalsifiersAndSmallDims) {
  const mt::VerifyResult r = mt::run_verify("all", quick());
  EXPECT_EQ(r.failures, 0);
  for (const auto& report : r.reports) {
    EXPECT_TRUE(mt::find_property(report.property_id).expected_to_hold);
    EXPECT_FALSE(report.property_id == "forward_theorem" && report.dim == 2);
  }
}

TEST(RunVerify, NamedPropertyErrors) {
  EXPECT_THROW(mt::run_verify("nope", quick()), mt::InputError);
  EXPECT_THROW(mt::run_verify("forward_theorem", quick()), mt::InputError);
  const mt::VerifyResult lin = mt::run_verify("mean_is_linear", quick());
  EXPECT_GT(lin.failures, 0);
}

TEST(RunVerify, JsonIsDeterministic) {
  const mt::CliConfig c = quick();
  const std::string a = mt::verify_to_json("all", c, mt::run_verify("all", c)).dump(2);
  const std::string b = mt::verify_to_json("all", c, mt::run_verify("all", c)).dump(2);
  EXPECT_EQ(a, b);
  mt::CliConfig other = c;
  other.seed = 1;
  EXPECT_NE(a, mt::verify_to_json("all", other, mt::run_verify("all", other)).dump(2));
}

TEST(RunVerify, HumanSummary) {
  std::ostringstream os;
  mt::print_verify_human(os, mt::run_verify("zero_iff", quick()));
  EXPECT_NE(os.str().find("all properties held"), std::string::npos);
}

}  // namespace
