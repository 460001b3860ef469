#include <filesystem>
#include <fstream>
#include <sstream>
#include <gtest/gtest.h>
#include "fixtures.hpp"
#include "wellpoised/cli.hpp"

using namespace wp;
using fixtures::data;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(const std::string& command, const std::string& input, cli::Format f = cli::Format::Text,
            std::size_t parallel = 1) {
  cli::JobSpec job;
  job.command = command;
  job.input = input;
  job.format = f;
  job.parallel = parallel;
  std::ostringstream out, err;
  int code = cli::run(job, out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("wellpoised_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, LiftCheckOnTheEllipticCurve) {
  auto r = run("lift-check", data("elliptic.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "ideal.0: X1^6 + X1^2*X3^10 - X2^6*X3^5"));
  EXPECT_TRUE(has(r.out, "initial_ideal.0: X1^2*X3^10 - X2^6*X3^5"));
  EXPECT_TRUE(has(r.out, "degenerate_ideal.0: X1^2*X3^5 - X2^6"));
  EXPECT_TRUE(has(r.out, "initial_ideal.0: X1^6 - X2^6*X3^5"));
  std::size_t pos = 0, equal = 0;
  std::vector<std::string> verdicts;
  while ((pos = r.out.find("ideals_equal: ", pos)) != std::string::npos) {
    pos += 14;
    verdicts.push_back(r.out.substr(pos, r.out.find('\n', pos) - pos));
    if (verdicts.back() == "true") ++equal;
  }
  EXPECT_EQ(verdicts, (std::vector<std::string>{"false", "false", "true"}));
}

TEST(Cli, EmbedE8) {
  auto r = run("embed", data("e8.json"), cli::Format::Machine);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "presentation.ideal.count=1\n"));
  EXPECT_TRUE(has(r.out, "presentation.ideal.0=X1^2 - X2^3 + X3^5\n"));
  EXPECT_TRUE(has(r.out, "presentation.ordering.0=X1 (8,10,15)\n"));
  EXPECT_TRUE(has(r.out, "input_hash="));
}

TEST(Cli, OutputIsByteIdentical) {
  for (const char* cmd : {"verify-wellpoised", "value-semigroup", "nok-cone"}) {
    auto a = run(cmd, data("e8.json"), cli::Format::Machine);
    auto b = run(cmd, data("e8.json"), cli::Format::Machine);
    EXPECT_EQ(a.out, b.out) << cmd;
  }
  auto serial = run("hypertoric", data("hypertoric111.json"), cli::Format::Machine, 1);
  auto threaded = run("hypertoric", data("hypertoric111.json"), cli::Format::Machine, 4);
  EXPECT_EQ(serial.out, threaded.out);
}

TEST(Cli, InputHashFollowsTheBytes) {
  auto a = run("embed", scratch("h1.json", R"({"variables":["x","y"],"linear_forms":["x","y","x+y"],"tail_cone":[[1]],"coefficients":[[["6/5"]],[["-1/2"]],[["-2/3"]]]})"));
  auto b = run("embed", scratch("h2.json", R"({"variables":["x","y"],"linear_forms":["x","y","x+y"],"tail_cone":[[1]],"coefficients":[[["6/5"]],[["-1/2"]],[["-2/3"]]]} )"));
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(a.out, b.out);
  EXPECT_EQ(cli::fnv1a(""), "cbf29ce484222325");
  EXPECT_EQ(cli::fnv1a("a"), "af63dc4c8601ec8c");
}

TEST(Cli, EmptyFileIsAnInputError) {
  auto r = run("embed", scratch("empty.json", ""));
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.err, "line 1, column 1"));
}

TEST(Cli, MalformedJsonReportsPosition) {
  auto r = run("embed", scratch("bad.json", "{\n  \"variables\": [\"x\",\n  oops\n}"));
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.err, "line 3")) << r.err;
}

TEST(Cli, BadPolynomialIsAnInputError) {
  auto r = run("embed", scratch("poly.json", R"({"variables":["t1"],"base_ideal":["t1 +* 2"],"tail_cone":[[1]],"coefficients":[[[0]],[[1]]]})"));
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.err, "Parse"));
}

TEST(Cli, DimensionMismatchIsAnInputError) {
  auto r = run("embed", scratch("dims.json", R"({"variables":["t1"],"base_ideal":["t1 - 1"],"tail_cone":[[1]],"coefficients":[[[0]]]})"));
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.err, "DimensionMismatch"));
}

TEST(Cli, MissingFileIsAnInputError) {
  EXPECT_EQ(run("embed", "/nonexistent/file.json").code, 2);
}

TEST(Cli, UnknownCommand) {
  EXPECT_EQ(run("frobnicate", data("e8.json")).code, 2);
}

TEST(Cli, NegativeVerdictsExitOne) {
  EXPECT_EQ(run("admissable", data("e8.json")).code, 1);
  EXPECT_EQ(run("cm-check", data("e8.json")).code, 1);
}

TEST(Cli, PositiveVerdictsExitZero) {
  EXPECT_EQ(run("verify-wellpoised", data("e8.json")).code, 0);
  EXPECT_EQ(run("verify-wellpoised", data("uniform35.json")).code, 0);
  EXPECT_EQ(run("cm-check", data("boolean.json")).code, 0);
  EXPECT_EQ(run("generators", data("elliptic.json")).code, 0);
}

TEST(Cli, DegenerateOutsideTheTropicalCurve) {
  auto path = scratch("deg.json", R"({"variables":["t1","t2"],"base_ideal":["t2^2 - t1^3 - t1"],"tail_cone":[[1]],
    "coefficients":[[["6/5"]],[["-1/2"]],[["-2/3"]]],"weights":[[1,1],[-2,-3]]})");
  auto r = run("degenerate", path);
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r.out, "base_initial: monomial"));
  EXPECT_TRUE(has(r.out, "base_initial.0: t1^3 - t2^2"));
}

TEST(Cli, WeightsFileOverrides) {
  cli::JobSpec job;
  job.command = "lift";
  job.input = data("elliptic.json");
  job.weights = scratch("w.json", R"({"weights": [["1/2", 0, 1]]})");
  std::ostringstream out, err;
  ASSERT_EQ(cli::run(job, out, err), 0) << err.str();
  EXPECT_TRUE(has(out.str(), "weight: (1/2,0,1)"));
  EXPECT_FALSE(has(out.str(), "weight.1"));
}

TEST(Cli, VeroneseSegreQuotient) {
  auto v = run("veronese", data("twisted_cubic.json"));
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(has(v.out, "ideal.count: 3"));
  auto s = run("segre", data("segre11.json"));
  EXPECT_EQ(s.code, 0);
  EXPECT_TRUE(has(s.out, "ideal.0: z00*z11 - z01*z10"));
  auto q = run("quotient", data("p1_quotient.json"));
  EXPECT_EQ(q.code, 0);
  EXPECT_TRUE(has(q.out, "khovanskii: true"));
}

TEST(Cli, HypertoricReportsTheMatrixChecks) {
  auto r = run("hypertoric", data("hypertoric11.json"), cli::Format::Machine);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "matrices.sF_identity=true"));
  EXPECT_TRUE(has(r.out, "matrices.AB_identity=false"));
  EXPECT_TRUE(has(r.out, "total_space.presentation_matches=true"));
}

TEST(Cli, ValueSemigroupMembership) {
  auto path = scratch("vs.json", R"({"variables":["x","y"],"linear_forms":["x","y","x + y"],"tail_cone":[[1]],
    "coefficients":[[["6/5"]],[["-1/2"]],[["-2/3"]]],"index_set":[0,1],"points":[[1,2],[0,0],[5,1]]})");
  auto r = run("value-semigroup", path);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "(0,0) in"));
  EXPECT_TRUE(has(r.out, "(5,1) out"));
}
