#include "cli/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli/output.hpp"
#include "cli/plot.hpp"
#include "molecule/counting.hpp"
#include "molecule/errors.hpp"
#include "support/image.hpp"

namespace molecule::cli {
namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "molecule");
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("molecule_cli_test_" + name);
}

TEST(CountCommandTest, Examples) {
  EXPECT_EQ(run({"count", "12", "--method", "recursive"}).out, "22\n");
  EXPECT_EQ(run({"count", "1", "--method", "direct"}).out, "1\n");
  EXPECT_EQ(run({"count", "125", "--method", "closed"}).out, "324\n");
  EXPECT_EQ(run({"count", "30", "--method", "closed"}).out, "104\n");
}

TEST(CountCommandTest, UsageErrorsExitTwo) {
  CliRun r = run({"count", "12", "--method", "closed"});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_NE(r.err.find("prime power or squarefree"), std::string::npos);
  EXPECT_EQ(run({"count", "0"}).status, kExitUsage);
  EXPECT_EQ(run({"count", "abc"}).status, kExitUsage);
  EXPECT_EQ(run({"count", "12", "--method", "magic"}).status, kExitUsage);
  EXPECT_EQ(run({"count", "720", "--method", "direct", "--budget", "5"}).status, kExitUsage);
  EXPECT_EQ(run({}).status, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(run({"--help"}).status, kExitOk);
}

TEST(TableCommandTest, SmallCsv) {
  EXPECT_EQ(run({"table", "--max", "3", "--format", "csv"}).out, "n,M,nu,ratio\n1,1,1,1/1\n2,1,1,1/1\n3,2,3,2/3\n");
  const std::string six = run({"table", "--max", "6"}).out;
  EXPECT_NE(six.find("\n6,6,27,2/9\n"), std::string::npos);
}

TEST(TableCommandTest, JsonRows) {
  const CliRun r = run({"table", "--max", "1", "--format", "json"});
  EXPECT_EQ(r.out, "[{\"n\":1,\"M\":1,\"nu\":1,\"ratio\":\"1/1\"}]\n");
  const auto rows = nlohmann::json::parse(run({"table", "--max", "24", "--format", "json"}).out);
  ASSERT_EQ(rows.size(), 24U);
  for (const auto& row : rows) EXPECT_LE(row["M"].get<std::uint64_t>(), row["nu"].get<std::uint64_t>());
}

TEST(TableCommandTest, DeterministicAcrossRuns) {
  for (const char* format : {"csv", "json"}) {
    const std::string a = run({"table", "--max", "24", "--format", format}).out;
    const std::string b = run({"table", "--max", "24", "--format", format, "--method", "recursive"}).out;
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, run({"table", "--max", "24", "--format", format}).out);
    EXPECT_EQ(a.back(), '\n');
  }
}

TEST(TableCommandTest, BudgetFallbackIsNoted) {
  const CliRun r = run({"table", "--max", "12", "--budget", "3"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.err.find("n=12"), std::string::npos);
  EXPECT_NE(r.out.find("\n12,22,"), std::string::npos);
}

TEST(BellCommandTest, Values) {
  EXPECT_EQ(run({"bell", "4"}).out, "75\n");
  EXPECT_EQ(run({"bell", "0"}).out, "1\n");
}

TEST(AddressesCommandTest, Examples) {
  EXPECT_EQ(run({"addresses", "2"}).out, "[{\"rotations\":[[1,2]],\"period\":2}]\n");
  EXPECT_EQ(nlohmann::json::parse(run({"addresses", "4"}).out).size(), 3U);
  const auto twelve = nlohmann::json::parse(run({"addresses", "12", "--format", "json"}).out);
  EXPECT_EQ(twelve.size(), 22U);
  for (const auto& entry : twelve) EXPECT_EQ(entry["period"], 12);
  EXPECT_EQ(run({"addresses", "720", "--budget", "10"}).status, kExitUsage);
}

TEST(VerifyCommandTest, ReportSchemaAndExitStatus) {
  for (auto [n, expected] : {std::pair{6, 6}, std::pair{1, 1}, std::pair{8, 9}}) {
    const CliRun r = run({"verify", std::to_string(n)});
    EXPECT_EQ(r.status, kExitOk) << r.out;
    const auto report = nlohmann::json::parse(r.out);
    EXPECT_EQ(report["n"], n);
    EXPECT_EQ(report["expected"], expected);
    EXPECT_EQ(report["located"], expected);
    EXPECT_EQ(report["verdict"], true);
    EXPECT_TRUE(report["failures"].empty());
    ASSERT_EQ(report["centers"].size(), static_cast<std::size_t>(expected));
    for (const auto& c : report["centers"]) {
      EXPECT_TRUE(c.contains("re") && c.contains("im") && c.contains("residual"));
      EXPECT_EQ(c["period"], n);
      EXPECT_TRUE(c["address"].is_array());
    }
  }
}

TEST(VerifyCommandTest, FailedVerdictExitsOne) {
  const CliRun r = run({"verify", "6", "--no-sweep", "--distinct-tol", "0.5"});
  EXPECT_EQ(r.status, kExitVerdictFailed);
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], false);
}

TEST(VerifyCommandTest, ConfigErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "6", "--tol", "0.5"}).status, kExitUsage);
  EXPECT_EQ(run({"verify", "20"}).status, kExitUsage);
  EXPECT_EQ(run({"verify", "0"}).status, kExitUsage);
}

TEST(CentersCommandTest, SweepDump) {
  const CliRun r = run({"centers", "3"});
  EXPECT_EQ(r.status, kExitOk);
  const auto centers = nlohmann::json::parse(r.out);
  ASSERT_EQ(centers.size(), 3U);
  EXPECT_TRUE(centers[0]["address"].is_null());
  EXPECT_LT(centers[0]["re"].get<double>(), centers[1]["re"].get<double>());
}

TEST(PlotCommandTest, CrossCountsAndDeterminism) {
  for (auto [n, expected] : {std::pair{1, 1}, std::pair{4, 3}, std::pair{6, 6}}) {
    const auto a = temp_path("a_" + std::to_string(n) + ".ppm");
    const auto b = temp_path("b_" + std::to_string(n) + ".ppm");
    ASSERT_EQ(run({"plot", std::to_string(n), "--width", "400", "--height", "300", "--out", a.string()}).status, kExitOk);
    ASSERT_EQ(run({"plot", std::to_string(n), "--width", "400", "--height", "300", "--out", b.string()}).status, kExitOk);
    const std::string bytes = read_file(a);
    EXPECT_EQ(bytes, read_file(b));
    const auto image = testing::decode_p6(bytes);
    EXPECT_EQ(image.width, 400U);
    EXPECT_EQ(testing::count_red_clusters(image), static_cast<std::size_t>(expected)) << n;
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }
}

TEST(PlotCommandTest, PeriodOneCrossSitsOnTheOrigin) {
  const auto path = temp_path("origin.ppm");
  ASSERT_EQ(run({"plot", "1", "--width", "101", "--height", "81", "--window=-1,1,-1,1", "--out", path.string()}).status,
            kExitOk);
  const auto image = testing::decode_p6(read_file(path));
  PlotSpec spec;
  spec.width = 101;
  spec.height = 81;
  spec.window = {-1, 1, -1, 1};
  const auto at = pixel_of(spec, 0.0);
  ASSERT_TRUE(at.has_value());
  const std::uint8_t* px = &image.rgb[(std::size_t{at->second} * image.width + at->first) * 3];
  EXPECT_EQ(px[0], 255);
  EXPECT_EQ(px[1], 0);
  std::filesystem::remove(path);
}

TEST(PlotCommandTest, Errors) {
  EXPECT_EQ(run({"plot", "6", "--out", "/nonexistent-dir/x.ppm"}).status, kExitUsage);
  EXPECT_EQ(run({"plot", "6", "--width", "8", "--out", temp_path("x.ppm").string()}).status, kExitUsage);
  EXPECT_EQ(run({"plot", "6", "--window=1,0,0,1", "--out", temp_path("x.ppm").string()}).status, kExitUsage);
  EXPECT_EQ(run({"plot", "6", "--escape-radius", "1", "--out", temp_path("x.ppm").string()}).status, kExitUsage);
  EXPECT_EQ(run({"plot", "6"}).status, kExitUsage);
}

TEST(EscapeTimeTest, ShadingRule) {
  PlotSpec spec;
  spec.width = 16;
  spec.height = 16;
  spec.window = {-0.1, 0.1, -0.1, 0.1};
  spec.max_iter = 10;
  Image inside = render_escape_time(spec);
  for (std::uint8_t v : inside.rgb) EXPECT_EQ(v, 0);  // never escapes: black

  spec.window = {10.0, 10.5, 10.0, 10.5};
  Image outside = render_escape_time(spec);
  // Escapes after the first iteration: floor(255 * 1 / 10) = 25.
  for (std::uint8_t v : outside.rgb) EXPECT_EQ(v, 25);
  EXPECT_EQ(outside.to_ppm().substr(0, 13), "P6\n16 16\n255\n");
}

TEST(WindowTest, Parsing) {
  const Window w = parse_window("-2,0.75,-1.15,1.15");
  EXPECT_EQ(w.re_min, -2.0);
  EXPECT_EQ(w.im_max, 1.15);
  EXPECT_THROW(parse_window("1,2,3"), DomainError);
  EXPECT_THROW(parse_window("1,2,x,4"), DomainError);
}

}  // namespace
}  // namespace molecule::cli
