#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qloc/suite.hpp"

using namespace qloc;
using namespace qloc::suite;
namespace fs = std::filesystem;

namespace {

const char* kSmall = R"(# small manifest
[s2 poincare]
PP := comm(P[0], P[1]) == 0 @ exact
DM := comm(D, M) == M @ exact
[s5 frames]
MM := conj(M) == dot(M, lambdainv) @ order
M2 := conj(M) == dot(M, lambdainv) @ order 2
[coefficients]
K := coeff(M*M, P2) == 1 @ exact
)";

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Suite, ParsesManifest) {
  auto entries = parse_manifest(kSmall);
  ASSERT_EQ(entries.size(), 5u);
  EXPECT_EQ(entries[0].tag, "s2 poincare");
  EXPECT_EQ(entries[2].mode, OrderMode::config);
  EXPECT_EQ(entries[3].mode, OrderMode::fixed);
  EXPECT_EQ(entries[3].order, 2);
  EXPECT_EQ(entries[4].line, 9);
}

TEST(Suite, ManifestErrorsHavePositions) {
  try {
    parse_manifest("A := M == M @ exact\nB := comm(M, == M @ exact\n");
    FAIL();
  } catch (const ManifestParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 1);
  }
  EXPECT_THROW(parse_manifest("A := M == M @ exact\nA := M == M @ exact\n"), ManifestParseError);
  EXPECT_THROW(parse_manifest("A := M == M\n"), ManifestParseError);
  EXPECT_THROW(parse_manifest("A := M == M @ sometimes\n"), ManifestParseError);
  EXPECT_THROW(parse_manifest("A M == M @ exact\n"), ManifestParseError);
}

TEST(Suite, RunsAndReports) {
  auto entries = parse_manifest(kSmall);
  IdentityReport r = run_suite("small", entries, {});
  EXPECT_TRUE(r.all_passed()) << r.text();
  EXPECT_EQ(r.passed, 5);
  ASSERT_TRUE(r.entries[4].coefficient.has_value());
  EXPECT_EQ(*r.entries[4].coefficient, "1");

  auto j = nlohmann::json::parse(r.json());
  EXPECT_EQ(j["suite"], "small");
  EXPECT_EQ(j["config"]["order"], 3);
  ASSERT_EQ(j["entries"].size(), 5u);
  for (const auto& e : j["entries"]) {
    for (const char* k : {"name", "tag", "status", "order", "residual", "ms"}) {
      EXPECT_TRUE(e.contains(k)) << k;
    }
  }
  EXPECT_EQ(j["entries"][2]["order"], 3);
  EXPECT_EQ(j["entries"][0]["order"], "exact");
  EXPECT_EQ(j["totals"]["pass"], 5);

  std::string md = r.markdown();
  EXPECT_NE(md.find("| name"), std::string::npos);
  EXPECT_NE(md.find("DM"), std::string::npos);
}

TEST(Suite, Filter) {
  SuiteConfig cfg;
  cfg.filter = "s5";
  IdentityReport r = run_suite("small", parse_manifest(kSmall), cfg);
  EXPECT_EQ(r.entries.size(), 2u);
}

TEST(Suite, NegativeControlsFail) {
  for (const auto& e : parse_manifest(kSmall)) {
    EntryResult r = run_entry(negative_control(e), 3);
    EXPECT_EQ(r.status, Status::fail) << e.name << " " << r.residual;
  }
}

TEST(Suite, BadEntryIsAnErrorNotACrash) {
  auto entries = parse_manifest("Z := dx(P[0], 1) == 0 @ exact\n");
  IdentityReport r = run_suite("bad", entries, {});
  EXPECT_EQ(r.errors, 1);
  EXPECT_FALSE(r.all_passed());
}

TEST(Suite, DefaultManifestDeterministicAcrossJobs) {
  auto entries = load_manifest(QLOC_DEFAULT_MANIFEST);
  SuiteConfig one;
  SuiteConfig four;
  four.jobs = 4;
  IdentityReport a = run_suite("default", entries, one);
  IdentityReport b = run_suite("default", entries, four);
  EXPECT_TRUE(a.all_passed());
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    EXPECT_EQ(a.entries[k].name, b.entries[k].name);
    EXPECT_EQ(a.entries[k].status, b.entries[k].status);
    EXPECT_EQ(a.entries[k].residual, b.entries[k].residual);
  }
}

TEST(Golden, MatchesCommittedSnapshots) {
  fs::path dir = QLOC_GOLDEN_DIR;
  std::vector<std::string> exprs;
  for (const auto& f : fs::directory_iterator(dir)) {
    std::string first = read(f.path()).substr(0, read(f.path()).find('\n'));
    ASSERT_EQ(first.rfind("# ", 0), 0u) << f.path();
    exprs.push_back(first.substr(2));
    EXPECT_EQ(snapshot_file_name(exprs.back()), f.path().filename().string());
  }
  ASSERT_GE(exprs.size(), 5u);
  auto diff = snapshot_diff(exprs, dir);
  EXPECT_TRUE(diff.empty()) << diff.front();
}

TEST(Golden, RegenerationIsStableAndOrderSensitive) {
  fs::path tmp = fs::temp_directory_path() / "qloc_golden_test";
  fs::remove_all(tmp);
  std::vector<std::string> exprs = {"Xh[0]", "C[0]", "conj(M; order=2)"};
  auto first = golden_snapshot(exprs, tmp / "a");
  auto second = golden_snapshot(exprs, tmp / "b");
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t k = 0; k < first.size(); ++k) EXPECT_EQ(read(first[k]), read(second[k]));

  RenderOptions desc;
  desc.order = MonomialOrder::descending;
  auto diff = snapshot_diff(exprs, tmp / "a", desc);
  EXPECT_FALSE(diff.empty());
  fs::remove_all(tmp);
}
