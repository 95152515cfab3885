#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <random>
#include <string>

#include "monideal/cli/run.hpp"
#include "oracles.hpp"

using namespace monideal;
using namespace monideal::cli;

namespace {

struct Process {
  std::string out;
  int code = -1;
};

Process run_cli(const std::string& args) {
  const std::string cmd = std::string(MONIDEAL_CLI_PATH) + " " + args + " 2>/dev/null";
  Process p;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), n);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j)
      if (has_float(v)) return true;
  return false;
}

std::vector<std::string> strings(const Json& j) { return j.get<std::vector<std::string>>(); }

const char* kCounterexample = "x^3, x^2*y^8, x*y^15, y^21";

}  // namespace

TEST(ParseIdeal, Examples) {
  auto c = parse_ideal(kCounterexample);
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(c, MonomialIdeal(2, {{3, 0}, {2, 8}, {1, 15}, {0, 21}}));
  EXPECT_EQ(parse_ideal("x, y"), MonomialIdeal::maximal(2));
  EXPECT_EQ(parse_ideal(" x^2 y , x y^2,y^3 ,x^3"), MonomialIdeal(2, {{2, 1}, {1, 2}, {0, 3}, {3, 0}}));
  EXPECT_EQ(parse_ideal("x*x, y"), MonomialIdeal(2, {{2, 0}, {0, 1}}));
  EXPECT_EQ(parse_ideal("x1^2, x2*x3, x3^4").dim(), 3u);
  EXPECT_TRUE(parse_ideal("1, x").is_unit());
  EXPECT_EQ(parse_ideal("x^2, x*y, x^3*y^5").size(), 2u);  // minimalized
}

TEST(ParseIdeal, Errors) {
  EXPECT_THROW(parse_ideal("x^-1"), ParseError);
  EXPECT_THROW(parse_ideal("x, z"), ParseError);
  EXPECT_THROW(parse_ideal(""), ParseError);
  EXPECT_THROW(parse_ideal("x,,y"), ParseError);
  EXPECT_THROW(parse_ideal("x*, y"), ParseError);
  EXPECT_THROW(parse_ideal("x1, y"), ParseError);
  EXPECT_THROW(parse_ideal("x^"), ParseError);
  try {
    parse_ideal("x, y^-2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(ParseIdeal, FormatRoundTrip) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    auto ideal = oracle::random_zero_dim(rng, 2 + t % 3, 9, 4);
    auto text = format_ideal(ideal);
    EXPECT_EQ(parse_ideal(text), ideal) << text;
    EXPECT_EQ(format_ideal(parse_ideal(text)), text);
  }
  EXPECT_EQ(format_ideal(parse_ideal(kCounterexample)), "x^3, x^2*y^8, x*y^15, y^21");
  EXPECT_EQ(format_ideal(MonomialIdeal::unit(2)), "1");
}

TEST(Run, ClassifyCounterexample) {
  auto o = run("classify", kCounterexample, Options{});
  EXPECT_EQ(o.exit_code, kOk);
  const auto& c = o.report["classification"];
  EXPECT_EQ(o.report["schema"], 1);
  EXPECT_FALSE(c["normal"].get<bool>());
  EXPECT_TRUE(c["m_full"]["m_full"].get<bool>());
  EXPECT_TRUE(c["necessary"]["all_pass"].get<bool>());
  EXPECT_EQ(c["integral_closure"]["text"], "x^3, x^2*y^7, x*y^14, y^21");
  EXPECT_FALSE(c["integer_rounding"]["holds"].get<bool>());
  EXPECT_FALSE(has_float(o.report));
}

TEST(Run, ReesListsTheExtraQuadric) {
  auto o = run("rees", "x^3, x^2y, xy^4, y^10", Options{});
  EXPECT_EQ(o.exit_code, kOk);
  const auto& r = o.report["rees"];
  auto extra = strings(r["extra_generators"]);
  EXPECT_NE(std::find(extra.begin(), extra.end(), "y^3*T3^2 - T2*T4"), extra.end());
  EXPECT_FALSE(r["expected_equations"]["by_minors"].get<bool>());
  EXPECT_EQ(r["reduction_number"]["bound"], "at_most_one");
  EXPECT_TRUE(r["colon_route_agrees"].get<bool>());
  EXPECT_EQ(r["content"]["r"], 1);
  EXPECT_EQ(r["syzygy_matrix"][1], Json::array({"-x", "y^3", "0"}));
}

TEST(Run, TrivialIdeal) {
  auto o = run("classify", "x, y", Options{});
  EXPECT_EQ(o.exit_code, kOk);
  const auto& c = o.report["classification"];
  EXPECT_TRUE(c["normal"].get<bool>());
  EXPECT_TRUE(c["m_full"]["m_full"].get<bool>());
  EXPECT_EQ(c["integral_closure"]["text"], "x, y");
  EXPECT_EQ(c["m_full_closure"]["text"], "x, y");
  EXPECT_TRUE(c["consistent"].get<bool>());
  EXPECT_EQ(c["rees"]["defining_ideal"], Json::array({"y*T1 - x*T2"}));
}

TEST(Run, OtherSubcommands) {
  auto closure = run("closure", "x^3, y^5", Options{});
  EXPECT_EQ(closure.report["m_full_closure"]["text"], "x^3, x^2*y^3, x*y^4, y^5");
  EXPECT_EQ(closure.report["m_full_closure_steps"], 1);
  EXPECT_EQ(run("closure", "x^2, y^3", Options{}).report["integral_closure"]["text"], "x^2, x*y^2, y^3");

  auto mfull = run("mfull", "x^3, x^2y, xy^4, y^10", Options{});
  EXPECT_TRUE(mfull.report["verdict"]["m_full"].get<bool>());
  EXPECT_TRUE(mfull.report.contains("tight_factors"));

  auto normal = run("normal", "x^2, x*y^2, y^3", Options{});
  EXPECT_TRUE(normal.report["normal"].get<bool>());
  EXPECT_FALSE(normal.report["sufficient"]["some_suite_passes"].get<bool>());

  auto pick = run("pick", "x^4, x^2*y, y^5", Options{});
  EXPECT_TRUE(pick.report["all_hold"].get<bool>());
  EXPECT_EQ(pick.report["consecutive_triangles"].size(), 1u);

  Options box;
  box.wbox = 4;
  auto irp = run("irp", "x^2, x*y, y^2", box);
  EXPECT_TRUE(irp.report["rounding"]["holds"].get<bool>());
  EXPECT_EQ(irp.report["rounding"]["cells_checked"], 25);

  EXPECT_THROW(run("frobnicate", "x, y", Options{}), InvalidArgument);
  EXPECT_THROW(run("mfull", "x1, x2, x3", Options{}), InvalidArgument);
}

TEST(Run, ScanOrderIndependentOfThreads) {
  Options a;
  a.scan_n = 3;
  a.scan_emax = 5;
  a.threads = 1;
  Options b = a;
  b.threads = 4;
  auto ra = run("scan", "", a);
  auto rb = run("scan", "", b);
  EXPECT_EQ(ra.report.dump(), rb.report.dump());
  EXPECT_EQ(ra.exit_code, kOk);
  // n = 2: 5 * 5, n = 3: C(5,2)^2
  EXPECT_EQ(ra.report["summary"]["total"], 25 + 100);
  EXPECT_FALSE(has_float(ra.report));
}

TEST(Binary, ExitCodesAndDeterminism) {
  auto first = run_cli(std::string("classify \"") + kCounterexample + "\" --json");
  auto second = run_cli(std::string("classify \"") + kCounterexample + "\" --json");
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
  auto parsed = Json::parse(first.out);
  EXPECT_EQ(parsed["schema"], 1);
  EXPECT_FALSE(has_float(parsed));

  EXPECT_EQ(run_cli("closure \"x^-1\"").code, 1);
  EXPECT_EQ(run_cli("bogus \"x\"").code != 0, true);
  EXPECT_EQ(run_cli("rees \"x, y\" --trials 0").code != 0, true);

  auto r1 = run_cli("rees \"x^3, x^2y, xy^4, y^10\" --json --seed 3");
  auto r2 = run_cli("rees \"x^3, x^2y, xy^4, y^10\" --json --seed 3");
  EXPECT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, r2.out);
  EXPECT_NE(r1.out.find("y^3*T3^2 - T2*T4"), std::string::npos);

  auto s1 = run_cli("scan --n 3 --emax 4 --json --threads 2");
  auto s2 = run_cli("scan --n 3 --emax 4 --json --threads 1");
  EXPECT_EQ(s1.code, 0);
  EXPECT_EQ(s1.out, s2.out);

  auto text = run_cli("mfull \"x, y\"");
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("verdict.m_full: true"), std::string::npos);
}

TEST(Binary, WritesReportFile) {
  const std::string path = ::testing::TempDir() + "monideal_report.json";
  auto p = run_cli("normal \"x^2, x*y^2, y^3\" --out " + path);
  EXPECT_EQ(p.code, 0);
  FILE* f = fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::string content;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) content.append(buf.data(), n);
  fclose(f);
  EXPECT_TRUE(Json::parse(content)["normal"].get<bool>());
}
