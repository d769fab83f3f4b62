#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "knotlog/cli.hpp"

using namespace knotlog;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool single_line(const std::string& s) {
  return !s.empty() && s.back() == '\n' && s.find('\n') == s.size() - 1;
}

}  // namespace

TEST_CASE("fox subcommand") {
  Run r = run({"fox", "--presentation", "<a,b|a^3=b^2>"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("A = [1 + a + a^2]") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("exit codes and diagnostics") {
  Run parse = run({"fox", "--presentation", "<a,b|a^3=b^2"});
  CHECK(parse.code == kExitParse);
  CHECK(single_line(parse.err));
  CHECK(parse.err.find("column 13") != std::string::npos);

  Run domain = run({"logseries", "theorem4", "--x", "1", "--terms", "5"});
  CHECK(domain.code == kExitDomain);
  CHECK(single_line(domain.err));

  Run resource = run({"lueck", "--presentation", "<t,a,b|t*a=a*t,t*b=b*t>", "--delete", "t", "--terms", "10",
                      "--support-cap", "20"});
  CHECK(resource.code == kExitResource);
  CHECK(single_line(resource.err));

  Run usage = run({"frobnicate"});
  CHECK(usage.code == kExitUsage);
  CHECK(single_line(usage.err));

  CHECK(run({"mahler", "--poly", "1+x", "--grid", "7"}).code == kExitDomain);
  CHECK(run({"mahler", "--poly", "1+"}).code == kExitParse);
  CHECK(run({"lueck", "--presentation", "<a,b|a^3=b^2>", "--delete", "c"}).code == kExitDomain);
}

TEST_CASE("repeated runs are byte-identical") {
  std::vector<std::vector<std::string>> cases{
      {"lueck", "--presentation", "<a,b|a^3=b^2>", "--terms", "6", "--format", "json"},
      {"mahler", "--poly", "1+x+y", "--grid", "128"},
      {"logseries", "triple", "--k2", "9", "--terms", "300"},
      {"pipeline", "--presentation", "<t,a,b|t*a=a*t,t*b=b*t>", "--delete", "t", "--hom", "t=x,a=1,b=1",
       "--grid", "256", "--format", "json"},
  };
  for (const auto& args : cases) {
    Run a = run(args), b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("lueck json report") {
  Run r = run({"lueck", "--presentation", "<a,b|a^2=b^3>", "--delete", "b", "--k2", "4", "--terms", "3",
               "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"k2", "constant_part", "terms", "estimate", "caveats", "term_count"}) CHECK(j.contains(key));
  CHECK(j["k2"] == "4/1");
  CHECK(j["term_count"] == 3);
  CHECK(j["terms"][0]["term"] == "1/2");
  CHECK(j["terms"][1]["term"] == "3/16");
  CHECK(j["terms"][2]["term"] == "5/48");
  CHECK(j["estimate"].get<double>() == doctest::Approx(std::log(4.0) - 19.0 / 24.0));
}

TEST_CASE("emit-terms limits the listing, not the sum") {
  Run r = run({"logseries", "lehmer", "--terms", "1000", "--emit-terms", "5", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["terms"].size() == 5);
  CHECK(j["term_count"] == 1000);
}

TEST_CASE("lueck-complex subcommand") {
  Run r = run({"lueck-complex", "--matrix", "[[1,0],[0,2]]", "--k2", "4", "--terms", "300", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["estimate"].get<double>() - std::log(4.0)) < 0.02);
  CHECK(j.contains("reference"));
}

TEST_CASE("output file") {
  auto path = std::filesystem::temp_directory_path() / "knotlog_cli_output_test.txt";
  std::filesystem::remove(path);
  Run r = run({"logseries", "ln2", "--terms", "2", "--output", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == run({"logseries", "ln2", "--terms", "2"}).out);
  CHECK(content.str().find("estimate: 0.34375") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("other log series kinds") {
  CHECK(run({"logseries", "genfun", "--x", "0.2", "--y", "0.5", "--terms", "80"}).code == kExitOk);
  CHECK(run({"logseries", "identity", "--z", "0.125", "--terms", "60"}).code == kExitOk);
  CHECK(run({"logseries", "theorem4", "--x", "5", "--terms", "1"}).out.find("estimate: 0.6") != std::string::npos);
}
