#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gemkit::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::filesystem::path kGolden = GEMKIT_GOLDEN_DIR;

}  // namespace

TEST_SUITE("io_cli") {
  TEST_CASE("golden: report s4_2 json") {
    const auto r = run({"report", "--catalog", "s4_2", "--m", "0", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(kGolden / "report_s4_2_m0.json"));
    CHECK(r.out.find("\"schema_version\": 1") != std::string::npos);
  }

  TEST_CASE("golden: semisimple with the wrong rank") {
    const auto r = run({"semisimple", "--catalog", "s1xs3_8", "--m", "0"});
    CHECK(r.code == 1);
    CHECK(r.out == slurp(kGolden / "semisimple_s1xs3_8_m0.txt"));
  }

  TEST_CASE("golden: closed handle predictions") {
    const auto r = run({"handles", "--mode", "closed", "--beta2", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(kGolden / "handles_closed_beta2_0.txt"));
    CHECK(r.out.find("(1,2,1,1,1)") != std::string::npos);
    CHECK(r.out.find("(1,1,0,1,1)") != std::string::npos);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"report"}).code == 2);
    CHECK(run({"report", "--catalog", "nope"}).code == 2);
    CHECK(run({"report", "--catalog", "s4_2", "--format", "yaml"}).code == 2);
    CHECK(run({"report", "--catalog", "s4_2", "--input", "x.json"}).code == 2);
    CHECK(run({"handles", "--beta2", "-1"}).code == 2);
    CHECK(run({"report", "--input", "/nonexistent/graph.json"}).code == 2);
    const auto r = run({"semisimple", "--input", "/nonexistent/graph.json", "--m", "0"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
  }

  TEST_CASE("library preconditions in targeted subcommands exit 2") {
    const auto r = run({"identities", "--catalog", "singular_s1xs2_cone", "--mode", "closed"});
    CHECK(r.code == 0);  // singular graphs are routed to the singular check
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "gemkit_cli_twin.json";
    std::ofstream(path) << R"({"name":"twin","dimension":4,"vertices":4,"edges":[)"
                           R"([0,1,0],[0,1,1],[0,1,2],[0,1,3],[2,3,0],[2,3,1],[2,3,2],[2,3,3],[0,3,4],[1,2,4]]})";
    const auto id = run({"identities", "--input", path.string()});
    CHECK(id.code == 2);
    CHECK(id.err.find("NotCrystallization") != std::string::npos);
    CHECK(run({"validate", "--input", path.string()}).code == 0);
    CHECK(run({"homology", "--input", path.string()}).code == 0);
    CHECK(run({"semisimple", "--input", path.string()}).code == 2);
    std::filesystem::remove(path);
  }

  TEST_CASE("subcommands on the catalog") {
    for (const auto& cmd : {"validate", "genus", "homology", "identities"}) {
      const auto r = run({cmd, "--catalog", "cp2_16"});
      CHECK(r.code == 0);
      CHECK(r.err.empty());
    }
    CHECK(run({"semisimple", "--catalog", "cp2_16"}).code == 0);  // m from metadata
    CHECK(run({"semisimple", "--catalog", "singular_s1xs2_cone", "--mode", "boundary", "--m", "1", "--m-prime", "0"})
              .code == 0);
    CHECK(run({"semisimple", "--catalog", "singular_s1xs2_cone", "--mode", "boundary", "--m", "1", "--m-prime", "1"})
              .code == 1);
    CHECK(run({"handles", "--catalog", "s1xs3_8"}).code == 0);
    const auto list = run({"catalog-list", "--format", "json"});
    CHECK(list.out == "[\"s4_2\", \"s1xs3_8\", \"cp2_16\", \"singular_s1xs2_cone\"]\n");
    const auto boundary = run({"handles", "--mode", "boundary", "--beta2", "2", "--format", "json"});
    CHECK(boundary.code == 0);
    CHECK(boundary.out.find("\"conditional\"") != std::string::npos);
  }

  TEST_CASE("reports are identical across worker counts") {
    for (const auto& name : {"s1xs3_8", "cp2_16", "singular_s1xs2_cone"}) {
      const auto one = run({"report", "--catalog", name, "--format", "json", "--workers", "1"});
      const auto many = run({"report", "--catalog", name, "--format", "json", "--workers", "8"});
      CHECK(one.code == 0);
      CHECK(one.out == many.out);
      CHECK(one.out == run({"report", "--catalog", name, "--format", "json"}).out);
    }
  }

  TEST_CASE("--out writes the report to a file") {
    const auto path = std::filesystem::temp_directory_path() / "gemkit_cli_out.json";
    const auto r = run({"report", "--catalog", "s4_2", "--m", "0", "--format", "json", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == slurp(kGolden / "report_s4_2_m0.json"));
    std::filesystem::remove(path);
  }
}
