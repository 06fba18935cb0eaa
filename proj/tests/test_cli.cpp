#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vfs/cli.hpp"
#include "vfs/family_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = vfs::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("table") {
  const auto csv = run({"table", "--format", "csv"});
  CHECK(csv.code == vfs::kExitOk);
  CHECK(csv.out ==
        "n,rho_R_4n,rho_C_2n,rho_H_n\n"
        "1,3,1,0\n2,7,1,0\n4,8,1,0\n6,7,1,0\n12,8,3,0\n24,9,3,1\n1440,15,5,2\n");

  const auto text = run({"table"});
  CHECK(text.code == 0);
  std::istringstream lines(text.out);
  std::string line;
  std::size_t width = 0;
  while (std::getline(lines, line)) {
    if (width == 0) width = line.size();
    CHECK(line.size() == width);
  }

  const auto json = nlohmann::json::parse(run({"table", "--n-list", "24", "--format", "json"}).out);
  CHECK(json.size() == 1);
  CHECK(json.dump().find("24") != std::string::npos);
}

TEST_CASE("rho") {
  const auto r = run({"rho", "--field", "c", "--n", "24", "--all-methods"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3") == 0);
  CHECK(run({"rho", "--field", "r", "--n", "16"}).out.find("8") == 0);
  CHECK(run({"rho", "--field", "h", "--n", "1440", "--method", "oracle"}).out.find("2") == 0);
  const auto range = nlohmann::json::parse(run({"rho", "--field", "h", "--range", "1:6", "--format", "json"}).out);
  CHECK(range.size() == 6);

  CHECK(run({"rho", "--field", "c", "--n", "0"}).code == vfs::kExitUsage);
  CHECK(run({"rho", "--field", "q", "--n", "4"}).code == vfs::kExitUsage);
  CHECK(run({"rho", "--field", "c", "--n", "4", "--method", "adams"}).code == vfs::kExitUsage);
  CHECK(run({"rho", "--field", "c"}).code == vfs::kExitUsage);
}

TEST_CASE("james") {
  const auto r = run({"james", "--field", "C", "--m", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j == nlohmann::json::parse(R"({"field":"C","m":2,"valuations":{"2":3,"3":1}})"));
  CHECK(run({"james", "--field", "C", "--m", "-1"}).code == vfs::kExitUsage);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "lemma7", "--m-max", "30"}).code == 0);
  CHECK(run({"verify", "theorem8", "--range", "1:500"}).code == 0);
  CHECK(run({"verify", "theorem9", "--range", "1:500"}).code == 0);
  CHECK(run({"verify", "ss73", "--range", "0:20"}).code == 0);
  CHECK(run({"verify", "aw-parity", "--range", "1:20"}).code == 0);
  CHECK(run({"verify", "corollary6", "--range", "1:500"}).code == 0);
  CHECK(run({"verify", "adams", "--range", "1:500"}).code == 0);
  CHECK(run({"verify", "identities", "--trials", "20"}).code == 0);
  CHECK(run({"verify", "nonsense"}).code == vfs::kExitUsage);
  CHECK(run({"verify", "theorem8", "--range", "9:1"}).code == vfs::kExitUsage);
}

TEST_CASE("determinism") {
  const std::vector<std::string> args{"verify", "identities", "--trials", "30", "--seed", "7", "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
  CHECK(run({"table"}).out == run({"table"}).out);
}

TEST_CASE("construct and check-family") {
  const auto ex = temp_file("vfs_cli_example4.json");
  const auto r = run({"construct", "example4", "--n", "2", "--output", ex.string()});
  CHECK(r.code == 0);
  const auto fam = vfs::read_family(ex);
  CHECK(fam.members.size() == 2);
  CHECK(fam.members[0].matrix == vfs::example4(2).members[0].matrix);

  const auto stdout_run = run({"construct", "example4", "--n", "2"});
  CHECK(stdout_run.code == 0);
  CHECK(stdout_run.out == vfs::format_family(vfs::example4(2)));

  CHECK(run({"construct", "example4", "--n", "3"}).code == vfs::kExitUsage);

  const auto none = run({"check-family", "--input", ex.string()});
  CHECK(none.code == 0);
  CHECK(none.out.find("sufficient") != std::string::npos);

  const auto c = run({"check-family", "--input", ex.string(), "--target", "C"});
  CHECK(c.code == vfs::kExitCounterexample);
  CHECK(c.out.find("fail") != std::string::npos);

  // {M1, -M1}: dependent at the first sample point.
  auto dep = vfs::example4(2);
  dep.members[1] = vfs::LinearField{"-M1", -dep.members[0].matrix};
  const auto dep_path = temp_file("vfs_cli_dependent.json");
  vfs::write_family(dep, dep_path);
  const auto d = run({"check-family", "--input", dep_path.string()});
  CHECK(d.code == vfs::kExitCounterexample);
  CHECK(d.out.find("point 0") != std::string::npos);

  const auto single = temp_file("vfs_cli_single.json");
  vfs::write_family(vfs::example4_complex(2), single);
  const auto lifted = temp_file("vfs_cli_lifted.json");
  CHECK(run({"construct", "lift", "--input", single.string(), "--direction", "C_to_R", "--output", lifted.string()})
            .code == 0);
  CHECK(vfs::read_family(lifted).members.size() == 2);
  CHECK(run({"construct", "lift", "--input", single.string(), "--direction", "H_to_R"}).code == vfs::kExitUsage);

  const auto bad = temp_file("vfs_cli_bad.json");
  {
    std::ofstream(bad) << "{ not json";
  }
  CHECK(run({"check-family", "--input", bad.string()}).code == vfs::kExitUsage);
  CHECK(run({"check-family", "--input", "/nonexistent/x.json"}).code == vfs::kExitUsage);

  for (const auto& p : {ex, dep_path, single, lifted, bad}) std::filesystem::remove(p);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == vfs::kExitUsage);
  CHECK(run({"frobnicate"}).code == vfs::kExitUsage);
  CHECK(run({"--help"}).code == vfs::kExitOk);
}
