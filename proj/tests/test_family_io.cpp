#include "doctest.h"

#include <filesystem>

#include "vfs/family_io.hpp"

using vfs::FieldTag;

namespace {

const char* kExample = R"({ "space_dim": 4, "claimed_field": "R", "fields": [ { "name": "M1", "matrix": [["0","0","-1","0"],["0","0","0","1"],["1","0","0","0"],["0","-1","0","0"]] } ] })";

bool same(const vfs::FieldFamily& a, const vfs::FieldFamily& b) {
  if (a.dim != b.dim || a.claimed_field != b.claimed_field || a.members.size() != b.members.size()) return false;
  for (std::size_t l = 0; l < a.members.size(); ++l) {
    if (a.members[l].name != b.members[l].name || a.members[l].matrix != b.members[l].matrix) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("documented example file parses to the first explicit complex field") {
  const auto fam = vfs::parse_family(kExample);
  CHECK(fam.dim == 4);
  CHECK(fam.claimed_field == FieldTag::R);
  REQUIRE(fam.members.size() == 1);
  CHECK(fam.members[0].name == "M1");
  CHECK(fam.members[0].matrix == vfs::example4(2).members[0].matrix);
}

TEST_CASE("round trip") {
  auto fam = vfs::example4(4);
  fam.members[1].matrix(0, 0) = vfs::Rational(-3, 7);
  const auto text = vfs::format_family(fam);
  CHECK(text.find("\"-3/7\"") != std::string::npos);
  CHECK(same(vfs::parse_family(text), fam));
  CHECK(vfs::format_family(vfs::parse_family(text)) == text);

  const auto path = std::filesystem::temp_directory_path() / "vfs_family_io_roundtrip.json";
  vfs::write_family(fam, path);
  CHECK(same(vfs::read_family(path), fam));
  std::filesystem::remove(path);
}

TEST_CASE("entries normalize and integers are accepted") {
  const auto fam = vfs::parse_family(
      R"({"space_dim":2,"claimed_field":"c","fields":[{"name":"A","matrix":[["0","-2/2"],[1,"0"]]}]})");
  CHECK(fam.claimed_field == FieldTag::C);
  CHECK(fam.members[0].matrix(0, 1) == -1);
  CHECK(fam.members[0].matrix(1, 0) == 1);
}

TEST_CASE("malformed input") {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"claimed_field":"R","fields":[]})",
      R"({"space_dim":0,"claimed_field":"R","fields":[{"matrix":[]}]})",
      R"({"space_dim":2,"claimed_field":"Q","fields":[{"matrix":[["0","1"],["-1","0"]]}]})",
      R"({"space_dim":2,"claimed_field":"R","fields":[]})",
      R"({"space_dim":2,"claimed_field":"R","fields":[{"matrix":[["0","1"]]}]})",
      R"({"space_dim":2,"claimed_field":"R","fields":[{"matrix":[["0","1"],["-1"]]}]})",
      R"({"space_dim":2,"claimed_field":"R","fields":[{"matrix":[["0","1/0"],["-1","0"]]}]})",
      R"({"space_dim":2,"claimed_field":"R","fields":[{"matrix":[["0",0.5],["-1","0"]]}]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(vfs::parse_family(text), vfs::DomainError);
  }
  CHECK_THROWS_AS(vfs::read_family("/nonexistent/vfs/file.json"), vfs::DomainError);
}
