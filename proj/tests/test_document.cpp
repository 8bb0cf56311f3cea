#include <catch_amalgamated.hpp>

#include <random>
#include <string>

#include "gcox/document.hpp"
#include "gcox/families.hpp"
#include "support/oracles.hpp"

using gcox::Weight;
using gcox::WeightedComplex;

TEST_CASE("canonical serialization", "[document]") {
  CHECK(gcox::serialize(WeightedComplex::point("v"))
        == R"({"vertices":["v"],"edges":[],"cells":[]})");
  CHECK(gcox::serialize(gcox::family::dihedral(Weight::infinity()))
        == R"({"vertices":["u","v"],"edges":[["u","v","inf"]],"cells":[]})");
  CHECK(gcox::serialize(gcox::family::gvp(3))
        == R"({"vertices":["s1_2","s1_3","s2_3"],)"
           R"("edges":[["s1_2","s1_3","inf"],["s1_2","s2_3","inf"],["s1_3","s2_3","inf"]],)"
           R"("cells":[{"boundary":["s1_2","s1_3","s2_3"],"weight":2}]})");
}

TEST_CASE("parse and serialize roundtrip", "[document]") {
  auto const g4 = gcox::family::gvp(4);
  CHECK(gcox::parse_complex(gcox::serialize(g4)) == g4);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto const c    = WeightedComplex::from_raw(oracle::random_raw_complex(rng));
    auto const text = gcox::serialize(c);
    CHECK(gcox::parse_complex(text) == c);
    CHECK(gcox::serialize(gcox::parse_complex(text)) == text);
    CHECK(gcox::is_canonical(gcox::parse_raw_complex(text)));
  }
}

TEST_CASE("equal complexes give identical documents", "[document]") {
  auto const a = gcox::parse_complex(
      R"({"vertices":["c","a","b"],"edges":[["b","a",3],["c","b",3],["a","c",2]],)"
      R"("cells":[{"boundary":["c","b","a"],"weight":2}]})");
  auto const b = gcox::parse_complex(
      R"({"vertices":["a","b","c"],"edges":[["a","b",3],["a","c",2],["b","c",3]],)"
      R"("cells":[{"boundary":["a","b","c"],"weight":2}]})");
  CHECK(gcox::serialize(a) == gcox::serialize(b));
  CHECK_FALSE(gcox::is_canonical(gcox::parse_raw_complex(
      R"({"vertices":["b","a"],"edges":[],"cells":[]})")));
}

TEST_CASE("document errors", "[document]") {
  auto parse_error = [](std::string const& text) -> std::string {
    try {
      gcox::parse_complex(text);
    } catch (gcox::Error const& e) {
      CHECK(e.kind() == gcox::ErrorKind::parse);
      return e.what();
    }
    FAIL("expected a parse error");
    return "";
  };
  CHECK_THAT(parse_error(R"({"vertices":["a"],"edges":[["a","a",2]],"cells":[]})"),
             Catch::Matchers::ContainsSubstring("loop"));
  CHECK_THAT(parse_error("{\"vertices\":[\n\"a\",,]}"),
             Catch::Matchers::ContainsSubstring("line 2, column 5"));
  CHECK_THAT(parse_error(R"({"vertices":[],"edges":[]})"),
             Catch::Matchers::ContainsSubstring("missing key \"cells\""));
  CHECK_THAT(parse_error(R"({"vertices":[],"edges":[],"cells":[],"x":1})"),
             Catch::Matchers::ContainsSubstring("unexpected key"));
  CHECK_THAT(parse_error(R"({"vertices":["a","b"],"edges":[["a","b",0]],"cells":[]})"),
             Catch::Matchers::ContainsSubstring("weight"));
  CHECK_THAT(parse_error(R"({"vertices":["a","b"],"edges":[["a","b",1]],"cells":[]})"),
             Catch::Matchers::ContainsSubstring("edge weight"));
  CHECK_THAT(parse_error(R"({"vertices":["a","b"],"edges":[["a","b",-2]],"cells":[]})"),
             Catch::Matchers::ContainsSubstring("weight"));
  CHECK_THAT(parse_error(R"({"vertices":[1],"edges":[],"cells":[]})"),
             Catch::Matchers::ContainsSubstring("vertices[0]"));
  CHECK_THAT(parse_error(R"({"vertices":["a","b","c"],"edges":[["a","b",2],["b","c",2],)"
                         R"(["a","c",2]],"cells":[{"boundary":["a","b","c"],"weight":"inf"}]})"),
             Catch::Matchers::ContainsSubstring("finite"));
}

TEST_CASE("vertex map documents", "[document]") {
  auto const m = gcox::parse_vertex_map(R"({"map":{"u":"x","v":"y"}})");
  CHECK(m == gcox::VertexMap{{"u", "x"}, {"v", "y"}});
  CHECK(gcox::parse_vertex_map(gcox::serialize_vertex_map(m)) == m);
  CHECK_THROWS_AS(gcox::parse_vertex_map(R"({"u":"x"})"), gcox::Error);
  CHECK_THROWS_AS(gcox::parse_vertex_map(R"({"map":{"u":1}})"), gcox::Error);
}
