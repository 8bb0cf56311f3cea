#include <catch_amalgamated.hpp>

#include <random>
#include <string>

#include "gcox/quotient.hpp"
#include "support/oracles.hpp"

using gcox::QuotientMode;
using gcox::RawComplex;
using gcox::VertexPartition;
using gcox::Weight;
using gcox::WeightedComplex;

namespace {
  gcox::ComplexRef ref(RawComplex const& raw) {
    return gcox::make_ref(WeightedComplex::from_raw(raw));
  }

  gcox::ComplexRef path(std::uint64_t w1, std::uint64_t w2) {
    return ref({{"a", "b", "c"}, {{"a", "b", Weight(w1)}, {"b", "c", Weight(w2)}}, {}});
  }
}  // namespace

TEST_CASE("collapsing a discrete complex to a point", "[quotient]") {
  auto const c = ref({{"a", "b", "c"}, {}, {}});
  auto const q = gcox::quotient(c, VertexPartition::from_blocks(*c, {{"a", "b", "c"}}),
                                QuotientMode::strict);
  CHECK(*q.complex == WeightedComplex::point("a"));
  CHECK(q.projection.named_vertex_map()
        == gcox::VertexMap{{"a", "a"}, {"b", "a"}, {"c", "a"}});
}

TEST_CASE("merged edges take the gcd of their weights", "[quotient]") {
  auto const c = path(4, 6);
  auto const p = VertexPartition::from_blocks(*c, {{"a", "c"}, {"b"}});
  auto const q = gcox::quotient(c, p, QuotientMode::strict);
  CHECK(q.complex->vertices() == std::vector<std::string>{"a", "b"});
  REQUIRE(q.complex->edges().size() == 1);
  CHECK(q.complex->edges()[0].weight == Weight(2));
}

TEST_CASE("gcd-1 merge is rejected in both modes", "[quotient]") {
  auto const c = path(3, 5);
  auto const p = VertexPartition::from_blocks(*c, {{"a", "c"}, {"b"}});
  for (auto mode : {QuotientMode::strict, QuotientMode::lax}) {
    try {
      gcox::quotient(c, p, mode);
      FAIL("expected an exception");
    } catch (gcox::Error const& e) {
      CHECK(e.kind() == gcox::ErrorKind::degenerate_quotient);
      CHECK(std::string(e.what()).find("merged edge weight 1 violates weight axiom")
            != std::string::npos);
    }
  }
}

TEST_CASE("loops: strict rejects, lax collapses", "[quotient]") {
  auto const c = ref({{"a", "b"}, {{"a", "b", Weight(2)}}, {}});
  auto const p = VertexPartition::from_blocks(*c, {{"a", "b"}});
  CHECK_THROWS_WITH(gcox::quotient(c, p, QuotientMode::strict),
                    Catch::Matchers::ContainsSubstring("loop"));
  auto const q = gcox::quotient(c, p, QuotientMode::lax);
  CHECK(*q.complex == WeightedComplex::point("a"));
}

TEST_CASE("cells in quotients", "[quotient]") {
  auto const tri = ref({{"a", "b", "c"},
                        {{"a", "b", Weight(2)}, {"b", "c", Weight(2)}, {"a", "c", Weight(2)}},
                        {{{"a", "b", "c"}, Weight(2)}}});
  SECTION("collapse to one vertex is lax only") {
    auto const p = VertexPartition::from_blocks(*tri, {{"a", "b", "c"}});
    CHECK_THROWS_AS(gcox::quotient(tri, p, QuotientMode::strict), gcox::Error);
    auto const q = gcox::quotient(tri, p, QuotientMode::lax);
    CHECK(*q.complex == WeightedComplex::point("a"));
    CHECK(q.projection.cell_image(0).kind == gcox::Morphism::ImageKind::vertex);
  }
  SECTION("collapse to length 2 fails even in lax mode") {
    auto const p = VertexPartition::from_blocks(*tri, {{"a", "b"}, {"c"}});
    CHECK_THROWS_WITH(gcox::quotient(tri, p, QuotientMode::lax),
                      Catch::Matchers::ContainsSubstring("length 2"));
  }
  SECTION("identified triangles merge with gcd weight") {
    auto const two = ref({{"a", "b", "c", "d", "e", "f"},
                          {{"a", "b", Weight(2)}, {"b", "c", Weight(2)}, {"a", "c", Weight(2)},
                           {"d", "e", Weight(2)}, {"e", "f", Weight(2)}, {"d", "f", Weight(2)}},
                          {{{"a", "b", "c"}, Weight(4)}, {{"d", "e", "f"}, Weight(6)}}});
    auto const p = VertexPartition::from_blocks(*two, {{"a", "d"}, {"b", "e"}, {"c", "f"}});
    auto const q = gcox::quotient(two, p, QuotientMode::strict);
    REQUIRE(q.complex->cells().size() == 1);
    CHECK(q.complex->cells()[0].weight == Weight(2));
  }
}

TEST_CASE("partition validation", "[quotient]") {
  auto const c = path(2, 2);
  CHECK_THROWS_AS(VertexPartition::from_blocks(*c, {{"a"}, {"b"}}), gcox::Error);
  CHECK_THROWS_AS(VertexPartition::from_blocks(*c, {{"a", "b"}, {"b", "c"}}), gcox::Error);
  CHECK_THROWS_AS(VertexPartition::from_blocks(*c, {{"a", "b", "c"}, {}}), gcox::Error);
  CHECK_THROWS_AS(VertexPartition::from_blocks(*c, {{"a", "b", "z"}, {"c"}}), gcox::Error);
}

TEST_CASE("random quotients are valid and project by morphisms", "[quotient][property]") {
  std::mt19937_64 rng(5);
  int             succeeded = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto const                                 c = ref(oracle::random_raw_complex(rng));
    std::vector<std::size_t>                   labels;
    std::uniform_int_distribution<std::size_t> pick(0, 2);
    for (std::size_t v = 0; v < c->num_vertices(); ++v) {
      labels.push_back(pick(rng));
    }
    auto const partition = VertexPartition::from_labels(labels);
    CHECK(*gcox::quotient(c, VertexPartition::discrete(*c), QuotientMode::strict).complex == *c);
    for (auto mode : {QuotientMode::strict, QuotientMode::lax}) {
      try {
        auto const q = gcox::quotient(c, partition, mode);
        CHECK(gcox::validate(*q.complex).ok());
        CHECK(oracle::is_morphism(c->to_raw(), q.complex->to_raw(),
                                  q.projection.named_vertex_map()));
        ++succeeded;
      } catch (gcox::Error const& e) {
        CHECK(e.kind() == gcox::ErrorKind::degenerate_quotient);
      }
    }
  }
  CHECK(succeeded > 50);
}
