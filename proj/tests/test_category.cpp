#include <catch_amalgamated.hpp>

#include <random>
#include <string>

#include "gcox/category.hpp"
#include "gcox/presentation.hpp"
#include "support/oracles.hpp"
#include "support/universal.hpp"

using gcox::ComplexRef;
using gcox::RawComplex;
using gcox::Weight;
using gcox::WeightedComplex;

namespace {
  ComplexRef ref(RawComplex const& raw) {
    return gcox::make_ref(WeightedComplex::from_raw(raw));
  }
  ComplexRef point() { return gcox::make_ref(WeightedComplex::point("p")); }
  ComplexRef empty() { return gcox::make_ref(WeightedComplex::empty()); }
  ComplexRef dihedral(std::uint64_t n, std::string u = "u", std::string v = "v") {
    return ref({{u, v}, {{u, v, Weight(n)}}, {}});
  }
  ComplexRef triangle() {
    return ref({{"a", "b", "c"},
                {{"a", "b", Weight(2)}, {"b", "c", Weight(3)}, {"a", "c", Weight::infinity()}},
                {{{"a", "b", "c"}, Weight(2)}}});
  }

  // True iff the named vertex map extends to an isomorphism.
  bool iso_via(ComplexRef a, ComplexRef b, gcox::VertexMap const& m) {
    try {
      return gcox::is_isomorphism(gcox::extend_from_vertex_map(a, b, m));
    } catch (gcox::Error const&) {
      return false;
    }
  }
}  // namespace

TEST_CASE("coproduct examples", "[category][coproduct]") {
  auto const u = gcox::disjoint_union({triangle(), empty()});
  CHECK(gcox::is_isomorphism(u.legs[0]));

  auto const two = gcox::disjoint_union({point(), point()});
  CHECK(two.object->vertices() == std::vector<std::string>{"0.p", "1.p"});
  CHECK(two.object->edges().empty());

  auto const d35 = gcox::disjoint_union({dihedral(3), dihedral(5, "x", "y")});
  auto const p   = gcox::presentation_of(*d35.object);
  std::vector<gcox::Relator> expected{{{"0.u"}, 2}, {{"0.v"}, 2}, {{"1.x"}, 2},
                                      {{"1.y"}, 2}, {{"0.u", "0.v"}, 3}, {{"1.x", "1.y"}, 5}};
  CHECK(p.relators == expected);

  auto const both = gcox::disjoint_union({point(), point()});
  std::vector<gcox::Morphism> const legs{gcox::identity(point()), gcox::identity(point())};
  auto const rho = gcox::factor_through(both, legs);
  CHECK(rho.named_vertex_map() == gcox::VertexMap{{"0.p", "p"}, {"1.p", "p"}});
}

TEST_CASE("coproduct is commutative and associative up to isomorphism", "[category][coproduct]") {
  auto const a  = triangle();
  auto const b  = dihedral(4);
  auto const ab = gcox::disjoint_union({a, b}).object;
  auto const ba = gcox::disjoint_union({b, a}).object;
  gcox::VertexMap swap;
  for (auto const& v : a->vertices()) {
    swap["0." + v] = "1." + v;
  }
  for (auto const& v : b->vertices()) {
    swap["1." + v] = "0." + v;
  }
  CHECK(iso_via(ab, ba, swap));

  auto const c     = dihedral(6, "x", "y");
  auto const left  = gcox::disjoint_union({gcox::disjoint_union({a, b}).object, c}).object;
  auto const right = gcox::disjoint_union({a, gcox::disjoint_union({b, c}).object}).object;
  gcox::VertexMap assoc;
  for (auto const& v : a->vertices()) {
    assoc["0.0." + v] = "0." + v;
  }
  for (auto const& v : b->vertices()) {
    assoc["0.1." + v] = "1.0." + v;
  }
  for (auto const& v : c->vertices()) {
    assoc["1." + v] = "1.1." + v;
  }
  CHECK(iso_via(left, right, assoc));
}

TEST_CASE("strong product examples", "[category][product]") {
  SECTION("K2(2) x K2(3)") {
    auto const p = gcox::strong_product(
        {ref({{"a", "b"}, {{"a", "b", Weight(2)}}, {}}),
         ref({{"x", "y"}, {{"x", "y", Weight(3)}}, {}})});
    CHECK(p.object->num_vertices() == 4);
    std::map<std::string, int> weights;
    for (auto const& e : p.object->edges()) {
      ++weights[e.weight.to_string()];
    }
    CHECK(weights == std::map<std::string, int>{{"2", 2}, {"3", 2}, {"6", 2}});
  }
  SECTION("unit and zero") {
    auto const c = triangle();
    auto const p = gcox::strong_product({c, point()});
    CHECK(gcox::is_isomorphism(p.legs[0]));
    CHECK(gcox::strong_product({c, empty()}).object->num_vertices() == 0);
  }
  SECTION("cone (id, collapse) factors through an isomorphism") {
    auto const                        d3 = dihedral(3);
    auto const                        p  = gcox::strong_product({d3, point()});
    std::vector<gcox::Morphism> const legs{
        gcox::identity(d3),
        gcox::extend_from_vertex_map(d3, point(), {{"u", "p"}, {"v", "p"}})};
    auto const rho = gcox::factor_through(p, legs);
    CHECK(gcox::is_isomorphism(rho));
    CHECK(gcox::compose(p.legs[0], rho) == gcox::identity(d3));
  }
  SECTION("commutativity up to the coordinate swap") {
    auto const a  = triangle();
    auto const b  = dihedral(2, "x", "y");
    auto const ab = gcox::strong_product({a, b}).object;
    auto const ba = gcox::strong_product({b, a}).object;
    gcox::VertexMap swap;
    for (auto const& v : a->vertices()) {
      for (auto const& w : b->vertices()) {
        swap["(" + v + "," + w + ")"] = "(" + w + "," + v + ")";
      }
    }
    CHECK(iso_via(ab, ba, swap));
  }
  SECTION("products of cells are valid and project by morphisms") {
    auto const t = triangle();
    for (auto const& parts : {std::vector<ComplexRef>{t, t},
                              std::vector<ComplexRef>{t, dihedral(2)},
                              std::vector<ComplexRef>{t, t, point()}}) {
      auto const p = gcox::strong_product(parts);
      CHECK(gcox::validate(*p.object).ok());
      for (std::size_t j = 0; j < parts.size(); ++j) {
        CHECK(oracle::is_morphism(p.object->to_raw(), parts[j]->to_raw(),
                                  p.legs[j].named_vertex_map()));
      }
    }
  }
}

TEST_CASE("equalizer examples", "[category][equalizer]") {
  auto const src = ref({{"u", "w"}, {}, {}});
  auto const tgt = ref({{"x", "y"}, {}, {}});
  auto const phi = gcox::extend_from_vertex_map(src, tgt, {{"u", "x"}, {"w", "y"}});
  auto const psi = gcox::extend_from_vertex_map(src, tgt, {{"u", "x"}, {"w", "x"}});
  auto const e   = gcox::equalizer(phi, psi);
  CHECK(e.object->vertices() == std::vector<std::string>{"u"});

  auto const same = gcox::equalizer(phi, phi);
  CHECK(*same.object == *src);
  CHECK(gcox::is_isomorphism(same.legs[0]));
  auto const id_src = gcox::identity(src);
  CHECK(gcox::factor_through(same, id_src).named_vertex_map() == id_src.named_vertex_map());

  auto const path = ref({{"a", "b"}, {{"a", "b", Weight(2)}}, {}});
  auto const k    = ref({{"p", "q", "r"}, {{"p", "q", Weight(2)}, {"p", "r", Weight(2)}}, {}});
  auto const f    = gcox::extend_from_vertex_map(path, k, {{"a", "p"}, {"b", "q"}});
  auto const g    = gcox::extend_from_vertex_map(path, k, {{"a", "p"}, {"b", "r"}});
  auto const eab  = gcox::equalizer(f, g);
  CHECK(*eab.object == WeightedComplex::point("a"));
}

TEST_CASE("coequalizer examples", "[category][coequalizer]") {
  auto const same = gcox::coequalizer(gcox::identity(triangle()), gcox::identity(triangle()));
  CHECK(*same.object == *triangle());

  auto const ab  = ref({{"a", "b"}, {}, {}});
  auto const phi = gcox::extend_from_vertex_map(point(), ab, {{"p", "a"}});
  auto const psi = gcox::extend_from_vertex_map(point(), ab, {{"p", "b"}});
  CHECK(*gcox::coequalizer(phi, psi).object == WeightedComplex::point("a"));

  auto const edge = ref({{"a", "b"}, {{"a", "b", Weight(2)}}, {}});
  auto const f    = gcox::extend_from_vertex_map(point(), edge, {{"p", "a"}});
  auto const g    = gcox::extend_from_vertex_map(point(), edge, {{"p", "b"}});
  CHECK_THROWS_WITH(gcox::coequalizer(f, g, gcox::QuotientMode::strict),
                    Catch::Matchers::ContainsSubstring("loop"));
  CHECK(*gcox::coequalizer(f, g, gcox::QuotientMode::lax).object
        == WeightedComplex::point("a"));
}

TEST_CASE("factorization hypotheses are checked", "[category]") {
  auto const ab  = ref({{"a", "b"}, {}, {}});
  auto const phi = gcox::extend_from_vertex_map(point(), ab, {{"p", "a"}});
  auto const psi = gcox::extend_from_vertex_map(point(), ab, {{"p", "b"}});
  auto const e   = gcox::equalizer(phi, psi);
  try {
    gcox::factor_through(e, gcox::identity(point()));
    FAIL("expected an exception");
  } catch (gcox::Error const& err) {
    CHECK(err.kind() == gcox::ErrorKind::universal_property);
  }
  auto const q = gcox::coequalizer(phi, psi);
  CHECK_THROWS_AS(gcox::factor_through(q, gcox::identity(ab)), gcox::Error);
}

TEST_CASE("adjunction between free complexes and vertex sets", "[category][adjunction]") {
  CHECK(gcox::free_complex({}) == WeightedComplex::empty());
  auto const k    = ref({{"p", "q"}, {{"p", "q", Weight(2)}}, {}});
  auto const fc   = gcox::make_ref(gcox::free_complex({"x", "y"}));
  auto const homs = gcox::morphisms_between(fc, k);
  REQUIRE(homs.size() == 4);
  for (auto const& m : homs) {
    auto const f = gcox::adjunction_transpose(m);
    CHECK(gcox::adjunction_inverse({"x", "y"}, k, f) == m);
    CHECK(gcox::adjunction_transpose(gcox::adjunction_inverse({"x", "y"}, k, f)) == f);
  }
  CHECK_THROWS_AS(gcox::adjunction_transpose(gcox::identity(k)), gcox::Error);

  // Naturality in the target: transpose(g . m) = V(g) . transpose(m).
  auto const collapse = gcox::extend_from_vertex_map(k, point(), {{"p", "p"}, {"q", "p"}});
  for (auto const& m : homs) {
    auto const lhs = gcox::adjunction_transpose(gcox::compose(collapse, m));
    gcox::VertexMap rhs;
    for (auto const& [x, y] : gcox::adjunction_transpose(m)) {
      rhs[x] = gcox::underlying_map(collapse).at(y);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("universal properties on random small complexes", "[category][property]") {
  std::mt19937_64       rng(2024);
  oracle::RandomOptions small;
  small.max_vertices = 3;
  oracle::RandomOptions tiny;
  tiny.max_vertices = 2;
  for (int trial = 0; trial < 25; ++trial) {
    auto const a = ref(oracle::random_raw_complex(rng, small));
    auto const b = ref(oracle::random_raw_complex(rng, tiny));
    auto const x = ref(oracle::random_raw_complex(rng, small));
    auto const cop = universal::coproduct(a, b, x);
    CHECK(cop.failure == "");
    auto const prod = universal::product(a, b, x);
    CHECK(prod.failure == "");
    auto const homs = gcox::morphisms_between(a, x);
    if (homs.size() >= 2) {
      auto const eq = universal::equalizer(homs.front(), homs.back(), b);
      CHECK(eq.failure == "");
      auto const co = universal::coequalizer(homs.front(), homs.back(), b);
      CHECK(co.failure == "");
    }
  }
}
