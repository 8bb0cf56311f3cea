// Builds each categorical construction on small complexes and factors a
// morphism through it.

#include <cstdio>
#include <string>
#include <vector>

#include "gcox.hpp"

namespace {

  std::string describe(gcox::WeightedComplex const& c) {
    std::string out = "{";
    for (std::size_t i = 0; i < c.vertices().size(); ++i) {
      out += (i ? " " : "") + c.vertices()[i];
    }
    return out + "} " + std::to_string(c.edges().size()) + " edges, "
           + std::to_string(c.cells().size()) + " cells";
  }

  std::string describe(gcox::VertexMap const& m) {
    std::string out;
    for (auto const& [from, to] : m) {
      out += (out.empty() ? "" : ", ") + from + " -> " + to;
    }
    return "[" + out + "]";
  }

}  // namespace

int main() {
  using gcox::make_ref;
  namespace family = gcox::family;

  auto const d4 = make_ref(family::dihedral(gcox::Weight(4)));
  auto const d2 = make_ref(family::dihedral(gcox::Weight(2)));
  auto const pt = make_ref(family::point());

  auto const sum = gcox::disjoint_union({d4, pt});
  std::printf("coproduct D4 + point:  %s\n", describe(*sum.object).c_str());
  std::vector<gcox::Morphism> const to_d2{
      gcox::extend_from_vertex_map(d4, d2, {{"u", "u"}, {"v", "v"}}),
      gcox::extend_from_vertex_map(pt, d2, {{"v", "u"}})};
  std::printf("  copairing into D2:   %s\n",
              describe(gcox::factor_through(sum, to_d2).named_vertex_map()).c_str());

  auto const prod = gcox::strong_product({d2, d2});
  std::printf("product D2 x D2:       %s\n", describe(*prod.object).c_str());

  auto const swap = gcox::extend_from_vertex_map(d4, d4, {{"u", "v"}, {"v", "u"}});
  auto const id   = gcox::identity(d4);
  auto const eq   = gcox::equalizer(swap, id);
  std::printf("equalizer(swap, id):   %s\n", describe(*eq.object).c_str());

  auto const coeq = gcox::coequalizer(swap, id, gcox::QuotientMode::lax);
  std::printf("coequalizer(swap, id): %s\n", describe(*coeq.object).c_str());
  try {
    gcox::coequalizer(swap, id, gcox::QuotientMode::strict);
  } catch (gcox::Error const& e) {
    std::printf("  strict mode:         %s: %s\n", std::string(gcox::to_string(e.kind())).c_str(), e.what());
  }

  auto const hom = gcox::morphisms_between(d4, d2);
  std::printf("|Hom(D4, D2)| = %zu\n", hom.size());
  for (auto const& m : hom) {
    std::printf("  %s\n", describe(m.named_vertex_map()).c_str());
  }
}
