#ifndef GCOX_MORPHISM_HPP_
#define GCOX_MORPHISM_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcox/complex.hpp"
#include "gcox/cycle.hpp"
#include "gcox/errors.hpp"
#include "gcox/weight.hpp"

namespace gcox {

  using VertexMap = std::map<std::string, std::string>;

  class Morphism;

  namespace detail {
    inline std::optional<Morphism> try_extend(ComplexRef               source,
                                       ComplexRef               target,
                                       std::vector<VertexIndex> vmap,
                                       std::string*             why);
  }

  // A morphism of weighted 2-complexes. Only the vertex map is stored as
  // input; edge and cell images are derived from it on construction, and a
  // Morphism value exists only if every axiom (incidence, boundary
  // compatibility, weight divisibility) holds.
  class Morphism {
   public:
    enum class ImageKind : std::uint8_t { vertex, edge, cell };

    struct Image {
      ImageKind   kind;
      std::size_t index;

      friend bool operator==(Image const&, Image const&) = default;
    };

    WeightedComplex const& source() const noexcept { return *_source; }
    WeightedComplex const& target() const noexcept { return *_target; }
    ComplexRef const&      source_ref() const noexcept { return _source; }
    ComplexRef const&      target_ref() const noexcept { return _target; }

    std::vector<VertexIndex> const& vertex_map() const noexcept {
      return _vertex_map;
    }

    VertexIndex operator()(VertexIndex v) const { return _vertex_map.at(v); }

    Image edge_image(std::size_t e) const { return _edge_map.at(e); }
    Image cell_image(std::size_t f) const { return _cell_map.at(f); }

    VertexMap named_vertex_map() const {
      VertexMap out;
      for (std::size_t v = 0; v < _vertex_map.size(); ++v) {
        out.emplace(_source->name(static_cast<VertexIndex>(v)),
                    _target->name(_vertex_map[v]));
      }
      return out;
    }

    // Equal vertex maps between equal complexes give equal morphisms.
    friend bool operator==(Morphism const& x, Morphism const& y) {
      return x._vertex_map == y._vertex_map
             && (x._source == y._source || *x._source == *y._source)
             && (x._target == y._target || *x._target == *y._target);
    }

   private:
    friend std::optional<Morphism> detail::try_extend(ComplexRef,
                                                      ComplexRef,
                                                      std::vector<VertexIndex>,
                                                      std::string*);
    Morphism() = default;

    ComplexRef               _source;
    ComplexRef               _target;
    std::vector<VertexIndex> _vertex_map;
    std::vector<Image>       _edge_map;
    std::vector<Image>       _cell_map;
  };

  namespace detail {
    inline bool same_complex(ComplexRef const& a, ComplexRef const& b) {
      return a == b || *a == *b;
    }

    inline std::string names_of(WeightedComplex const&          c,
                                std::span<VertexIndex const> seq) {
      std::vector<std::string> names;
      for (VertexIndex v : seq) {
        names.push_back(c.name(v));
      }
      return describe_sequence(names);
    }

    inline std::optional<Morphism> try_extend(ComplexRef               source,
                                              ComplexRef               target,
                                              std::vector<VertexIndex> vmap,
                                              std::string*             why) {
      auto fail = [&](std::string msg) -> std::optional<Morphism> {
        if (why != nullptr) {
          *why = std::move(msg);
        }
        return std::nullopt;
      };
      WeightedComplex const& src = *source;
      WeightedComplex const& tgt = *target;
      if (vmap.size() != src.num_vertices()) {
        return fail("vertex map is not total on the source");
      }
      for (VertexIndex v : vmap) {
        if (v >= tgt.num_vertices()) {
          return fail("vertex map leaves the target vertex set");
        }
      }

      Morphism m;
      m._edge_map.reserve(src.edges().size());
      for (auto const& e : src.edges()) {
        VertexIndex const x = vmap[e.a];
        VertexIndex const y = vmap[e.b];
        if (x == y) {
          m._edge_map.push_back({Morphism::ImageKind::vertex, x});
          continue;
        }
        auto const target_edge = tgt.find_edge(x, y);
        std::string const where = describe_edge(src.name(e.a), src.name(e.b));
        if (!target_edge) {
          return fail("missing target edge "
                      + describe_edge(tgt.name(x), tgt.name(y)) + " for "
                      + where);
        }
        Weight const tw = tgt.edges()[*target_edge].weight;
        if (!divides(tw, e.weight)) {
          return fail(where + ": " + e.weight.to_string()
                      + " not divisible by " + tw.to_string());
        }
        m._edge_map.push_back({Morphism::ImageKind::edge, *target_edge});
      }

      m._cell_map.reserve(src.cells().size());
      std::vector<VertexIndex> walk;
      for (auto const& f : src.cells()) {
        walk.clear();
        for (VertexIndex v : f.boundary) {
          walk.push_back(vmap[v]);
        }
        auto const image
            = compress_closed_walk(std::span<VertexIndex const>(walk));
        std::string const where = "cell " + names_of(src, f.boundary);
        if (image.size() == 1) {
          m._cell_map.push_back({Morphism::ImageKind::vertex, image.front()});
          continue;
        }
        if (image.size() < 3) {
          return fail(where + ": image collapses to a boundary of length "
                      + std::to_string(image.size()));
        }
        if (has_repeats(std::span<VertexIndex const>(image))) {
          return fail(where + ": image " + names_of(tgt, image)
                      + " is not a cycle");
        }
        auto const canonical = canonical_dihedral_form(image);
        auto const target_cell
            = tgt.find_cell(std::span<VertexIndex const>(canonical));
        if (!target_cell) {
          return fail(where + ": image " + names_of(tgt, canonical)
                      + " is not a cell boundary in the target");
        }
        Weight const tw = tgt.cells()[*target_cell].weight;
        if (!divides(tw, f.weight)) {
          return fail(where + ": " + f.weight.to_string()
                      + " not divisible by " + tw.to_string());
        }
        m._cell_map.push_back({Morphism::ImageKind::cell, *target_cell});
      }
      m._source     = std::move(source);
      m._target     = std::move(target);
      m._vertex_map = std::move(vmap);
      return m;
    }
  }  // namespace detail

  // Throws Error(morphism) naming the first element that cannot be mapped.
  inline Morphism extend_from_vertex_map(ComplexRef               source,
                                         ComplexRef               target,
                                         std::vector<VertexIndex> vmap) {
    std::string why;
    auto        m = detail::try_extend(
        std::move(source), std::move(target), std::move(vmap), &why);
    if (!m) {
      throw Error(ErrorKind::morphism, why);
    }
    return std::move(*m);
  }

  inline Morphism extend_from_vertex_map(ComplexRef       source,
                                         ComplexRef       target,
                                         VertexMap const& named) {
    std::vector<VertexIndex> vmap;
    for (auto const& v : source->vertices()) {
      auto it = named.find(v);
      if (it == named.end()) {
        throw Error(ErrorKind::morphism, "vertex map misses '" + v + "'");
      }
      auto const img = target->find_vertex(it->second);
      if (!img) {
        throw Error(ErrorKind::morphism,
                    "vertex map sends '" + v + "' to unknown vertex '"
                        + it->second + "'");
      }
      vmap.push_back(*img);
    }
    for (auto const& [from, to] : named) {
      if (!source->find_vertex(from)) {
        throw Error(ErrorKind::morphism,
                    "vertex map mentions unknown source vertex '" + from
                        + "'");
      }
    }
    return extend_from_vertex_map(
        std::move(source), std::move(target), std::move(vmap));
  }

  inline Morphism identity(ComplexRef c) {
    std::vector<VertexIndex> vmap(c->num_vertices());
    for (std::size_t i = 0; i < vmap.size(); ++i) {
      vmap[i] = static_cast<VertexIndex>(i);
    }
    return extend_from_vertex_map(c, c, std::move(vmap));
  }

  // g after f.
  inline Morphism compose(Morphism const& g, Morphism const& f) {
    if (!detail::same_complex(f.target_ref(), g.source_ref())) {
      throw Error(ErrorKind::morphism,
                  "cannot compose: target of the first morphism is not the "
                  "source of the second");
    }
    std::vector<VertexIndex> vmap;
    vmap.reserve(f.vertex_map().size());
    for (VertexIndex v : f.vertex_map()) {
      vmap.push_back(g(v));
    }
    return extend_from_vertex_map(f.source_ref(), g.target_ref(), std::move(vmap));
  }

  // Vertex bijection with every edge and cell sent to an edge or cell of the
  // same weight, bijectively.
  inline bool is_isomorphism(Morphism const& m) {
    auto const& s = m.source();
    auto const& t = m.target();
    if (s.num_vertices() != t.num_vertices()
        || s.edges().size() != t.edges().size()
        || s.cells().size() != t.cells().size()) {
      return false;
    }
    std::vector<bool> hit(t.num_vertices(), false);
    for (VertexIndex v : m.vertex_map()) {
      if (hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    std::vector<bool> edge_hit(t.edges().size(), false);
    for (std::size_t e = 0; e < s.edges().size(); ++e) {
      auto const img = m.edge_image(e);
      if (img.kind != Morphism::ImageKind::edge || edge_hit[img.index]
          || t.edges()[img.index].weight != s.edges()[e].weight) {
        return false;
      }
      edge_hit[img.index] = true;
    }
    std::vector<bool> cell_hit(t.cells().size(), false);
    for (std::size_t f = 0; f < s.cells().size(); ++f) {
      auto const img = m.cell_image(f);
      if (img.kind != Morphism::ImageKind::cell || cell_hit[img.index]
          || t.cells()[img.index].weight != s.cells()[f].weight) {
        return false;
      }
      cell_hit[img.index] = true;
    }
    return true;
  }

  constexpr std::uint64_t default_hom_bound = 1'000'000;

  // Number of vertex maps source -> target, saturating at UINT64_MAX.
  inline std::uint64_t vertex_map_count(WeightedComplex const& source,
                                        WeightedComplex const& target) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < source.num_vertices(); ++i) {
      if (__builtin_mul_overflow(count, target.num_vertices(), &count)) {
        return UINT64_MAX;
      }
    }
    return count;
  }

  // All morphisms source -> target in lexicographic order of vertex maps.
  // Vertex maps are assigned in index order and pruned as soon as an edge
  // between assigned vertices has no admissible image; full assignments are
  // then filtered through extend_from_vertex_map. Throws
  // Error(bound_exceeded) if there are more than `bound` vertex maps.
  inline std::vector<Morphism>
  morphisms_between(ComplexRef    source,
                    ComplexRef    target,
                    std::uint64_t bound = default_hom_bound) {
    WeightedComplex const& src   = *source;
    WeightedComplex const& tgt   = *target;
    std::uint64_t const    count = vertex_map_count(src, tgt);
    if (count > bound) {
      throw Error(ErrorKind::bound_exceeded,
                  "Hom-set enumeration needs more than "
                      + std::to_string(bound) + " vertex maps");
    }
    std::size_t const n = src.num_vertices();
    std::size_t const m = tgt.num_vertices();
    // back_edges[i]: edges whose larger endpoint is vertex i.
    std::vector<std::vector<WeightedComplex::Edge>> back_edges(n);
    for (auto const& e : src.edges()) {
      back_edges[e.b].push_back(e);
    }
    std::vector<Morphism>    out;
    std::vector<VertexIndex> vmap(n, 0);

    auto edge_ok = [&](std::size_t i) {
      for (auto const& e : back_edges[i]) {
        VertexIndex const x = vmap[e.a];
        VertexIndex const y = vmap[e.b];
        if (x == y) {
          continue;
        }
        auto const te = tgt.find_edge(x, y);
        if (!te || !divides(tgt.edges()[*te].weight, e.weight)) {
          return false;
        }
      }
      return true;
    };

    if (n == 0) {
      out.push_back(extend_from_vertex_map(source, target, vmap));
      return out;
    }
    if (m == 0) {
      return out;
    }
    std::size_t depth = 0;
    vmap[0]           = 0;
    // Iterative backtracking over vmap[0..depth].
    while (true) {
      if (edge_ok(depth)) {
        if (depth + 1 == n) {
          if (auto mor = detail::try_extend(source, target, vmap, nullptr)) {
            out.push_back(std::move(*mor));
          }
        } else {
          ++depth;
          vmap[depth] = 0;
          continue;
        }
      }
      // advance
      while (true) {
        if (vmap[depth] + 1 < m) {
          ++vmap[depth];
          break;
        }
        if (depth == 0) {
          return out;
        }
        --depth;
      }
    }
  }

  inline std::vector<Morphism> morphisms_between(WeightedComplex const& source,
                                                 WeightedComplex const& target,
                                                 std::uint64_t bound
                                                 = default_hom_bound) {
    return morphisms_between(make_ref(source), make_ref(target), bound);
  }

}  // namespace gcox

#endif  // GCOX_MORPHISM_HPP_
