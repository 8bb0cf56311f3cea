#ifndef GCOX_QUOTIENT_HPP_
#define GCOX_QUOTIENT_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcox/complex.hpp"
#include "gcox/cycle.hpp"
#include "gcox/errors.hpp"
#include "gcox/morphism.hpp"
#include "gcox/weight.hpp"

namespace gcox {

  // strict: every degeneracy is an error.
  // lax: edges with identified endpoints collapse to a vertex, and cells whose
  // boundary collapses to one vertex map there.
  enum class QuotientMode { strict, lax };

  // A partition of a complex's vertex set, stored as a block number per
  // vertex index.
  class VertexPartition {
   public:
    static VertexPartition discrete(WeightedComplex const& c) {
      VertexPartition p;
      p._block.resize(c.num_vertices());
      for (std::size_t i = 0; i < p._block.size(); ++i) {
        p._block[i] = i;
      }
      p._num_blocks = p._block.size();
      return p;
    }

    // Throws unless the blocks are pairwise disjoint and cover every vertex.
    static VertexPartition
    from_blocks(WeightedComplex const&                       c,
                std::vector<std::vector<std::string>> const& blocks) {
      VertexPartition p;
      p._block.assign(c.num_vertices(), SIZE_MAX);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
          throw Error(ErrorKind::invalid_argument, "partition has an empty block");
        }
        for (auto const& name : blocks[b]) {
          auto const v = c.find_vertex(name);
          if (!v) {
            throw Error(ErrorKind::invalid_argument,
                        "partition mentions unknown vertex '" + name + "'");
          }
          if (p._block[*v] != SIZE_MAX) {
            throw Error(ErrorKind::invalid_argument,
                        "partition blocks overlap at '" + name + "'");
          }
          p._block[*v] = b;
        }
      }
      for (std::size_t v = 0; v < p._block.size(); ++v) {
        if (p._block[v] == SIZE_MAX) {
          throw Error(ErrorKind::invalid_argument,
                      "partition misses vertex '"
                          + c.name(static_cast<VertexIndex>(v)) + "'");
        }
      }
      p._num_blocks = blocks.size();
      return p;
    }

    // block_of[v] is any label; equal labels mean the same block.
    static VertexPartition from_labels(std::vector<std::size_t> const& labels) {
      VertexPartition                       p;
      std::map<std::size_t, std::size_t> renumber;
      for (std::size_t label : labels) {
        auto [it, inserted] = renumber.emplace(label, renumber.size());
        p._block.push_back(it->second);
      }
      p._num_blocks = renumber.size();
      return p;
    }

    std::size_t block(VertexIndex v) const { return _block.at(v); }
    std::size_t size() const noexcept { return _block.size(); }
    std::size_t num_blocks() const noexcept { return _num_blocks; }

   private:
    std::vector<std::size_t> _block;
    std::size_t              _num_blocks = 0;
  };

  struct QuotientResult {
    ComplexRef complex;
    Morphism   projection;
  };

  // Each vertex class is named after its least member, so the discrete
  // partition reproduces the input exactly. Merged edges and cells take the
  // gcd of their members' weights. Throws Error(degenerate_quotient) naming
  // the offending class.
  inline QuotientResult quotient(ComplexRef             source,
                                 VertexPartition const& partition,
                                 QuotientMode           mode) {
    WeightedComplex const& c = *source;
    if (partition.size() != c.num_vertices()) {
      throw Error(ErrorKind::invalid_argument,
                  "partition does not match the complex's vertex set");
    }
    // Vertices are sorted, so the first member seen is the least one.
    std::vector<std::optional<VertexIndex>> representative(partition.num_blocks());
    for (VertexIndex v = 0; v < c.num_vertices(); ++v) {
      auto& rep = representative[partition.block(v)];
      if (!rep) {
        rep = v;
      }
    }
    auto class_name = [&](VertexIndex v) -> std::string const& {
      return c.name(*representative[partition.block(v)]);
    };
    auto fail = [](std::string msg) -> Error {
      return Error(ErrorKind::degenerate_quotient, msg);
    };

    RawComplex raw;
    for (auto const& rep : representative) {
      raw.vertices.push_back(c.name(*rep));
    }

    std::map<std::pair<std::string, std::string>, Weight> edges;
    for (auto const& e : c.edges()) {
      std::string const& x = class_name(e.a);
      std::string const& y = class_name(e.b);
      if (x == y) {
        if (mode == QuotientMode::strict) {
          throw fail(detail::describe_edge(c.name(e.a), c.name(e.b))
                     + " becomes a loop at class [" + x + "]");
        }
        continue;
      }
      auto [it, inserted] = edges.emplace(std::minmax(x, y), e.weight);
      if (!inserted) {
        it->second = weight_gcd(it->second, e.weight);
      }
    }
    for (auto const& [ends, w] : edges) {
      if (w == Weight(1)) {
        throw fail("merged edge weight 1 violates weight axiom at class "
                   + detail::describe_edge(ends.first, ends.second));
      }
      raw.edges.push_back({ends.first, ends.second, w});
    }

    std::map<std::vector<std::string>, Weight> cells;
    for (std::size_t f = 0; f < c.cells().size(); ++f) {
      auto const&              cell = c.cells()[f];
      std::vector<std::string> walk;
      for (VertexIndex v : cell.boundary) {
        walk.push_back(class_name(v));
      }
      auto const image
          = compress_closed_walk(std::span<std::string const>(walk));
      std::string const where = "cell " + detail::describe_sequence(c.boundary_names(f));
      if (image.size() != walk.size() && mode == QuotientMode::strict) {
        throw fail(where + " boundary collapses below its length");
      }
      if (image.size() == 1) {
        continue;
      }
      if (image.size() < 3) {
        throw fail(where + " boundary collapses to length "
                   + std::to_string(image.size()));
      }
      if (has_repeats(std::span<std::string const>(image))) {
        throw fail(where + " boundary becomes "
                   + detail::describe_sequence(image) + ", not a cycle");
      }
      auto [it, inserted]
          = cells.emplace(canonical_dihedral_form(image), cell.weight);
      if (!inserted) {
        it->second = weight_gcd(it->second, cell.weight);
      }
    }
    for (auto const& [boundary, w] : cells) {
      if (w == Weight(1)) {
        throw fail("merged cell weight 1 violates weight axiom at class cell "
                   + detail::describe_sequence(boundary));
      }
      raw.cells.push_back({boundary, w});
    }

    auto target = make_ref(WeightedComplex::from_raw(raw));
    std::vector<VertexIndex> vmap;
    for (VertexIndex v = 0; v < c.num_vertices(); ++v) {
      vmap.push_back(*target->find_vertex(class_name(v)));
    }
    Morphism projection = extend_from_vertex_map(source, target, std::move(vmap));
    return {std::move(target), std::move(projection)};
  }

}  // namespace gcox

#endif  // GCOX_QUOTIENT_HPP_
