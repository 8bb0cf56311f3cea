#ifndef GCOX_CATEGORY_HPP_
#define GCOX_CATEGORY_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcox/complex.hpp"
#include "gcox/cycle.hpp"
#include "gcox/errors.hpp"
#include "gcox/morphism.hpp"
#include "gcox/quotient.hpp"
#include "gcox/weight.hpp"

namespace gcox {

  enum class ConstructionKind { coproduct, product, equalizer, coequalizer };

  // A constructed object with its canonical legs:
  //   coproduct   - injections, one per part (leg j: part j -> object)
  //   product     - projections, one per part (leg j: object -> part j)
  //   equalizer   - the single embedding object -> source of the pair
  //   coequalizer - the single projection target of the pair -> object
  // Equalizers and coequalizers also keep the parallel pair they were built
  // from, so factorizations can check their hypothesis.
  struct ConstructionResult {
    ConstructionKind      kind;
    ComplexRef            object;
    std::vector<Morphism> legs;
    std::vector<Morphism> parallel_pair;
  };

  ////////////////////////////////////////////////////////////////////////
  // Coproduct
  ////////////////////////////////////////////////////////////////////////

  // Part j's vertex "x" becomes "j.x".
  inline ConstructionResult disjoint_union(std::vector<ComplexRef> const& parts) {
    auto prefixed = [](std::size_t j, std::string const& name) {
      return std::to_string(j) + "." + name;
    };
    RawComplex raw;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      RawComplex const part = parts[j]->to_raw();
      for (auto const& v : part.vertices) {
        raw.vertices.push_back(prefixed(j, v));
      }
      for (auto const& e : part.edges) {
        raw.edges.push_back({prefixed(j, e.u), prefixed(j, e.v), e.weight});
      }
      for (auto const& f : part.cells) {
        RawCell cell{{}, f.weight};
        for (auto const& v : f.boundary) {
          cell.boundary.push_back(prefixed(j, v));
        }
        raw.cells.push_back(std::move(cell));
      }
    }
    ConstructionResult result{ConstructionKind::coproduct,
                              make_ref(WeightedComplex::from_raw(raw)),
                              {},
                              {}};
    for (std::size_t j = 0; j < parts.size(); ++j) {
      std::vector<VertexIndex> vmap;
      for (auto const& v : parts[j]->vertices()) {
        vmap.push_back(*result.object->find_vertex(prefixed(j, v)));
      }
      result.legs.push_back(
          extend_from_vertex_map(parts[j], result.object, std::move(vmap)));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Product
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::string tuple_name(std::vector<ComplexRef> const& parts,
                                  std::span<VertexIndex const>   coords) {
      std::string out = "(";
      for (std::size_t i = 0; i < coords.size(); ++i) {
        out += (i ? "," : "") + parts[i]->name(coords[i]);
      }
      return out + ")";
    }

    // Advances a mixed-radix counter; false once it wraps to all zeros.
    inline bool next_tuple(std::vector<std::size_t>&       digits,
                           std::vector<std::size_t> const& radix) {
      for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < radix[i]) {
          return true;
        }
        digits[i] = 0;
      }
      return false;
    }

    // Enumerates the boundaries of the product cells over one tuple of
    // cell/vertex coordinates: every simple closed walk in the product graph
    // along which each cell coordinate travels once around its boundary
    // (in either direction, from any offset) while vertex coordinates stay
    // put. Each walk is reported once per starting point and direction;
    // callers deduplicate by canonical form.
    class JointTraversals {
     public:
      // fixed[i] is the vertex for vertex coordinates; boundaries[i] is
      // non-empty exactly for cell coordinates.
      JointTraversals(std::vector<VertexIndex>                     fixed,
                      std::vector<std::vector<VertexIndex>> const& boundaries)
          : _fixed(std::move(fixed)), _boundaries(boundaries) {
        for (std::size_t i = 0; i < _boundaries.size(); ++i) {
          if (!_boundaries[i].empty()) {
            _moving.push_back(i);
          }
        }
      }

      template <typename Visit>
      void for_each(Visit&& visit) {
        std::size_t const k = _moving.size();
        _offset.assign(k, 0);
        _dir.assign(k, 1);
        _radix_stride.assign(k, 1);
        std::size_t states = 1;
        for (std::size_t j = 0; j < k; ++j) {
          _radix_stride[j] = states;
          states *= length(j);
        }
        _visited.assign(states, false);
        // The first moving coordinate starts at offset 0 going forward;
        // every cycle can be rotated and reflected into that position.
        std::vector<std::size_t> choice(2 * (k - 1), 0);
        std::vector<std::size_t> radix;
        for (std::size_t j = 1; j < k; ++j) {
          radix.push_back(length(j));
          radix.push_back(2);
        }
        do {
          for (std::size_t j = 1; j < k; ++j) {
            _offset[j] = choice[2 * (j - 1)];
            _dir[j]    = choice[2 * (j - 1) + 1] == 0 ? 1 : -1;
          }
          _progress.assign(k, 0);
          _path.clear();
          std::fill(_visited.begin(), _visited.end(), false);
          walk(visit);
        } while (!choice.empty() && next_tuple(choice, radix));
      }

     private:
      std::size_t length(std::size_t j) const {
        return _boundaries[_moving[j]].size();
      }

      std::size_t position(std::size_t j) const {
        std::size_t const  t = length(j);
        std::ptrdiff_t const p
            = static_cast<std::ptrdiff_t>(_offset[j])
              + _dir[j] * static_cast<std::ptrdiff_t>(_progress[j] % t);
        return static_cast<std::size_t>(((p % static_cast<std::ptrdiff_t>(t))
                                         + static_cast<std::ptrdiff_t>(t))
                                        % static_cast<std::ptrdiff_t>(t));
      }

      std::size_t state_key() const {
        std::size_t key = 0;
        for (std::size_t j = 0; j < _moving.size(); ++j) {
          key += position(j) * _radix_stride[j];
        }
        return key;
      }

      std::vector<VertexIndex> current_vertex() const {
        std::vector<VertexIndex> v = _fixed;
        for (std::size_t j = 0; j < _moving.size(); ++j) {
          v[_moving[j]] = _boundaries[_moving[j]][position(j)];
        }
        return v;
      }

      template <typename Visit>
      void walk(Visit& visit) {
        std::size_t const key = state_key();
        _visited[key]         = true;
        _path.push_back(current_vertex());
        std::size_t const k = _moving.size();
        std::vector<std::size_t> open;
        for (std::size_t j = 0; j < k; ++j) {
          if (_progress[j] < length(j)) {
            open.push_back(j);
          }
        }
        for (std::size_t mask = 1; mask < (std::size_t(1) << open.size());
             ++mask) {
          for (std::size_t b = 0; b < open.size(); ++b) {
            if (mask & (std::size_t(1) << b)) {
              ++_progress[open[b]];
            }
          }
          if (complete()) {
            visit(std::as_const(_path));
          } else if (!_visited[state_key()]) {
            walk(visit);
          }
          for (std::size_t b = 0; b < open.size(); ++b) {
            if (mask & (std::size_t(1) << b)) {
              --_progress[open[b]];
            }
          }
        }
        _path.pop_back();
        _visited[key] = false;
      }

      bool complete() const {
        for (std::size_t j = 0; j < _moving.size(); ++j) {
          if (_progress[j] != length(j)) {
            return false;
          }
        }
        return true;
      }

      std::vector<VertexIndex>                     _fixed;
      std::vector<std::vector<VertexIndex>> const& _boundaries;
      std::vector<std::size_t>                     _moving;
      std::vector<std::size_t>                     _offset;
      std::vector<std::ptrdiff_t>                  _dir;
      std::vector<std::size_t>                     _progress;
      std::vector<std::size_t>                     _radix_stride;
      std::vector<bool>                            _visited;
      std::vector<std::vector<VertexIndex>>        _path;
    };
  }  // namespace detail

  // Strong product. Vertices are tuples "(x1,...,xn)". Edges are the tuples
  // of vertices and darts with at least one dart, weighted by the lcm of the
  // coordinate weights. Cells are indexed by tuples of vertices and cells
  // with at least one cell coordinate; over each such tuple there is one
  // product cell for every simple closed walk along which each cell
  // coordinate runs once around its boundary and the vertex coordinates stay
  // fixed. Its weight is the lcm of the coordinate weights.
  inline ConstructionResult strong_product(std::vector<ComplexRef> const& parts) {
    if (parts.empty()) {
      throw Error(ErrorKind::invalid_argument,
                  "strong product needs at least one factor");
    }
    std::size_t const n = parts.size();
    RawComplex        raw;
    std::vector<std::vector<VertexIndex>> vertex_tuples;

    bool const any_empty = std::any_of(parts.begin(), parts.end(), [](auto const& p) {
      return p->num_vertices() == 0;
    });
    if (!any_empty) {
      // vertices
      std::vector<std::size_t> radix, digits(n, 0);
      for (auto const& p : parts) {
        radix.push_back(p->num_vertices());
      }
      do {
        std::vector<VertexIndex> t(digits.begin(), digits.end());
        raw.vertices.push_back(detail::tuple_name(parts, t));
        vertex_tuples.push_back(std::move(t));
      } while (detail::next_tuple(digits, radix));

      // edges: each factor contributes its vertices (as stationary steps)
      // and both darts of each edge.
      struct Step {
        VertexIndex tail, head;
        Weight      weight;
      };
      std::vector<std::vector<Step>> steps(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (VertexIndex v = 0; v < parts[i]->num_vertices(); ++v) {
          steps[i].push_back({v, v, Weight(1)});
        }
        for (auto const& e : parts[i]->edges()) {
          steps[i].push_back({e.a, e.b, e.weight});
          steps[i].push_back({e.b, e.a, e.weight});
        }
      }
      std::fill(digits.begin(), digits.end(), 0);
      radix.clear();
      for (auto const& s : steps) {
        radix.push_back(s.size());
      }
      std::vector<VertexIndex> tail(n), head(n);
      std::vector<Weight>      weights(n);
      do {
        for (std::size_t i = 0; i < n; ++i) {
          Step const& s = steps[i][digits[i]];
          tail[i]       = s.tail;
          head[i]       = s.head;
          weights[i]    = s.weight;
        }
        // Keep one dart per edge; the all-vertex tuple has tail == head.
        if (tail < head) {
          raw.edges.push_back({detail::tuple_name(parts, tail),
                               detail::tuple_name(parts, head),
                               weight_lcm(weights)});
        }
      } while (detail::next_tuple(digits, radix));

      // cells
      std::vector<std::size_t> cell_radix;
      for (auto const& p : parts) {
        cell_radix.push_back(p->num_vertices() + p->cells().size());
      }
      std::fill(digits.begin(), digits.end(), 0);
      std::map<std::vector<std::string>, std::pair<Weight, std::vector<std::size_t>>>
          cells;
      do {
        std::vector<VertexIndex>              fixed(n, 0);
        std::vector<std::vector<VertexIndex>> boundaries(n);
        std::vector<Weight>                   cell_weights;
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t const nv = parts[i]->num_vertices();
          if (digits[i] < nv) {
            fixed[i] = static_cast<VertexIndex>(digits[i]);
          } else {
            auto const& f = parts[i]->cells()[digits[i] - nv];
            boundaries[i] = f.boundary;
            cell_weights.push_back(f.weight);
          }
        }
        if (cell_weights.empty()) {
          continue;
        }
        Weight const w = weight_lcm(cell_weights);
        detail::JointTraversals traversals(fixed, boundaries);
        traversals.for_each([&](std::vector<std::vector<VertexIndex>> const& path) {
          std::vector<std::string> names;
          names.reserve(path.size());
          for (auto const& t : path) {
            names.push_back(detail::tuple_name(parts, t));
          }
          auto canonical      = canonical_dihedral_form(names);
          auto [it, inserted] = cells.emplace(std::move(canonical), std::pair(w, digits));
          if (!inserted && it->second.second != digits) {
            throw Error(ErrorKind::invalid_complex,
                        "product cells over different tuples share the boundary "
                            + detail::describe_sequence(it->first));
          }
        });
      } while (detail::next_tuple(digits, cell_radix));
      for (auto& [boundary, info] : cells) {
        raw.cells.push_back({boundary, info.first});
      }
    }

    ConstructionResult result{ConstructionKind::product,
                              make_ref(WeightedComplex::from_raw(raw)),
                              {},
                              {}};
    // Product vertices are sorted by name; map each back to its tuple.
    std::vector<std::vector<VertexIndex>> tuple_of(result.object->num_vertices());
    for (auto const& t : vertex_tuples) {
      tuple_of[*result.object->find_vertex(detail::tuple_name(parts, t))] = t;
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<VertexIndex> vmap;
      for (auto const& t : tuple_of) {
        vmap.push_back(t[j]);
      }
      result.legs.push_back(
          extend_from_vertex_map(result.object, parts[j], std::move(vmap)));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equalizer and coequalizer
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void require_parallel(Morphism const& phi, Morphism const& psi) {
      if (!same_complex(phi.source_ref(), psi.source_ref())
          || !same_complex(phi.target_ref(), psi.target_ref())) {
        throw Error(ErrorKind::invalid_argument,
                    "morphisms are not parallel");
      }
    }
  }  // namespace detail

  // The full subcomplex on the vertices where phi and psi agree. Agreement
  // of edges is agreement of darts, so an edge belongs to the equalizer iff
  // both endpoints do, and a cell iff its whole boundary does.
  inline ConstructionResult equalizer(Morphism const& phi, Morphism const& psi) {
    detail::require_parallel(phi, psi);
    WeightedComplex const& src = phi.source();
    std::vector<bool>      keep(src.num_vertices());
    RawComplex             raw;
    for (VertexIndex v = 0; v < src.num_vertices(); ++v) {
      keep[v] = phi(v) == psi(v);
      if (keep[v]) {
        raw.vertices.push_back(src.name(v));
      }
    }
    for (auto const& e : src.edges()) {
      if (keep[e.a] && keep[e.b]) {
        raw.edges.push_back({src.name(e.a), src.name(e.b), e.weight});
      }
    }
    for (std::size_t f = 0; f < src.cells().size(); ++f) {
      auto const& cell = src.cells()[f];
      if (std::all_of(cell.boundary.begin(), cell.boundary.end(), [&](VertexIndex v) {
            return keep[v];
          })) {
        raw.cells.push_back({src.boundary_names(f), cell.weight});
      }
    }
    ConstructionResult result{ConstructionKind::equalizer,
                              make_ref(WeightedComplex::from_raw(raw)),
                              {},
                              {phi, psi}};
    std::vector<VertexIndex> vmap;
    for (auto const& v : result.object->vertices()) {
      vmap.push_back(*src.find_vertex(v));
    }
    result.legs.push_back(
        extend_from_vertex_map(result.object, phi.source_ref(), std::move(vmap)));
    return result;
  }

  // Quotient of the common target by the equivalence relation generated by
  // phi(v) ~ psi(v).
  inline ConstructionResult coequalizer(Morphism const& phi,
                                        Morphism const& psi,
                                        QuotientMode    mode = QuotientMode::strict) {
    detail::require_parallel(phi, psi);
    std::size_t const        m = phi.target().num_vertices();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    for (VertexIndex v = 0; v < phi.source().num_vertices(); ++v) {
      std::size_t a = find(phi(v));
      std::size_t b = find(psi(v));
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<std::size_t> labels(m);
    for (std::size_t v = 0; v < m; ++v) {
      labels[v] = find(v);
    }
    auto q = quotient(phi.target_ref(), VertexPartition::from_labels(labels), mode);
    ConstructionResult result{ConstructionKind::coequalizer,
                              std::move(q.complex),
                              {},
                              {phi, psi}};
    result.legs.push_back(std::move(q.projection));
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Universal properties
  ////////////////////////////////////////////////////////////////////////

  // The unique morphism rho making the construction's triangles commute:
  //   coproduct:   rho . inj_j = sigma_j
  //   product:     proj_j . rho = sigma_j
  //   equalizer:   eq . rho = sigma      (requires phi . sigma = psi . sigma)
  //   coequalizer: rho . coeq = sigma    (requires sigma . phi = sigma . psi)
  // Throws Error(universal_property) if the hypothesis fails.
  inline Morphism factor_through(ConstructionResult const& c,
                                 std::span<Morphism const> sigma) {
    auto fail = [](std::string msg) { return Error(ErrorKind::universal_property, msg); };
    auto extend = [&](ComplexRef s, ComplexRef t, std::vector<VertexIndex> vmap) {
      std::string why;
      auto        m = detail::try_extend(std::move(s), std::move(t), std::move(vmap), &why);
      if (!m) {
        throw fail("no factorization: " + why);
      }
      return std::move(*m);
    };
    std::size_t const expected
        = (c.kind == ConstructionKind::coproduct || c.kind == ConstructionKind::product)
              ? c.legs.size()
              : 1;
    if (sigma.size() != expected) {
      throw fail("expected " + std::to_string(expected) + " morphisms, got "
                 + std::to_string(sigma.size()));
    }

    switch (c.kind) {
      case ConstructionKind::coproduct: {
        if (sigma.empty()) {
          throw fail("empty coproduct needs an explicit target");
        }
        std::vector<VertexIndex> vmap(c.object->num_vertices(), 0);
        for (std::size_t j = 0; j < sigma.size(); ++j) {
          if (!detail::same_complex(sigma[j].source_ref(), c.legs[j].source_ref())) {
            throw fail("cocone leg " + std::to_string(j) + " has the wrong source");
          }
          if (!detail::same_complex(sigma[j].target_ref(), sigma[0].target_ref())) {
            throw fail("cocone legs do not share a target");
          }
          for (VertexIndex v = 0; v < sigma[j].source().num_vertices(); ++v) {
            vmap[c.legs[j](v)] = sigma[j](v);
          }
        }
        return extend(c.object, sigma[0].target_ref(), std::move(vmap));
      }
      case ConstructionKind::product: {
        std::map<std::vector<VertexIndex>, VertexIndex> by_tuple;
        for (VertexIndex p = 0; p < c.object->num_vertices(); ++p) {
          std::vector<VertexIndex> key;
          for (auto const& leg : c.legs) {
            key.push_back(leg(p));
          }
          by_tuple.emplace(std::move(key), p);
        }
        for (std::size_t j = 0; j < sigma.size(); ++j) {
          if (!detail::same_complex(sigma[j].target_ref(), c.legs[j].target_ref())) {
            throw fail("cone leg " + std::to_string(j) + " has the wrong target");
          }
          if (!detail::same_complex(sigma[j].source_ref(), sigma[0].source_ref())) {
            throw fail("cone legs do not share a source");
          }
        }
        std::vector<VertexIndex> vmap;
        for (VertexIndex x = 0; x < sigma[0].source().num_vertices(); ++x) {
          std::vector<VertexIndex> key;
          for (auto const& s : sigma) {
            key.push_back(s(x));
          }
          vmap.push_back(by_tuple.at(key));
        }
        return extend(sigma[0].source_ref(), c.object, std::move(vmap));
      }
      case ConstructionKind::equalizer: {
        Morphism const& s   = sigma[0];
        Morphism const& eq  = c.legs[0];
        Morphism const& phi = c.parallel_pair[0];
        Morphism const& psi = c.parallel_pair[1];
        if (!detail::same_complex(s.target_ref(), eq.target_ref())) {
          throw fail("morphism does not land in the equalized complex");
        }
        std::map<VertexIndex, VertexIndex> inverse;
        for (VertexIndex v = 0; v < c.object->num_vertices(); ++v) {
          inverse.emplace(eq(v), v);
        }
        std::vector<VertexIndex> vmap;
        for (VertexIndex x = 0; x < s.source().num_vertices(); ++x) {
          if (phi(s(x)) != psi(s(x))) {
            throw fail("morphism does not equalize the pair at vertex '"
                       + s.source().name(x) + "'");
          }
          vmap.push_back(inverse.at(s(x)));
        }
        return extend(s.source_ref(), c.object, std::move(vmap));
      }
      case ConstructionKind::coequalizer: {
        Morphism const& s    = sigma[0];
        Morphism const& coeq = c.legs[0];
        Morphism const& phi  = c.parallel_pair[0];
        Morphism const& psi  = c.parallel_pair[1];
        if (!detail::same_complex(s.source_ref(), coeq.source_ref())) {
          throw fail("morphism does not start at the coequalized complex");
        }
        for (VertexIndex v = 0; v < phi.source().num_vertices(); ++v) {
          if (s(phi(v)) != s(psi(v))) {
            throw fail("morphism does not coequalize the pair at vertex '"
                       + phi.source().name(v) + "'");
          }
        }
        std::vector<std::optional<VertexIndex>> image(c.object->num_vertices());
        for (VertexIndex v = 0; v < s.source().num_vertices(); ++v) {
          auto& slot = image[coeq(v)];
          if (slot && *slot != s(v)) {
            throw fail("morphism is not constant on the class of '"
                       + s.source().name(v) + "'");
          }
          slot = s(v);
        }
        std::vector<VertexIndex> vmap;
        for (auto const& slot : image) {
          vmap.push_back(*slot);
        }
        return extend(c.object, s.target_ref(), std::move(vmap));
      }
    }
    throw fail("unknown construction");
  }

  inline Morphism factor_through(ConstructionResult const& c, Morphism const& sigma) {
    return factor_through(c, std::span<Morphism const>(&sigma, 1));
  }

  ////////////////////////////////////////////////////////////////////////
  // Free and forgetful functors
  ////////////////////////////////////////////////////////////////////////

  // The discrete complex on a set.
  inline WeightedComplex free_complex(std::set<std::string> const& generators) {
    return WeightedComplex::from_raw(
        {std::vector<std::string>(generators.begin(), generators.end()), {}, {}});
  }

  inline std::set<std::string> underlying_vertices(WeightedComplex const& c) {
    return {c.vertices().begin(), c.vertices().end()};
  }

  inline VertexMap underlying_map(Morphism const& m) {
    return m.named_vertex_map();
  }

  // Hom(FC(X), Y) -> Hom_Set(X, V(Y)).
  inline VertexMap adjunction_transpose(Morphism const& m) {
    if (!m.source().edges().empty() || !m.source().cells().empty()) {
      throw Error(ErrorKind::invalid_argument,
                  "transpose needs a morphism out of a free complex");
    }
    return m.named_vertex_map();
  }

  // Hom_Set(X, V(Y)) -> Hom(FC(X), Y).
  inline Morphism adjunction_inverse(std::set<std::string> const& generators,
                                     ComplexRef                   target,
                                     VertexMap const&             f) {
    return extend_from_vertex_map(make_ref(free_complex(generators)), std::move(target), f);
  }

}  // namespace gcox

#endif  // GCOX_CATEGORY_HPP_
