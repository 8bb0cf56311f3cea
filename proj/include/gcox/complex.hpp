#ifndef GCOX_COMPLEX_HPP_
#define GCOX_COMPLEX_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcox/cycle.hpp"
#include "gcox/errors.hpp"
#include "gcox/weight.hpp"

namespace gcox {

  using VertexIndex = std::uint32_t;

  // Unvalidated complex data: what a document or a construction produces
  // before the axioms are checked.
  struct RawEdge {
    std::string u;
    std::string v;
    Weight      weight;

    friend bool operator==(RawEdge const&, RawEdge const&) = default;
  };

  struct RawCell {
    std::vector<std::string> boundary;
    Weight                   weight;

    friend bool operator==(RawCell const&, RawCell const&) = default;
  };

  struct RawComplex {
    std::vector<std::string> vertices;
    std::vector<RawEdge>     edges;
    std::vector<RawCell>     cells;

    friend bool operator==(RawComplex const&, RawComplex const&) = default;
  };

  struct Violation {
    std::string element;
    std::string axiom;
  };

  struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }

    std::string to_string() const {
      std::string out;
      for (auto const& v : violations) {
        if (!out.empty()) {
          out += "; ";
        }
        out += v.axiom + " at " + v.element;
      }
      return out.empty() ? std::string("ok") : out;
    }

    bool has(std::string_view axiom) const {
      return std::any_of(violations.begin(),
                         violations.end(),
                         [&](Violation const& v) { return v.axiom == axiom; });
    }
  };

  // Vertex identifiers are opaque, but must be non-empty and free of
  // whitespace and of the characters '*' and '^', which the native
  // presentation format uses as separators.
  inline bool is_valid_identifier(std::string_view id) noexcept {
    if (id.empty()) {
      return false;
    }
    for (char c : id) {
      if (c == '*' || c == '^' || c == ' ' || c == '\t' || c == '\n'
          || c == '\r' || c == '\v' || c == '\f') {
        return false;
      }
    }
    return true;
  }

  namespace detail {
    inline std::string describe_edge(std::string const& u,
                                     std::string const& v) {
      return "edge {" + u + "," + v + "}";
    }

    inline std::string describe_sequence(std::vector<std::string> const& s) {
      std::string out = "(";
      for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + s[i];
      }
      return out + ")";
    }
  }  // namespace detail

  inline ValidationReport validate(RawComplex const& raw) {
    ValidationReport         report;
    auto                     add = [&](std::string element, char const* axiom) {
      report.violations.push_back({std::move(element), axiom});
    };
    std::set<std::string> vertices;
    for (auto const& v : raw.vertices) {
      if (!is_valid_identifier(v)) {
        add("vertex '" + v + "'", "invalid identifier");
      }
      if (!vertices.insert(v).second) {
        add("vertex '" + v + "'", "duplicate vertex");
      }
    }

    std::set<std::pair<std::string, std::string>> edges;
    for (auto const& e : raw.edges) {
      std::string const where = detail::describe_edge(e.u, e.v);
      bool              known = true;
      for (auto const* end : {&e.u, &e.v}) {
        if (!vertices.count(*end)) {
          add(where, "unknown vertex");
          known = false;
        }
      }
      if (e.u == e.v) {
        add(where, "loop");
        continue;
      }
      if (e.weight.is_finite() && e.weight.value() < 2) {
        add(where, "edge weight");
      }
      if (known && !edges.insert(std::minmax(e.u, e.v)).second) {
        add(where, "multiple edge");
      }
    }

    std::set<std::vector<std::string>> boundaries;
    for (auto const& f : raw.cells) {
      std::string const where = "cell " + detail::describe_sequence(f.boundary);
      if (f.weight.is_infinite() || f.weight.value() < 2) {
        add(where, "cell weight");
      }
      bool well_formed = true;
      for (auto const& v : f.boundary) {
        if (!vertices.count(v)) {
          add(where, "unknown vertex");
          well_formed = false;
          break;
        }
      }
      if (f.boundary.size() < 3) {
        add(where, "boundary too short");
        continue;
      }
      if (has_repeats(std::span<std::string const>(f.boundary))) {
        add(where, "boundary repeats vertex");
        continue;
      }
      if (!well_formed) {
        continue;
      }
      for (std::size_t i = 0; i < f.boundary.size(); ++i) {
        auto const& a = f.boundary[i];
        auto const& b = f.boundary[(i + 1) % f.boundary.size()];
        if (!edges.count(std::minmax(a, b))) {
          add(where, "boundary edge missing");
          well_formed = false;
          break;
        }
      }
      if (well_formed
          && !boundaries.insert(canonical_dihedral_form(f.boundary)).second) {
        add(where, "duplicate boundary");
      }
    }
    return report;
  }

  // An immutable, always-valid weighted 2-complex. Vertices are kept sorted,
  // so a VertexIndex comparison agrees with the identifier order and index
  // sequences canonicalize exactly like identifier sequences.
  class WeightedComplex {
   public:
    struct Edge {
      VertexIndex a;  // a < b
      VertexIndex b;
      Weight      weight;

      friend bool operator==(Edge const&, Edge const&) = default;
    };

    struct Cell {
      std::vector<VertexIndex> boundary;  // canonical dihedral form
      Weight                   weight;

      friend bool operator==(Cell const&, Cell const&) = default;
    };

    WeightedComplex() = default;

    // Throws Error(invalid_complex) listing every violated axiom.
    static WeightedComplex from_raw(RawComplex const& raw) {
      ValidationReport report = validate(raw);
      if (!report.ok()) {
        throw Error(ErrorKind::invalid_complex, report.to_string());
      }
      WeightedComplex c;
      c._vertices = raw.vertices;
      std::sort(c._vertices.begin(), c._vertices.end());
      for (auto const& e : raw.edges) {
        VertexIndex a = *c.find_vertex(e.u);
        VertexIndex b = *c.find_vertex(e.v);
        if (a > b) {
          std::swap(a, b);
        }
        c._edges.push_back({a, b, e.weight});
      }
      std::sort(c._edges.begin(), c._edges.end(), [](auto const& x, auto const& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
      });
      for (auto const& f : raw.cells) {
        std::vector<VertexIndex> idx;
        idx.reserve(f.boundary.size());
        for (auto const& v : f.boundary) {
          idx.push_back(*c.find_vertex(v));
        }
        c._cells.push_back({canonical_dihedral_form(idx), f.weight});
      }
      std::sort(c._cells.begin(), c._cells.end(), [](auto const& x, auto const& y) {
        return x.boundary < y.boundary;
      });
      return c;
    }

    static WeightedComplex empty() { return {}; }

    static WeightedComplex point(std::string name = "v") {
      return from_raw({{std::move(name)}, {}, {}});
    }

    std::vector<std::string> const& vertices() const noexcept {
      return _vertices;
    }
    std::vector<Edge> const& edges() const noexcept { return _edges; }
    std::vector<Cell> const& cells() const noexcept { return _cells; }

    std::size_t num_vertices() const noexcept { return _vertices.size(); }

    std::string const& name(VertexIndex v) const { return _vertices.at(v); }

    std::optional<VertexIndex> find_vertex(std::string_view name) const {
      auto it = std::lower_bound(_vertices.begin(), _vertices.end(), name);
      if (it == _vertices.end() || *it != name) {
        return std::nullopt;
      }
      return static_cast<VertexIndex>(it - _vertices.begin());
    }

    std::optional<std::size_t> find_edge(VertexIndex u, VertexIndex v) const {
      if (u > v) {
        std::swap(u, v);
      }
      auto it = std::lower_bound(
          _edges.begin(), _edges.end(), std::pair(u, v), [](Edge const& e, auto const& key) {
            return std::pair(e.a, e.b) < key;
          });
      if (it == _edges.end() || it->a != u || it->b != v) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - _edges.begin());
    }

    // boundary must already be in canonical form.
    std::optional<std::size_t>
    find_cell(std::span<VertexIndex const> boundary) const {
      auto it = std::lower_bound(
          _cells.begin(), _cells.end(), boundary, [](Cell const& f, auto const& key) {
            return std::lexicographical_compare(
                f.boundary.begin(), f.boundary.end(), key.begin(), key.end());
          });
      if (it == _cells.end()
          || !std::equal(it->boundary.begin(),
                         it->boundary.end(),
                         boundary.begin(),
                         boundary.end())) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - _cells.begin());
    }

    std::vector<std::string> boundary_names(std::size_t cell) const {
      std::vector<std::string> out;
      for (VertexIndex v : _cells.at(cell).boundary) {
        out.push_back(_vertices[v]);
      }
      return out;
    }

    Cycle boundary(std::size_t cell) const {
      return Cycle::canonicalize(boundary_names(cell));
    }

    RawComplex to_raw() const {
      RawComplex raw;
      raw.vertices = _vertices;
      for (auto const& e : _edges) {
        raw.edges.push_back({_vertices[e.a], _vertices[e.b], e.weight});
      }
      for (std::size_t i = 0; i < _cells.size(); ++i) {
        raw.cells.push_back({boundary_names(i), _cells[i].weight});
      }
      return raw;
    }

    friend bool operator==(WeightedComplex const&, WeightedComplex const&)
        = default;

   private:
    std::vector<std::string> _vertices;
    std::vector<Edge>        _edges;
    std::vector<Cell>        _cells;
  };

  inline ValidationReport validate(WeightedComplex const& c) {
    return validate(c.to_raw());
  }

  using ComplexRef = std::shared_ptr<WeightedComplex const>;

  inline ComplexRef make_ref(WeightedComplex c) {
    return std::make_shared<WeightedComplex const>(std::move(c));
  }

}  // namespace gcox

#endif  // GCOX_COMPLEX_HPP_
