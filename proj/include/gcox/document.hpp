#ifndef GCOX_DOCUMENT_HPP_
#define GCOX_DOCUMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "gcox/complex.hpp"
#include "gcox/errors.hpp"
#include "gcox/morphism.hpp"
#include "gcox/weight.hpp"

// Complex documents are JSON:
//   {"vertices":["a","b"],"edges":[["a","b",3]],"cells":[{"boundary":[...],"weight":2}]}
// Infinite weights are the string "inf". Serialization is compact and
// canonical, so equal complexes give byte-identical documents.

namespace gcox {

  namespace detail {
    using json = nlohmann::ordered_json;

    inline std::string line_and_column(std::string_view text, std::size_t offset) {
      std::size_t line = 1;
      std::size_t col  = 1;
      for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return "line " + std::to_string(line) + ", column " + std::to_string(col);
    }

    inline json parse_json(std::string_view text) {
      try {
        return json::parse(text.begin(), text.end());
      } catch (json::parse_error const& e) {
        // byte is 1-based and points just past the offending character.
        std::size_t const offset = e.byte == 0 ? 0 : e.byte - 1;
        throw Error(ErrorKind::parse,
                    "syntax error at " + line_and_column(text, offset));
      }
    }

    [[noreturn]] inline void malformed(std::string const& where,
                                       std::string const& what) {
      throw Error(ErrorKind::parse, where + ": " + what);
    }

    inline std::string identifier(json const& j, std::string const& where) {
      if (!j.is_string()) {
        malformed(where, "expected a vertex name string");
      }
      return j.get<std::string>();
    }

    inline Weight weight_of(json const& j, std::string const& where, bool allow_inf) {
      if (j.is_string() && j.get<std::string>() == "inf") {
        if (!allow_inf) {
          malformed(where, "weight must be finite");
        }
        return Weight::infinity();
      }
      if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0) {
        malformed(where, allow_inf ? "weight must be a positive integer or \"inf\""
                                   : "weight must be a positive integer");
      }
      return Weight(j.get<std::uint64_t>());
    }

    inline json weight_json(Weight w) {
      if (w.is_infinite()) {
        return "inf";
      }
      return w.value();
    }

    inline void require_keys(json const& j, std::string const& where,
                             std::initializer_list<char const*> keys) {
      if (!j.is_object()) {
        malformed(where, "expected an object");
      }
      for (auto const& [key, value] : j.items()) {
        bool known = false;
        for (char const* k : keys) {
          known = known || key == k;
        }
        if (!known) {
          malformed(where, "unexpected key \"" + key + "\"");
        }
      }
      for (char const* k : keys) {
        if (!j.contains(k)) {
          malformed(where, std::string("missing key \"") + k + "\"");
        }
      }
    }
  }  // namespace detail

  // Reads a document without checking the complex axioms.
  inline RawComplex parse_raw_complex(std::string_view text) {
    auto const doc = detail::parse_json(text);
    detail::require_keys(doc, "document", {"vertices", "edges", "cells"});
    RawComplex raw;
    if (!doc["vertices"].is_array()) {
      detail::malformed("vertices", "expected an array");
    }
    for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
      raw.vertices.push_back(detail::identifier(
          doc["vertices"][i], "vertices[" + std::to_string(i) + "]"));
    }
    if (!doc["edges"].is_array()) {
      detail::malformed("edges", "expected an array");
    }
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      std::string const where = "edges[" + std::to_string(i) + "]";
      auto const&       e     = doc["edges"][i];
      if (!e.is_array() || e.size() != 3) {
        detail::malformed(where, "expected [u, v, weight]");
      }
      raw.edges.push_back({detail::identifier(e[0], where),
                           detail::identifier(e[1], where),
                           detail::weight_of(e[2], where, true)});
    }
    if (!doc["cells"].is_array()) {
      detail::malformed("cells", "expected an array");
    }
    for (std::size_t i = 0; i < doc["cells"].size(); ++i) {
      std::string const where = "cells[" + std::to_string(i) + "]";
      auto const&       c     = doc["cells"][i];
      detail::require_keys(c, where, {"boundary", "weight"});
      if (!c["boundary"].is_array()) {
        detail::malformed(where, "boundary must be an array");
      }
      RawCell cell{{}, detail::weight_of(c["weight"], where, false)};
      for (auto const& v : c["boundary"]) {
        cell.boundary.push_back(detail::identifier(v, where));
      }
      raw.cells.push_back(std::move(cell));
    }
    return raw;
  }

  inline std::string serialize_raw(RawComplex const& raw) {
    detail::json doc;
    doc["vertices"] = raw.vertices;
    doc["edges"]    = detail::json::array();
    for (auto const& e : raw.edges) {
      doc["edges"].push_back({e.u, e.v, detail::weight_json(e.weight)});
    }
    doc["cells"] = detail::json::array();
    for (auto const& c : raw.cells) {
      detail::json cell;
      cell["boundary"] = c.boundary;
      cell["weight"]   = detail::weight_json(c.weight);
      doc["cells"].push_back(std::move(cell));
    }
    return doc.dump();
  }

  inline std::string serialize(WeightedComplex const& c) {
    return serialize_raw(c.to_raw());
  }

  // Any failure, syntactic or an axiom violation, is reported as a parse
  // error; violations are listed as "axiom at element".
  inline WeightedComplex parse_complex(std::string_view text) {
    RawComplex const raw    = parse_raw_complex(text);
    auto const       report = validate(raw);
    if (!report.ok()) {
      throw Error(ErrorKind::parse, report.to_string());
    }
    return WeightedComplex::from_raw(raw);
  }

  // True iff the document lists everything in canonical order and form.
  inline bool is_canonical(RawComplex const& raw) {
    if (!validate(raw).ok()) {
      return false;
    }
    return WeightedComplex::from_raw(raw).to_raw() == raw;
  }

  // {"map": {"a": "x", ...}}
  inline VertexMap parse_vertex_map(std::string_view text) {
    auto const doc = detail::parse_json(text);
    detail::require_keys(doc, "map document", {"map"});
    if (!doc["map"].is_object()) {
      detail::malformed("map", "expected an object");
    }
    VertexMap out;
    for (auto const& [from, to] : doc["map"].items()) {
      out.emplace(from, detail::identifier(to, "map[\"" + from + "\"]"));
    }
    return out;
  }

  inline std::string serialize_vertex_map(VertexMap const& m) {
    detail::json doc;
    doc["map"] = detail::json::object();
    for (auto const& [from, to] : m) {
      doc["map"][from] = to;
    }
    return doc.dump();
  }

}  // namespace gcox

#endif  // GCOX_DOCUMENT_HPP_
