#ifndef GCOX_FAMILIES_HPP_
#define GCOX_FAMILIES_HPP_

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gcox/complex.hpp"
#include "gcox/cycle.hpp"
#include "gcox/errors.hpp"
#include "gcox/weight.hpp"

namespace gcox::family {

  using CoxeterMatrix = std::vector<std::vector<Weight>>;

  namespace detail {
    inline std::string generator_name(std::size_t i) {
      return "v" + std::to_string(i);
    }

    // 1-based subset {i,j,...} -> "s{i}_{j}..."
    inline std::string subset_name(std::vector<std::size_t> const& s) {
      std::string out = "s";
      for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "_" : "") + std::to_string(s[i]);
      }
      return out;
    }

    // All k-subsets of {1..n} in lexicographic order.
    inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
      std::vector<std::vector<std::size_t>> out;
      if (k > n) {
        return out;
      }
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i) {
          if (pick[i]) {
            s.push_back(i + 1);
          }
        }
        out.push_back(std::move(s));
      } while (std::prev_permutation(pick.begin(), pick.end()));
      return out;
    }

    inline std::size_t intersection_size(std::vector<std::size_t> const& a,
                                         std::vector<std::size_t> const& b) {
      std::vector<std::size_t> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      return common.size();
    }

    inline void require(bool ok, std::string const& msg) {
      if (!ok) {
        throw Error(ErrorKind::invalid_argument, msg);
      }
    }
  }  // namespace detail

  inline WeightedComplex empty() { return WeightedComplex::empty(); }

  inline WeightedComplex point() { return WeightedComplex::point("v"); }

  // Vertices v1..vr, nothing else: the free product of r copies of Z2.
  inline WeightedComplex discrete(std::size_t r) {
    RawComplex raw;
    for (std::size_t i = 1; i <= r; ++i) {
      raw.vertices.push_back(detail::generator_name(i));
    }
    return WeightedComplex::from_raw(raw);
  }

  // Every pair joined by a weight-2 edge: the direct product of r copies of Z2.
  inline WeightedComplex complete2(std::size_t r) {
    RawComplex raw = discrete(r).to_raw();
    for (std::size_t i = 1; i <= r; ++i) {
      for (std::size_t j = i + 1; j <= r; ++j) {
        raw.edges.push_back(
            {detail::generator_name(i), detail::generator_name(j), Weight(2)});
      }
    }
    return WeightedComplex::from_raw(raw);
  }

  // Generators v1..vr; m_ij labels the edge {vi,vj}. Infinite entries still
  // get an edge, which imposes no relation.
  inline WeightedComplex coxeter(CoxeterMatrix const& m) {
    std::size_t const r = m.size();
    for (std::size_t i = 0; i < r; ++i) {
      detail::require(m[i].size() == r, "coxeter matrix is not square");
      detail::require(m[i][i] == Weight(1), "coxeter matrix diagonal must be 1");
    }
    RawComplex raw = discrete(r).to_raw();
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        detail::require(m[i][j] == m[j][i], "coxeter matrix is not symmetric");
        detail::require(m[i][j] != Weight(1),
                        "coxeter matrix off-diagonal entry must be >= 2");
        raw.edges.push_back(
            {detail::generator_name(i + 1), detail::generator_name(j + 1), m[i][j]});
      }
    }
    return WeightedComplex::from_raw(raw);
  }

  // Path Coxeter matrix: 3 on consecutive generators, 2 elsewhere. Its
  // group is the symmetric group on n+1 letters.
  inline WeightedComplex sympath(std::size_t n) {
    detail::require(n >= 1, "sympath needs n >= 1");
    CoxeterMatrix m(n, std::vector<Weight>(n, Weight(2)));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = Weight(1);
      if (i + 1 < n) {
        m[i][i + 1] = m[i + 1][i] = Weight(3);
      }
    }
    return coxeter(m);
  }

  // Two vertices u, v and one edge of weight n: the dihedral group of order 2n.
  inline WeightedComplex dihedral(Weight n) {
    detail::require(n != Weight(1), "dihedral needs n >= 2");
    return WeightedComplex::from_raw({{"u", "v"}, {{"u", "v", n}}, {}});
  }

  // Vertices are the k-subsets of {1..n}. Subsets meeting in k-1 elements
  // are joined by an infinite edge, all other pairs by a weight-2 edge.
  // Every cyclic ordering of the k-subsets of a (k+1)-subset bounds a
  // weight-2 cell; orderings related by rotation or reversal give one cell.
  inline WeightedComplex gnk(std::size_t n, std::size_t k) {
    detail::require(k >= 2 && k < n, "gnk needs 2 <= k < n");
    auto const vertices = detail::subsets(n, k);
    RawComplex raw;
    for (auto const& s : vertices) {
      raw.vertices.push_back(detail::subset_name(s));
    }
    for (std::size_t a = 0; a < vertices.size(); ++a) {
      for (std::size_t b = a + 1; b < vertices.size(); ++b) {
        bool const adjacent
            = detail::intersection_size(vertices[a], vertices[b]) == k - 1;
        raw.edges.push_back({raw.vertices[a], raw.vertices[b],
                             adjacent ? Weight::infinity() : Weight(2)});
      }
    }
    for (auto const& u : detail::subsets(n, k + 1)) {
      std::vector<std::string> faces;
      for (std::size_t drop = 0; drop < u.size(); ++drop) {
        std::vector<std::size_t> rho;
        for (std::size_t i = 0; i < u.size(); ++i) {
          if (i != drop) {
            rho.push_back(u[i]);
          }
        }
        faces.push_back(detail::subset_name(rho));
      }
      std::sort(faces.begin(), faces.end());
      std::set<std::vector<std::string>> boundaries;
      do {
        boundaries.insert(canonical_dihedral_form(faces));
      } while (std::next_permutation(faces.begin(), faces.end()));
      for (auto const& b : boundaries) {
        raw.cells.push_back({b, Weight(2)});
      }
    }
    return WeightedComplex::from_raw(raw);
  }

  // Pair generators s{i}_{j}; the case k = 2 of gnk.
  inline WeightedComplex gvp(std::size_t n) {
    detail::require(n >= 2, "gvp needs n >= 2");
    if (n == 2) {
      return WeightedComplex::point("s1_2");
    }
    return gnk(n, 2);
  }

  // "1,3;3,1" with rows separated by ';' and "inf" allowed.
  inline CoxeterMatrix parse_coxeter_matrix(std::string_view text) {
    CoxeterMatrix m;
    std::size_t   row_start = 0;
    while (row_start <= text.size()) {
      std::size_t row_end = text.find(';', row_start);
      if (row_end == std::string_view::npos) {
        row_end = text.size();
      }
      std::string_view    row = text.substr(row_start, row_end - row_start);
      std::vector<Weight> entries;
      std::size_t         cell_start = 0;
      while (cell_start <= row.size()) {
        std::size_t cell_end = row.find(',', cell_start);
        if (cell_end == std::string_view::npos) {
          cell_end = row.size();
        }
        std::string entry(row.substr(cell_start, cell_end - cell_start));
        entry.erase(std::remove_if(entry.begin(), entry.end(),
                                   [](unsigned char ch) { return std::isspace(ch); }),
                    entry.end());
        auto w = parse_weight(entry);
        detail::require(w.has_value(),
                        "bad coxeter matrix entry '" + entry + "'");
        entries.push_back(*w);
        cell_start = cell_end + 1;
      }
      m.push_back(std::move(entries));
      row_start = row_end + 1;
    }
    return m;
  }

  inline std::size_t parse_count(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    auto [ptr, ec]    = std::from_chars(text.data(), text.data() + text.size(), value);
    detail::require(ec == std::errc() && ptr == text.data() + text.size(),
                    std::string(what) + " must be a non-negative integer, got '"
                        + std::string(text) + "'");
    return value;
  }

  inline std::vector<std::string> const& family_names() {
    static std::vector<std::string> const names{
        "empty", "point", "discrete", "complete2", "coxeter",
        "sympath", "dihedral", "gvp", "gnk"};
    return names;
  }

  // Builds a family from its name and textual parameters, as on the
  // command line: "dihedral 4", "coxeter 1,3;3,1", "gnk 5 3".
  inline WeightedComplex build(std::string_view name,
                               std::vector<std::string> const& args) {
    auto arity = [&](std::size_t n) {
      detail::require(args.size() == n,
                      std::string(name) + " takes " + std::to_string(n)
                          + " argument(s), got " + std::to_string(args.size()));
    };
    if (name == "empty") {
      arity(0);
      return empty();
    }
    if (name == "point") {
      arity(0);
      return point();
    }
    if (name == "discrete") {
      arity(1);
      return discrete(parse_count(args[0], "r"));
    }
    if (name == "complete2") {
      arity(1);
      return complete2(parse_count(args[0], "r"));
    }
    if (name == "coxeter") {
      arity(1);
      return coxeter(parse_coxeter_matrix(args[0]));
    }
    if (name == "sympath") {
      arity(1);
      return sympath(parse_count(args[0], "n"));
    }
    if (name == "dihedral") {
      arity(1);
      auto w = parse_weight(args[0]);
      detail::require(w.has_value(), "dihedral needs n >= 2 or inf");
      return dihedral(*w);
    }
    if (name == "gvp") {
      arity(1);
      return gvp(parse_count(args[0], "n"));
    }
    if (name == "gnk") {
      arity(2);
      return gnk(parse_count(args[0], "n"), parse_count(args[1], "k"));
    }
    throw Error(ErrorKind::invalid_argument,
                "unknown family '" + std::string(name) + "'");
  }

}  // namespace gcox::family

#endif  // GCOX_FAMILIES_HPP_
