#ifndef GCOX_CYCLE_HPP_
#define GCOX_CYCLE_HPP_

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcox/errors.hpp"

namespace gcox {

  // Lexicographically least sequence among all rotations of seq and of its
  // reversal. Quadratic, which is fine for boundary-sized inputs.
  template <typename T>
  std::vector<T> canonical_dihedral_form(std::span<T const> seq) {
    std::size_t const n = seq.size();
    std::vector<T>    best(seq.begin(), seq.end());
    std::vector<T>    candidate(n);
    for (int reflect = 0; reflect < 2; ++reflect) {
      for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t k = 0; k < n; ++k) {
          std::size_t const idx
              = reflect == 0 ? (start + k) % n : (start + n - k) % n;
          candidate[k] = seq[idx];
        }
        if (candidate < best) {
          best = candidate;
        }
      }
    }
    return best;
  }

  template <typename T>
  std::vector<T> canonical_dihedral_form(std::vector<T> const& seq) {
    return canonical_dihedral_form(std::span<T const>(seq));
  }

  // Removes consecutive repeats, treating the sequence as cyclic. A constant
  // sequence compresses to a single element.
  template <typename T>
  std::vector<T> compress_closed_walk(std::span<T const> walk) {
    std::vector<T> out;
    for (T const& x : walk) {
      if (out.empty() || !(out.back() == x)) {
        out.push_back(x);
      }
    }
    while (out.size() > 1 && out.front() == out.back()) {
      out.pop_back();
    }
    return out;
  }

  template <typename T>
  bool has_repeats(std::span<T const> seq) {
    std::set<T> seen;
    for (T const& x : seq) {
      if (!seen.insert(x).second) {
        return true;
      }
    }
    return false;
  }

  // A cycle of a complex, stored as its canonical vertex sequence. A cycle of
  // length zero is a single vertex; otherwise the length is the number of
  // vertices (equivalently edges) and is at least 3.
  class Cycle {
   public:
    static Cycle canonicalize(std::vector<std::string> raw) {
      if (raw.empty()) {
        throw Error(ErrorKind::invalid_argument, "cycle needs a vertex");
      }
      if (raw.size() == 2) {
        throw Error(ErrorKind::invalid_argument,
                    "cycle of length 2 is not allowed");
      }
      if (has_repeats(std::span<std::string const>(raw))) {
        throw Error(ErrorKind::invalid_argument,
                    "cycle repeats a vertex");
      }
      Cycle c;
      c._vertices = canonical_dihedral_form(raw);
      return c;
    }

    static Cycle point(std::string vertex) {
      return canonicalize({std::move(vertex)});
    }

    std::size_t length() const noexcept {
      return _vertices.size() == 1 ? 0 : _vertices.size();
    }

    std::vector<std::string> const& vertices() const noexcept {
      return _vertices;
    }

    friend bool operator==(Cycle const&, Cycle const&)  = default;
    friend auto operator<=>(Cycle const&, Cycle const&) = default;

   private:
    Cycle() = default;
    std::vector<std::string> _vertices;
  };

}  // namespace gcox

#endif  // GCOX_CYCLE_HPP_
