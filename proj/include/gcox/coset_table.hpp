#ifndef GCOX_COSET_TABLE_HPP_
#define GCOX_COSET_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gcox/errors.hpp"
#include "gcox/morphism.hpp"
#include "gcox/presentation.hpp"

namespace gcox {

  constexpr std::size_t default_coset_limit = 1'000'000;

  // A completed coset table for the trivial subgroup: the right regular
  // action of the group on itself. Coset 0 is the subgroup, i.e. the
  // identity element. Every generator is an involution, so one column per
  // generator suffices and each column is a self-inverse permutation.
  class CosetTable {
   public:
    std::size_t num_cosets() const noexcept { return _num_cosets; }
    std::size_t order() const noexcept { return _num_cosets; }

    std::vector<std::string> const& generators() const noexcept {
      return _generators;
    }

    std::optional<std::size_t> generator_index(std::string const& g) const {
      auto it = _index.find(g);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::uint32_t image(std::uint32_t coset, std::size_t generator) const {
      return _table.at(static_cast<std::size_t>(coset) * _generators.size()
                       + generator);
    }

    friend bool operator==(CosetTable const& a, CosetTable const& b) {
      return a._generators == b._generators && a._num_cosets == b._num_cosets
             && a._table == b._table;
    }

   private:
    friend class ToddCoxeter;
    std::vector<std::string>           _generators;
    std::map<std::string, std::size_t> _index;
    std::size_t                        _num_cosets = 0;
    std::vector<std::uint32_t>         _table;
  };

  // Outcome of an enumeration: a completed table, or the limit that was hit.
  // Hitting the limit says nothing about finiteness.
  class EnumerationResult {
   public:
    explicit EnumerationResult(CosetTable table) : _state(std::move(table)) {}
    explicit EnumerationResult(std::size_t exceeded_limit) : _state(exceeded_limit) {}

    bool completed() const noexcept {
      return std::holds_alternative<CosetTable>(_state);
    }

    std::optional<std::size_t> order() const {
      if (!completed()) {
        return std::nullopt;
      }
      return std::get<CosetTable>(_state).order();
    }

    CosetTable const& table() const {
      if (!completed()) {
        throw Error(ErrorKind::enumeration, verdict());
      }
      return std::get<CosetTable>(_state);
    }

    // "exceeded(N)" or the order in decimal.
    std::string verdict() const {
      if (completed()) {
        return std::to_string(*order());
      }
      return "exceeded(" + std::to_string(std::get<std::size_t>(_state)) + ")";
    }

   private:
    std::variant<CosetTable, std::size_t> _state;
  };

  // HLT coset enumeration over the trivial subgroup. For each live coset in
  // order, every relator is scanned and filled from it, then its row is
  // completed; coincidences are processed immediately with union-find.
  // Dead cosets are compacted away when they dominate the table.
  class ToddCoxeter {
   public:
    static constexpr std::int32_t undefined = -1;

    ToddCoxeter(GroupPresentation const& p, std::size_t limit)
        : _limit(limit), _num_gens(p.generators.size()) {
      if (limit == 0) {
        throw Error(ErrorKind::invalid_argument, "coset limit must be >= 1");
      }
      std::map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (!index.emplace(p.generators[i], i).second) {
          throw Error(ErrorKind::presentation,
                      "repeated generator '" + p.generators[i] + "'");
        }
      }
      std::set<std::size_t> squared;
      for (auto const& r : p.relators) {
        std::vector<std::size_t> base;
        for (auto const& letter : r.word) {
          auto it = index.find(letter);
          if (it == index.end()) {
            throw Error(ErrorKind::presentation,
                        "relator uses unknown generator '" + letter + "'");
          }
          base.push_back(it->second);
        }
        if (base.size() == 1 && r.exponent == 2) {
          squared.insert(base.front());
          continue;
        }
        if (base.size() * r.exponent > max_relator_length) {
          throw Error(ErrorKind::enumeration, "relator too long to scan");
        }
        std::vector<std::size_t> word;
        for (std::uint64_t k = 0; k < r.exponent; ++k) {
          for (std::size_t g : base) {
            // Free reduction with involutive letters.
            if (!word.empty() && word.back() == g) {
              word.pop_back();
            } else {
              word.push_back(g);
            }
          }
        }
        while (word.size() >= 2 && word.front() == word.back()) {
          word.pop_back();
          word.erase(word.begin());
        }
        if (!word.empty()) {
          _relators.push_back(std::move(word));
        }
      }
      for (std::size_t g = 0; g < _num_gens; ++g) {
        if (!squared.count(g)) {
          throw Error(ErrorKind::presentation,
                      "missing square relator for generator '"
                          + p.generators[g] + "'");
        }
      }
      _generators = p.generators;
      _index      = std::move(index);
    }

    EnumerationResult run() {
      try {
        new_coset();
        for (std::size_t c = 0; c < _parent.size(); ++c) {
          if (_parent[c] != c) {
            continue;
          }
          if (_parent.size() > 2 * _live + 1024) {
            c = compact(c);
          }
          for (auto const& r : _relators) {
            if (_parent[c] != c) {
              break;
            }
            scan_and_fill(c, r);
          }
          for (std::size_t g = 0; g < _num_gens && _parent[c] == c; ++g) {
            if (entry(c, g) == undefined) {
              define(c, g);
            }
          }
        }
      } catch (LimitHit const&) {
        return EnumerationResult(_limit);
      }
      return EnumerationResult(finish());
    }

   private:
    struct LimitHit {};
    static constexpr std::size_t max_relator_length = 10'000'000;

    std::int32_t& entry(std::size_t c, std::size_t g) {
      return _table[c * _num_gens + g];
    }

    std::size_t new_coset() {
      if (_live == _limit) {
        throw LimitHit{};
      }
      std::size_t const c = _parent.size();
      _parent.push_back(c);
      _table.resize(_table.size() + _num_gens, undefined);
      ++_live;
      return c;
    }

    void define(std::size_t c, std::size_t g) {
      std::size_t const d = new_coset();
      entry(c, g)         = static_cast<std::int32_t>(d);
      entry(d, g)         = static_cast<std::int32_t>(c);
    }

    std::size_t rep(std::size_t c) {
      std::size_t root = c;
      while (_parent[root] != root) {
        root = _parent[root];
      }
      while (_parent[c] != root) {
        std::size_t next = _parent[c];
        _parent[c]       = root;
        c                = next;
      }
      return root;
    }

    void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue) {
      a = rep(a);
      b = rep(b);
      if (a == b) {
        return;
      }
      if (a > b) {
        std::swap(a, b);
      }
      _parent[b] = a;
      queue.push_back(b);
      --_live;
    }

    void coincidence(std::size_t a, std::size_t b) {
      std::vector<std::size_t> queue;
      merge(a, b, queue);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        std::size_t const e = queue[i];
        for (std::size_t g = 0; g < _num_gens; ++g) {
          std::int32_t const f = entry(e, g);
          if (f == undefined) {
            continue;
          }
          entry(static_cast<std::size_t>(f), g) = undefined;
          std::size_t const e1 = rep(e);
          std::size_t const f1 = rep(static_cast<std::size_t>(f));
          if (entry(e1, g) != undefined) {
            merge(f1, static_cast<std::size_t>(entry(e1, g)), queue);
          } else if (entry(f1, g) != undefined) {
            merge(e1, static_cast<std::size_t>(entry(f1, g)), queue);
          } else {
            entry(e1, g) = static_cast<std::int32_t>(f1);
            entry(f1, g) = static_cast<std::int32_t>(e1);
          }
        }
      }
    }

    void scan_and_fill(std::size_t c, std::vector<std::size_t> const& w) {
      std::size_t f = c;
      std::size_t b = c;
      std::size_t i = 0;
      std::size_t j = w.size();
      while (true) {
        while (i < j && entry(f, w[i]) != undefined) {
          f = static_cast<std::size_t>(entry(f, w[i]));
          ++i;
        }
        if (i == j) {
          if (f != b) {
            coincidence(f, b);
          }
          return;
        }
        while (j > i && entry(b, w[j - 1]) != undefined) {
          b = static_cast<std::size_t>(entry(b, w[j - 1]));
          --j;
        }
        if (j == i) {
          if (f != b) {
            coincidence(f, b);
          }
          return;
        }
        if (j == i + 1) {
          entry(f, w[i]) = static_cast<std::int32_t>(b);
          entry(b, w[i]) = static_cast<std::int32_t>(f);
          return;
        }
        define(f, w[i]);
      }
    }

    // Renumbers live cosets in order and returns the new index of coset c.
    std::size_t compact(std::size_t c) {
      std::vector<std::int32_t> renumber(_parent.size(), undefined);
      std::size_t               next = 0;
      for (std::size_t x = 0; x < _parent.size(); ++x) {
        if (_parent[x] == x) {
          renumber[x] = static_cast<std::int32_t>(next++);
        }
      }
      std::vector<std::int32_t> table(next * _num_gens, undefined);
      for (std::size_t x = 0; x < _parent.size(); ++x) {
        if (_parent[x] != x) {
          continue;
        }
        for (std::size_t g = 0; g < _num_gens; ++g) {
          std::int32_t const y = entry(x, g);
          table[static_cast<std::size_t>(renumber[x]) * _num_gens + g]
              = y == undefined ? undefined : renumber[static_cast<std::size_t>(y)];
        }
      }
      std::size_t const new_c = static_cast<std::size_t>(renumber[c]);
      _table                  = std::move(table);
      _parent.resize(next);
      for (std::size_t x = 0; x < next; ++x) {
        _parent[x] = x;
      }
      return new_c;
    }

    CosetTable finish() {
      compact(0);
      CosetTable t;
      t._generators = _generators;
      t._index      = _index;
      t._num_cosets = _parent.size();
      t._table.reserve(_table.size());
      for (std::int32_t x : _table) {
        if (x == undefined) {
          throw Error(ErrorKind::enumeration, "enumeration left a gap");
        }
        t._table.push_back(static_cast<std::uint32_t>(x));
      }
      return t;
    }

    std::size_t                           _limit;
    std::size_t                           _num_gens;
    std::vector<std::string>              _generators;
    std::map<std::string, std::size_t>    _index;
    std::vector<std::vector<std::size_t>> _relators;
    std::vector<std::size_t>              _parent;
    std::vector<std::int32_t>             _table;
    std::size_t                           _live = 0;
  };

  inline EnumerationResult coset_enumerate(GroupPresentation const& p,
                                           std::size_t limit = default_coset_limit) {
    return ToddCoxeter(p, limit).run();
  }

  namespace detail {
    inline std::vector<std::size_t> letters(CosetTable const&               t,
                                            std::span<std::string const> word) {
      std::vector<std::size_t> out;
      for (auto const& g : word) {
        auto idx = t.generator_index(g);
        if (!idx) {
          throw Error(ErrorKind::invalid_argument,
                      "word uses unknown generator '" + g + "'");
        }
        out.push_back(*idx);
      }
      return out;
    }
  }  // namespace detail

  // The coset reached from `start` by reading word left to right.
  inline std::uint32_t multiplication_action(CosetTable const&            t,
                                             std::span<std::string const> word,
                                             std::uint32_t                start = 0) {
    std::uint32_t c = start;
    for (std::size_t g : detail::letters(t, word)) {
      c = t.image(c, g);
    }
    return c;
  }

  inline std::uint32_t multiplication_action(CosetTable const&               t,
                                             std::vector<std::string> const& word,
                                             std::uint32_t                   start = 0) {
    return multiplication_action(t, std::span<std::string const>(word), start);
  }

  // True iff word^exponent fixes every coset, i.e. is the identity element.
  inline bool acts_trivially(CosetTable const&            t,
                             std::span<std::string const> word,
                             std::uint64_t                exponent = 1) {
    auto const                 gens = detail::letters(t, word);
    std::size_t const          n    = t.num_cosets();
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t c = 0; c < n; ++c) {
      std::uint32_t x = c;
      for (std::size_t g : gens) {
        x = t.image(x, g);
      }
      perm[c] = x;
    }
    // perm^exponent is trivial iff every cycle length divides exponent.
    std::vector<bool> seen(n, false);
    for (std::uint32_t c = 0; c < n; ++c) {
      if (seen[c]) {
        continue;
      }
      std::uint64_t len = 0;
      std::uint32_t x   = c;
      do {
        seen[x] = true;
        x       = perm[x];
        ++len;
      } while (x != c);
      if (exponent % len != 0) {
        return false;
      }
    }
    return true;
  }

  using GeneratorMap = std::map<std::string, std::vector<std::string>>;

  // Each source generator (vertex) goes to its image vertex.
  inline GeneratorMap induced_generator_map(Morphism const& m) {
    GeneratorMap out;
    for (auto const& [from, to] : m.named_vertex_map()) {
      out.emplace(from, std::vector<std::string>{to});
    }
    return out;
  }

  // True iff every source relator, pushed through genmap, is the identity
  // in the finite group described by the target table.
  inline bool verify_homomorphism(GeneratorMap const&      genmap,
                                  GroupPresentation const& source,
                                  CosetTable const&        target) {
    for (auto const& g : source.generators) {
      if (!genmap.count(g)) {
        throw Error(ErrorKind::invalid_argument,
                    "generator '" + g + "' is unmapped");
      }
    }
    for (auto const& r : source.relators) {
      std::vector<std::string> image;
      for (auto const& letter : r.word) {
        auto it = genmap.find(letter);
        if (it == genmap.end()) {
          throw Error(ErrorKind::invalid_argument,
                      "generator '" + letter + "' is unmapped");
        }
        image.insert(image.end(), it->second.begin(), it->second.end());
      }
      if (!acts_trivially(target, image, r.exponent)) {
        return false;
      }
    }
    return true;
  }

}  // namespace gcox

#endif  // GCOX_COSET_TABLE_HPP_
