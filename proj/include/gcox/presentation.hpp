#ifndef GCOX_PRESENTATION_HPP_
#define GCOX_PRESENTATION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcox/complex.hpp"
#include "gcox/cycle.hpp"
#include "gcox/errors.hpp"

namespace gcox {

  // word^exponent = 1, with word canonical under rotation and reversal.
  struct Relator {
    std::vector<std::string> word;
    std::uint64_t            exponent = 1;

    friend bool operator==(Relator const&, Relator const&)  = default;
    friend auto operator<=>(Relator const&, Relator const&) = default;
  };

  struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Relator>     relators;

    friend bool operator==(GroupPresentation const&, GroupPresentation const&)
        = default;
  };

  // Rotations and reversals of a relator word give equivalent relations
  // when every generator is an involution, so the least one stands for all.
  inline Relator normalize_relator(std::vector<std::string> const& word,
                                   std::uint64_t                   exponent) {
    if (word.empty()) {
      throw Error(ErrorKind::presentation, "relator word is empty");
    }
    if (exponent == 0) {
      throw Error(ErrorKind::presentation, "relator exponent must be >= 1");
    }
    return {canonical_dihedral_form(word), exponent};
  }

  // Generators are the vertices. Relators, in order: v^2 per vertex,
  // (uv)^weight per finite-weight edge, (v_1...v_t)^weight per cell read
  // along its canonical boundary. Infinite edges impose nothing.
  inline GroupPresentation presentation_of(WeightedComplex const& c) {
    GroupPresentation p;
    p.generators = c.vertices();
    for (auto const& v : c.vertices()) {
      p.relators.push_back({{v}, 2});
    }
    for (auto const& e : c.edges()) {
      if (e.weight.is_finite()) {
        p.relators.push_back(
            normalize_relator({c.name(e.a), c.name(e.b)}, e.weight.value()));
      }
    }
    for (std::size_t f = 0; f < c.cells().size(); ++f) {
      p.relators.push_back(
          normalize_relator(c.boundary_names(f), c.cells()[f].weight.value()));
    }
    return p;
  }

  // d with G^ab = (Z_2)^d. Every generator must carry its square relator,
  // so the abelianization is F_2^n modulo the odd-exponent relator rows.
  inline std::size_t abelianization_rank(GroupPresentation const& p) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
      index.emplace(p.generators[i], i);
    }
    std::set<std::string> squared;
    for (auto const& r : p.relators) {
      if (r.word.size() == 1 && r.exponent == 2) {
        squared.insert(r.word.front());
      }
    }
    for (auto const& g : p.generators) {
      if (!squared.count(g)) {
        throw Error(ErrorKind::presentation,
                    "missing square relator for generator '" + g + "'");
      }
    }
    std::size_t const n     = p.generators.size();
    std::size_t const words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (auto const& r : p.relators) {
      if (r.exponent % 2 == 0) {
        continue;
      }
      std::vector<std::uint64_t> row(words, 0);
      for (auto const& letter : r.word) {
        auto it = index.find(letter);
        if (it == index.end()) {
          throw Error(ErrorKind::presentation,
                      "relator uses unknown generator '" + letter + "'");
        }
        row[it->second / 64] ^= std::uint64_t(1) << (it->second % 64);
      }
      rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
      std::uint64_t const bit   = std::uint64_t(1) << (col % 64);
      std::size_t const   w     = col / 64;
      std::size_t         pivot = rank;
      while (pivot < rows.size() && !(rows[pivot][w] & bit)) {
        ++pivot;
      }
      if (pivot == rows.size()) {
        continue;
      }
      std::swap(rows[rank], rows[pivot]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r != rank && (rows[r][w] & bit)) {
          for (std::size_t k = 0; k < words; ++k) {
            rows[r][k] ^= rows[rank][k];
          }
        }
      }
      ++rank;
    }
    return n - rank;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text formats
  ////////////////////////////////////////////////////////////////////////

  enum class ExportFormat { native, gap, magma };

  // Identifier substitution for GAP and Magma, applied in this order:
  //   1. every character outside [A-Za-z0-9_] becomes '_'
  //   2. a leading digit or '_' gets the prefix "g"
  //   3. names equal to a reserved word of the target system, or to the
  //      script's own variables F and G, or to an earlier sanitized name,
  //      get the suffix "_1", "_2", ... (first free one)
  // Generators are processed in presentation order, so the mapping is
  // deterministic. The native format keeps names verbatim.
  inline std::vector<std::string>
  sanitized_generators(std::vector<std::string> const& generators,
                       ExportFormat                    format) {
    if (format == ExportFormat::native) {
      return generators;
    }
    static std::set<std::string> const gap_reserved = {
        "F",      "G",        "and",       "atomic",    "break",  "continue",
        "do",     "elif",     "else",      "end",       "false",  "fi",
        "for",    "function", "if",        "in",        "local",  "mod",
        "not",    "od",       "or",        "readonly",  "readwrite",
        "rec",    "repeat",   "return",    "then",      "true",   "until",
        "while",  "quit",     "QUIT",      "IsBound",   "Unbind", "TryNextMethod",
        "Info",   "Assert"};
    static std::set<std::string> const magma_reserved = {
        "F",       "G",         "and",     "assert",  "by",        "case",
        "cat",     "catch",     "clear",   "cmpeq",   "cmpne",     "continue",
        "declare", "default",   "delete",  "diff",    "div",       "do",
        "elif",    "else",      "end",     "eq",      "error",     "eval",
        "exists",  "exit",      "false",   "for",     "forall",    "forward",
        "fprintf", "freeze",    "function", "ge",     "gt",        "if",
        "iload",   "import",    "in",      "intrinsic", "is",      "join",
        "le",      "load",      "local",   "lt",      "meet",      "mod",
        "ne",      "not",       "notadj",  "notin",   "notsubset", "or",
        "print",   "printf",    "procedure", "quit",  "random",    "read",
        "readi",   "repeat",    "require", "requirege", "requirerange",
        "restore", "return",    "save",    "sdiff",   "select",    "subset",
        "then",    "time",      "to",      "true",    "try",       "until",
        "vprint",  "vprintf",   "vtime",   "when",    "where",     "while",
        "xor"};
    auto const& reserved
        = format == ExportFormat::magma ? magma_reserved : gap_reserved;
    std::set<std::string>    taken;
    std::vector<std::string> out;
    for (auto const& g : generators) {
      std::string s;
      for (char c : g) {
        bool const ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')
                        || (c >= '0' && c <= '9') || c == '_';
        s += ok ? c : '_';
      }
      if (s.empty() || (s[0] >= '0' && s[0] <= '9') || s[0] == '_') {
        s = "g" + s;
      }
      if (reserved.count(s) || taken.count(s)) {
        for (std::size_t k = 1;; ++k) {
          std::string candidate = s + "_" + std::to_string(k);
          if (!reserved.count(candidate) && !taken.count(candidate)) {
            s = std::move(candidate);
            break;
          }
        }
      }
      taken.insert(s);
      out.push_back(std::move(s));
    }
    return out;
  }

  namespace detail {
    inline std::string
    relator_text(Relator const&                            r,
                 std::map<std::string, std::string> const* rename) {
      auto name = [&](std::string const& g) -> std::string const& {
        return rename == nullptr ? g : rename->at(g);
      };
      std::string body;
      if (r.word.size() == 1) {
        body = name(r.word.front());
      } else {
        body = "(";
        for (std::size_t i = 0; i < r.word.size(); ++i) {
          body += (i ? "*" : "") + name(r.word[i]);
        }
        body += ")";
      }
      return body + "^" + std::to_string(r.exponent);
    }
  }  // namespace detail

  // Deterministic text. native:
  //   gens: a b c
  //   rel: a^2
  //   rel: (a*b)^3
  // with no trailing newline. gap and magma produce scripts that define the
  // free group F and the quotient G.
  inline std::string export_presentation(GroupPresentation const& p,
                                         ExportFormat             format) {
    std::ostringstream out;
    if (format == ExportFormat::native) {
      out << "gens:";
      for (auto const& g : p.generators) {
        out << ' ' << g;
      }
      for (auto const& r : p.relators) {
        out << "\nrel: " << detail::relator_text(r, nullptr);
      }
      return out.str();
    }
    auto const                         names = sanitized_generators(p.generators, format);
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < names.size(); ++i) {
      rename.emplace(p.generators[i], names[i]);
    }
    char const* comment = format == ExportFormat::gap ? "#" : "//";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] != p.generators[i]) {
        out << comment << " generator " << p.generators[i] << " is " << names[i]
            << '\n';
      }
    }
    if (format == ExportFormat::gap) {
      if (names.empty()) {
        out << "F := FreeGroup(0);;\n";
      } else {
        out << "F := FreeGroup(";
        for (std::size_t i = 0; i < names.size(); ++i) {
          out << (i ? ", " : "") << '"' << names[i] << '"';
        }
        out << ");;\n";
        for (std::size_t i = 0; i < names.size(); ++i) {
          out << names[i] << " := F." << (i + 1) << ";;\n";
        }
      }
      out << "G := F / [";
      for (std::size_t i = 0; i < p.relators.size(); ++i) {
        out << (i ? ", " : " ") << detail::relator_text(p.relators[i], &rename);
      }
      out << " ];;\n";
    } else {
      if (names.empty()) {
        out << "F := FreeGroup(0);\n";
        out << "G := quo< F |";
      } else {
        std::string list;
        for (std::size_t i = 0; i < names.size(); ++i) {
          list += (i ? "," : "") + names[i];
        }
        out << "F<" << list << "> := FreeGroup(" << names.size() << ");\n";
        out << "G<" << list << "> := quo< F |";
      }
      for (std::size_t i = 0; i < p.relators.size(); ++i) {
        out << (i ? ", " : " ") << detail::relator_text(p.relators[i], &rename);
      }
      out << " >;\n";
    }
    return out.str();
  }

  // Inverse of the native export. Relators are normalized on the way in.
  inline GroupPresentation parse_native(std::string_view text) {
    GroupPresentation p;
    bool              have_gens = false;
    std::size_t       line_no   = 0;
    std::size_t       pos       = 0;
    auto              fail      = [&](std::string const& msg) {
      return Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + msg);
    };
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
      }
      return s;
    };
    std::set<std::string> known;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = trim(text.substr(pos, end - pos));
      pos                   = end + 1;
      ++line_no;
      if (line.empty()) {
        continue;
      }
      if (line.starts_with("gens:")) {
        if (have_gens) {
          throw fail("duplicate gens line");
        }
        have_gens = true;
        std::istringstream in{std::string(line.substr(5))};
        std::string        g;
        while (in >> g) {
          if (!is_valid_identifier(g) || !known.insert(g).second) {
            throw fail("bad or repeated generator '" + g + "'");
          }
          p.generators.push_back(g);
        }
        continue;
      }
      if (!line.starts_with("rel:")) {
        throw fail("expected 'gens:' or 'rel:'");
      }
      if (!have_gens) {
        throw fail("relator before gens line");
      }
      std::string_view body  = trim(line.substr(4));
      std::size_t      caret = body.rfind('^');
      if (caret == std::string_view::npos) {
        throw fail("relator lacks '^exponent'");
      }
      std::string_view const exp_text = body.substr(caret + 1);
      std::uint64_t          exponent = 0;
      if (exp_text.empty() || exp_text.size() > 18) {
        throw fail("bad exponent");
      }
      for (char c : exp_text) {
        if (c < '0' || c > '9') {
          throw fail("bad exponent");
        }
        exponent = exponent * 10 + static_cast<std::uint64_t>(c - '0');
      }
      body = body.substr(0, caret);
      std::vector<std::string> word;
      if (body.find('*') == std::string_view::npos) {
        word.emplace_back(body);
      } else {
        if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
          throw fail("multi-letter relator must be parenthesized");
        }
        body = body.substr(1, body.size() - 2);
        std::size_t start = 0;
        while (true) {
          std::size_t star = body.find('*', start);
          word.emplace_back(body.substr(start, star == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : star - start));
          if (star == std::string_view::npos) {
            break;
          }
          start = star + 1;
        }
      }
      for (auto const& letter : word) {
        if (!known.count(letter)) {
          throw fail("unknown generator '" + letter + "'");
        }
      }
      try {
        p.relators.push_back(normalize_relator(word, exponent));
      } catch (Error const& e) {
        throw fail(e.what());
      }
    }
    if (!have_gens) {
      throw Error(ErrorKind::parse, "missing gens line");
    }
    return p;
  }

}  // namespace gcox

#endif  // GCOX_PRESENTATION_HPP_
