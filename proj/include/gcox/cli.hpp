#ifndef GCOX_CLI_HPP_
#define GCOX_CLI_HPP_

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcox/category.hpp"
#include "gcox/complex.hpp"
#include "gcox/coset_table.hpp"
#include "gcox/document.hpp"
#include "gcox/errors.hpp"
#include "gcox/families.hpp"
#include "gcox/morphism.hpp"
#include "gcox/presentation.hpp"
#include "gcox/quotient.hpp"

// Exit codes: 0 success, 1 domain error, 2 usage error. Domain errors print
// exactly one line "error: <kind>: <message>" on stderr.

namespace gcox::cli {

  constexpr int exit_ok     = 0;
  constexpr int exit_domain = 1;
  constexpr int exit_usage  = 2;

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::io, "cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  // An empty path or "-" writes to out.
  inline void write_output(std::string const& path, std::string const& text,
                           std::ostream& out) {
    if (path.empty() || path == "-") {
      out << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!(file << text)) {
      throw Error(ErrorKind::io, "cannot write '" + path + "'");
    }
  }

  inline ComplexRef load_complex(std::string const& path) {
    try {
      return make_ref(parse_complex(read_file(path)));
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::parse) {
        throw Error(ErrorKind::parse, path + ": " + e.what());
      }
      throw;
    }
  }

  inline VertexMap load_map(std::string const& path) {
    try {
      return parse_vertex_map(read_file(path));
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::parse) {
        throw Error(ErrorKind::parse, path + ": " + e.what());
      }
      throw;
    }
  }

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted 2-complexes and their generalized Coxeter groups", "gcox"};
    app.require_subcommand(1);
    std::function<void()> action;

    // validate
    std::string file;
    bool        lax = false;
    auto*       validate_cmd
        = app.add_subcommand("validate", "Check a complex document against the axioms");
    validate_cmd->add_option("FILE", file, "Complex document")->required();
    validate_cmd->add_flag("--lax", lax, "Accept valid documents in non-canonical order");
    validate_cmd->callback([&] {
      action = [&] {
        RawComplex const raw    = parse_raw_complex(read_file(file));
        auto const       report = validate(raw);
        if (!report.ok()) {
          throw Error(ErrorKind::invalid_complex, report.to_string());
        }
        if (!lax && !is_canonical(raw)) {
          throw Error(ErrorKind::invalid_complex,
                      "document is valid but not in canonical form");
        }
        out << "ok\n";
      };
    });

    // present
    std::string format = "native";
    auto*       present_cmd
        = app.add_subcommand("present", "Print the group presentation of a complex");
    present_cmd->add_option("FILE", file, "Complex document")->required();
    present_cmd->add_option("--format", format, "native, gap or magma")
        ->check(CLI::IsMember({"native", "gap", "magma"}));
    present_cmd->callback([&] {
      action = [&] {
        auto const   p = presentation_of(*load_complex(file));
        ExportFormat f = format == "gap"     ? ExportFormat::gap
                         : format == "magma" ? ExportFormat::magma
                                             : ExportFormat::native;
        out << export_presentation(p, f) << "\n";
      };
    });

    // order
    std::size_t limit     = default_coset_limit;
    auto*       order_cmd = app.add_subcommand("order", "Compute the group order by coset enumeration");
    order_cmd->add_option("FILE", file, "Complex document")->required();
    order_cmd->add_option("--limit", limit, "Maximum number of live cosets")
        ->check(CLI::PositiveNumber);
    order_cmd->callback([&] {
      action = [&] {
        auto const result = coset_enumerate(presentation_of(*load_complex(file)), limit);
        out << result.verdict() << "\n";
        if (!result.completed()) {
          throw Error(ErrorKind::enumeration,
                      "coset limit reached: " + result.verdict());
        }
      };
    });

    // abelianize
    auto* abelianize_cmd
        = app.add_subcommand("abelianize", "Print d where the abelianization is (Z2)^d");
    abelianize_cmd->add_option("FILE", file, "Complex document")->required();
    abelianize_cmd->callback([&] {
      action = [&] {
        out << "rank "
            << abelianization_rank(presentation_of(*load_complex(file))) << "\n";
      };
    });

    // build
    std::string              family_name;
    std::vector<std::string> family_args;
    std::string              output;
    auto* build_cmd = app.add_subcommand("build", "Write a complex from a named family");
    build_cmd->add_option("FAMILY", family_name, "Family name")
        ->required()
        ->check(CLI::IsMember(family::family_names()));
    build_cmd->add_option("ARGS", family_args, "Family parameters");
    build_cmd->add_option("-o,--output", output, "Output file (default: stdout)");
    build_cmd->callback([&] {
      action = [&] {
        write_output(output, serialize(family::build(family_name, family_args)) + "\n", out);
      };
    });

    // op
    std::string operation;
    std::string file_a;
    std::string file_b;
    std::string phi_file;
    std::string psi_file;
    auto*       op_cmd = app.add_subcommand("op", "Apply a categorical construction");
    op_cmd->add_option("OPERATION", operation, "union, product, equalize or coequalize")
        ->required()
        ->check(CLI::IsMember({"union", "product", "equalize", "coequalize"}));
    op_cmd->add_option("A", file_a, "First complex document")->required();
    op_cmd->add_option("B", file_b, "Second complex document")->required();
    op_cmd->add_option("--phi", phi_file, "Map A -> B for equalize/coequalize");
    op_cmd->add_option("--psi", psi_file, "Map A -> B for equalize/coequalize");
    op_cmd->add_flag("--lax", lax, "Collapse degenerate cells in coequalize");
    op_cmd->add_option("-o,--output", output, "Output file (default: stdout)");
    op_cmd->callback([&] {
      bool const parallel = operation == "equalize" || operation == "coequalize";
      if (parallel && (phi_file.empty() || psi_file.empty())) {
        throw UsageError(operation + " requires --phi and --psi");
      }
      if (!parallel && (!phi_file.empty() || !psi_file.empty() || lax)) {
        throw UsageError(operation + " takes no --phi, --psi or --lax");
      }
      if (operation == "equalize" && lax) {
        throw UsageError("--lax applies only to coequalize");
      }
      action = [&] {
        ComplexRef const   a = load_complex(file_a);
        ComplexRef const   b = load_complex(file_b);
        auto const       result = [&] {
          if (operation == "union") {
            return disjoint_union({a, b});
          }
          if (operation == "product") {
            return strong_product({a, b});
          }
          Morphism const phi = extend_from_vertex_map(a, b, load_map(phi_file));
          Morphism const psi = extend_from_vertex_map(a, b, load_map(psi_file));
          if (operation == "equalize") {
            return equalizer(phi, psi);
          }
          return coequalizer(phi, psi, lax ? QuotientMode::lax : QuotientMode::strict);
        }();
        write_output(output, serialize(*result.object) + "\n", out);
      };
    });

    // hom-check
    std::string map_file;
    auto*       hom_cmd = app.add_subcommand(
        "hom-check", "Check a vertex map extends to a morphism and induces a homomorphism");
    hom_cmd->add_option("SRC", file_a, "Source complex document")->required();
    hom_cmd->add_option("DST", file_b, "Target complex document")->required();
    hom_cmd->add_option("--map", map_file, "Vertex map document")->required();
    hom_cmd->add_option("--limit", limit, "Maximum number of live cosets")
        ->check(CLI::PositiveNumber);
    hom_cmd->callback([&] {
      action = [&] {
        ComplexRef const src = load_complex(file_a);
        ComplexRef const dst = load_complex(file_b);
        Morphism const   m   = extend_from_vertex_map(src, dst, load_map(map_file));
        out << "morphism: ok\n";
        auto const table = coset_enumerate(presentation_of(*dst), limit);
        if (!table.completed()) {
          throw Error(ErrorKind::enumeration,
                      "target group not enumerated: " + table.verdict());
        }
        if (!verify_homomorphism(induced_generator_map(m), presentation_of(*src),
                                 table.table())) {
          throw Error(ErrorKind::presentation,
                      "a source relator is not trivial in the target group");
        }
        out << "homomorphism: verified (target order " << table.verdict() << ")\n";
      };
    });

    auto one_line = [](std::string s) {
      std::replace(s.begin(), s.end(), '\n', ' ');
      return s;
    };
    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      err << "error: usage: " << one_line(e.what()) << "\n";
      return exit_usage;
    } catch (UsageError const& e) {
      err << "error: usage: " << one_line(e.what()) << "\n";
      return exit_usage;
    }
    try {
      action();
    } catch (Error const& e) {
      err << "error: " << to_string(e.kind()) << ": " << one_line(e.what()) << "\n";
      return exit_domain;
    }
    return exit_ok;
  }

}  // namespace gcox::cli

#endif  // GCOX_CLI_HPP_
