#ifndef GCOX_ERRORS_HPP_
#define GCOX_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcox {

  // Every failure raised by the library carries one of these kinds. The CLI
  // prints the kind verbatim as the machine-readable error tag.
  enum class ErrorKind {
    invalid_argument,
    invalid_complex,
    degenerate_quotient,
    morphism,
    bound_exceeded,
    universal_property,
    presentation,
    enumeration,
    parse,
    io,
  };

  constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::invalid_argument: return "invalid-argument";
      case ErrorKind::invalid_complex: return "invalid-complex";
      case ErrorKind::degenerate_quotient: return "degenerate-quotient";
      case ErrorKind::morphism: return "morphism";
      case ErrorKind::bound_exceeded: return "bound-exceeded";
      case ErrorKind::universal_property: return "universal-property";
      case ErrorKind::presentation: return "presentation";
      case ErrorKind::enumeration: return "enumeration";
      case ErrorKind::parse: return "parse";
      case ErrorKind::io: return "io";
    }
    return "unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message)
        : std::runtime_error(message), _kind(kind) {}

    ErrorKind kind() const noexcept { return _kind; }

   private:
    ErrorKind _kind;
  };

}  // namespace gcox

#endif  // GCOX_ERRORS_HPP_
