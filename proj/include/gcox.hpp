#ifndef GCOX_HPP_
#define GCOX_HPP_

// Everything except the JSON document layer (gcox/document.hpp) and the
// command-line layer (gcox/cli.hpp), which need vendored third-party headers.

#include "gcox/category.hpp"
#include "gcox/complex.hpp"
#include "gcox/coset_table.hpp"
#include "gcox/cycle.hpp"
#include "gcox/errors.hpp"
#include "gcox/families.hpp"
#include "gcox/morphism.hpp"
#include "gcox/presentation.hpp"
#include "gcox/quotient.hpp"
#include "gcox/weight.hpp"

#endif  // GCOX_HPP_
