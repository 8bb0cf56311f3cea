// Orders of a few classical Coxeter groups and family members, computed by
// coset enumeration.

#include <cstdio>
#include <string>
#include <vector>

#include "gcox.hpp"

int main() {
  namespace family = gcox::family;
  struct Case {
    std::string           name;
    gcox::WeightedComplex complex;
  };
  std::vector<Case> const cases{
      {"A3 (sympath 3)", family::sympath(3)},
      {"B3", family::coxeter(family::parse_coxeter_matrix("1,4,2;4,1,3;2,3,1"))},
      {"H3", family::coxeter(family::parse_coxeter_matrix("1,5,2;5,1,3;2,3,1"))},
      {"F4", family::coxeter(family::parse_coxeter_matrix(
                 "1,3,2,2;3,1,4,2;2,4,1,3;2,2,3,1"))},
      {"D6 (dihedral 6)", family::dihedral(gcox::Weight(6))},
      {"(Z2)^4 (complete2 4)", family::complete2(4)},
      {"GVP(4)", family::gvp(4)},
      {"Z2 * Z2 (dihedral inf)", family::dihedral(gcox::Weight::infinity())},
  };
  for (auto const& c : cases) {
    auto const p      = gcox::presentation_of(c.complex);
    auto const result = gcox::coset_enumerate(p, 200000);
    std::printf("%-24s %3zu generators %4zu relators  order %-16s abelianization (Z2)^%zu\n",
                c.name.c_str(), p.generators.size(), p.relators.size(),
                result.verdict().c_str(), gcox::abelianization_rank(p));
  }
}
