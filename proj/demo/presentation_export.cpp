// Prints the presentation of GVP(4) in each export format.

#include <cstdio>

#include "gcox.hpp"

int main() {
  auto const p = gcox::presentation_of(gcox::family::gvp(4));
  for (auto f : {gcox::ExportFormat::native, gcox::ExportFormat::gap,
                 gcox::ExportFormat::magma}) {
    std::printf("%s\n", gcox::export_presentation(p, f).c_str());
  }
}
