// Prints the 6x6 monomial-basis matrix of B_(z + zbar) and its orthonormal
// counterpart.

#include "slantlab/matrix.hpp"
#include "slantlab/parse.hpp"

#include <cstdio>
#include <iostream>

int main() {
  using namespace slantlab;
  const OperatorExpr b = parse_word("B[z + zbar]");
  const OperatorMatrix m = build_matrix(b, 5, 5);
  std::cout << format_word(b) << ", monomial basis\n";
  for (std::size_t i = 0; i <= m.max_row; ++i) {
    for (std::size_t j = 0; j <= m.max_col; ++j) std::printf("%8s", to_string(m.entry(i, j)).c_str());
    std::printf("\n");
  }
  std::cout << "\northonormal basis\n";
  for (const auto& r : orthonormal_export(m)) {
    for (double v : r) std::printf("%8.4f", v);
    std::printf("\n");
  }
}
