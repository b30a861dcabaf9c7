// Walks through f = z + zbar^2, g = z + zbar: the two products B_f B_g and
// B_g B_f on z^4, term by term, and the commutator scan that separates them.

#include "slantlab/commutator.hpp"
#include "slantlab/parse.hpp"
#include "slantlab/remark.hpp"

#include <iostream>

int main() {
  using namespace slantlab;
  const RemarkReport rep = remark_counterexample(RemarkVariant::Zbar2);
  const RemarkRow& row = rep.rows.at(rep.selected);
  std::cout << "input z^" << row.input_degree << ", constant terms\n";
  for (const auto& t : row.lhs_terms) std::cout << "  lhs  " << t.label << " = " << to_string(t.engine) << "\n";
  for (const auto& t : row.rhs_terms) std::cout << "  rhs  " << t.label << " = " << to_string(t.engine) << "\n";
  std::cout << "  total " << to_string(row.lhs_const) << " vs " << to_string(row.rhs_const) << "\n\n";

  const HarmonicSymbol f = parse_symbol("z + zbar^2"), g = parse_symbol("z + zbar");
  const CommutatorReport scan = scan_commutator(f, g, 6);
  std::cout << "[B_f, B_g] for f = " << format_symbol(f) << ", g = " << format_symbol(g) << "\n";
  for (Degree k = 0; k <= scan.k_max; ++k)
    std::cout << "  z^" << k << " -> " << format_poly(commutator_column(f, g, k)) << "\n";
  if (scan.first_witness)
    std::cout << "first witness: k=" << scan.first_witness->k << " s=" << scan.first_witness->s << " value "
              << to_string(scan.first_witness->value) << "\n";
}
