#pragma once

#include <vector>

#include "lagcoh/module.hpp"
#include "lagcoh/varieties.hpp"

namespace lagcoh {

// Presentation of the conormal module I/I^2 as a quotient of O_L^r (r = number
// of ideal generators): rows R_j with sum_a R_{ja} f_a in I^2... more precisely
// the kernel of O_L^r -> I/I^2 is generated by the ambient syzygy rows of the
// generators, with entries reduced to normal form modulo I (zero rows from
// I-multiples dropped).
struct ConormalPresentation {
  int r = 0;                            // generator count of the ideal
  std::vector<ModuleVector> relations;  // rows over the quotient ring
  std::vector<long> row_degrees;        // deg(R_{ja}) + d_a, constant in a
};

ConormalPresentation conormal_presentation(const LagrangianPresentation& variety,
                                           const GBOptions& opts = {});

// Structure constants of the bracket on the generators: exact ambient
// identities {f_a, f_b} = sum_e c[a][b][e] f_e for a < b, with deg c[a][b][e]
// = d_a + d_b - W - d_e.  nf mirrors c with entries reduced modulo the ideal.
struct BracketStructure {
  std::vector<std::vector<std::vector<Polynomial>>> c;
  std::vector<std::vector<std::vector<Polynomial>>> nf;
};

BracketStructure bracket_structure(const LagrangianPresentation& variety,
                                   const GBOptions& opts = {});

}  // namespace lagcoh
