#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "fibertor/int_matrix.hpp"

namespace fibertor {

  // Smith normal form U * M * V = D with U, V unimodular and D diagonal with
  // entries d_1 | d_2 | ... | d_s > 0 followed by zeros.
  struct SnfResult {
    // The nonzero diagonal entries d_1 | ... | d_s (unit factors included).
    std::vector<mpz_class> invariant_factors;
    // Rank of the cokernel Z^rows / M Z^cols (equals the number of zero
    // diagonal entries for square input).
    std::size_t free_rank = 0;
    IntMatrix   u;
    IntMatrix   v;

    [[nodiscard]] IntMatrix diagonal(std::size_t rows, std::size_t cols) const;
  };

  SnfResult smith_normal_form(IntMatrix const& m);

  // Z^rows / M Z^cols = Z^free_rank + sum Z/d_i with every d_i > 1.
  struct Cokernel {
    std::size_t            free_rank = 0;
    std::vector<mpz_class> torsion;

    // |Tor|, which is 1 when the cokernel is free.
    [[nodiscard]] mpz_class torsion_order() const;

    // True iff some torsion factor is a multiple of m, i.e. the cokernel
    // contains an element of order exactly m.
    [[nodiscard]] bool has_element_of_order(mpz_class const& m) const;
  };

  Cokernel cokernel(IntMatrix const& m);
  Cokernel cokernel(SnfResult const& snf);

}  // namespace fibertor
