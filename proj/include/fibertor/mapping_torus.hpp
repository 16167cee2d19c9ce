#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "fibertor/int_matrix.hpp"

namespace fibertor {

  // H_1 of the mapping torus of a map acting on H_1(F) = Z^k by A:
  //   Z + coker(A - I).
  struct MappingTorusH1 {
    std::size_t            betti = 1;
    std::vector<mpz_class> invariant_factors;  // torsion part, all > 1
    mpz_class              torsion_order = 1;
  };

  // Throws InvalidInput unless |det A| = 1.
  MappingTorusH1 mapping_torus_h1(IntMatrix const& a);

  // |Tor coker(A^n - I)|.
  mpz_class torsion_order_of_power(IntMatrix const& a, unsigned long n);

  struct GrowthSample {
    unsigned long n = 1;
    mpz_class     torsion_order = 1;
    double        log_torsion_over_n = 0.0;
    double        target             = 0.0;  // log Mahler measure of char_poly
  };

  // Samples for n = 1, ..., n_max; powers are accumulated incrementally.
  std::vector<GrowthSample> growth_sequence(IntMatrix const& a,
                                            unsigned long    n_max);

  // Natural logarithm of a positive big integer.
  double log_of(mpz_class const& x);

}  // namespace fibertor
