#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "fibertor/int_matrix.hpp"

namespace fibertor {

  // Certificate that coker(A^(e n) - I) contains an element of order m for a
  // quasi-unipotent A of infinite order:
  //   e = lcm of the orders of the roots of unity in the spectrum of A, so
  //       B = A^e - I is nilpotent;
  //   n = (k - 1)! m with k the size of A, so m | C(n, i) for 1 <= i < k and
  //       hence m divides every entry of (A^e)^n - I = sum C(n, i) B^i.
  struct UnipotentWitness {
    mpz_class     order = 1;      // m
    unsigned long root_power = 1;  // e
    mpz_class     power = 1;       // n = (k - 1)! m
    mpz_class     total_power = 1; // e n

    IntMatrix unipotent;        // A^e
    IntMatrix nilpotent_power;  // (A^e - I)^k
    IntMatrix torsion_matrix;   // (A^e)^n - I

    std::vector<mpz_class> invariant_factors;  // SNF of torsion_matrix
    std::size_t            free_rank = 0;
    mpz_class              witness_factor = 0;  // an invariant factor with m | d

    bool nilpotent   = false;  // (A^e - I)^k == 0
    bool divisible   = false;  // m | every entry of torsion_matrix
    bool has_order_m = false;  // witness_factor is a nonzero multiple of m

    [[nodiscard]] bool verified() const noexcept {
      return nilpotent && divisible && has_order_m;
    }
  };

  // Throws InvalidInput unless A is quasi-unipotent of infinite order and
  // m >= 1.
  UnipotentWitness unipotent_witness(IntMatrix const& a, mpz_class const& m);

  // Smallest n in 1..n_cap such that coker(A^n - I) has an element of
  // order m, by direct search.
  std::optional<unsigned long> minimal_witness_oracle(IntMatrix const& a,
                                                      mpz_class const& m,
                                                      unsigned long    n_cap);

  // m | C((k - 1)! m, i) for every 1 <= i <= k - 1.
  bool binomial_divisibility_holds(unsigned long k, mpz_class const& m);

}  // namespace fibertor
