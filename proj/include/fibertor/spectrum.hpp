#pragma once

#include <string>
#include <vector>

#include "fibertor/int_matrix.hpp"
#include "fibertor/mahler.hpp"
#include "fibertor/polynomial.hpp"

namespace fibertor {

  enum class SpectralKind {
    finite_order,
    quasi_unipotent_infinite,
    has_large_eigenvalue
  };

  std::string to_string(SpectralKind kind);

  struct CyclotomicFactor {
    unsigned long order        = 1;  // N, for the factor Phi_N
    int           multiplicity = 0;

    friend bool operator==(CyclotomicFactor const&, CyclotomicFactor const&)
        = default;
  };

  struct SpectralClass {
    SpectralKind                  kind = SpectralKind::finite_order;
    IntPolynomial                 char_poly;
    std::vector<CyclotomicFactor> cyclotomic_part;
    // char_poly divided by all of its cyclotomic factors.
    IntPolynomial non_cyclotomic_part;
    // lcm of the orders in cyclotomic_part; for a fully cyclotomic char_poly
    // M^root_order has every eigenvalue equal to 1.
    unsigned long root_order = 1;
    MahlerMeasure mahler;
  };

  // Splits off the cyclotomic factors Phi_N (phi(N) <= deg p) exactly.
  std::vector<CyclotomicFactor> cyclotomic_factors(IntPolynomial const& p,
                                                   IntPolynomial* remainder);

  // Kronecker dichotomy for M in GL(k, Z). Throws InvalidInput when
  // |det M| != 1.
  SpectralClass classify_spectrum(IntMatrix const& m, int precision = 12);

}  // namespace fibertor
