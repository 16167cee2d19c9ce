#pragma once

#include <string>

#include "fibertor/polynomial.hpp"

namespace fibertor {

  // Certified enclosure of a Mahler measure |a_d| * prod max(1, |root|).
  struct MahlerMeasure {
    double      value     = 1.0;  // nearest double to the enclosure midpoint
    double      log_value = 0.0;
    std::string digits;  // midpoint printed with `precision` decimals
    // |true - digits| <= error_bound < 10^-precision
    double error_bound = 0.0;
    int         precision = 12;
  };

  inline constexpr int max_mahler_precision = 100;

  // Cyclotomic factors are removed exactly, the rest is split into
  // square-free parts and its roots are isolated with Gershgorin disks of the
  // Weierstrass correction matrix. Throws InvalidInput for the zero
  // polynomial and ResourceLimit when the requested precision (in decimal
  // digits) cannot be certified.
  MahlerMeasure mahler_measure(IntPolynomial const& p, int precision = 12);

}  // namespace fibertor
