#include "fibertor/mapping_torus.hpp"

#include <cmath>

#include "fibertor/error.hpp"
#include "fibertor/polynomial.hpp"
#include "fibertor/smith.hpp"
#include "fibertor/mahler.hpp"

namespace fibertor {

  namespace {
    void require_unimodular(IntMatrix const& a) {
      if (!a.is_unimodular()) {
        throw InvalidInput("monodromy action must be invertible over Z");
      }
    }
  }  // namespace

  MappingTorusH1 mapping_torus_h1(IntMatrix const& a) {
    require_unimodular(a);
    Cokernel const c = cokernel(minus_identity(a));
    MappingTorusH1 result;
    result.betti             = 1 + c.free_rank;
    result.invariant_factors = c.torsion;
    result.torsion_order     = c.torsion_order();
    return result;
  }

  mpz_class torsion_order_of_power(IntMatrix const& a, unsigned long n) {
    require_unimodular(a);
    if (n == 0) {
      throw InvalidInput("torus power must be positive");
    }
    return cokernel(minus_identity(power(a, n))).torsion_order();
  }

  double log_of(mpz_class const& x) {
    if (x <= 0) {
      throw InvalidInput("logarithm of a non-positive integer");
    }
    long         exp  = 0;
    double const mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
  }

  std::vector<GrowthSample> growth_sequence(IntMatrix const& a,
                                            unsigned long    n_max) {
    require_unimodular(a);
    double const target = mahler_measure(char_poly(a)).log_value;
    std::vector<GrowthSample> samples;
    IntMatrix                 an = IntMatrix::identity(a.rows());
    for (unsigned long n = 1; n <= n_max; ++n) {
      an = an * a;
      GrowthSample s;
      s.n                  = n;
      s.torsion_order      = cokernel(minus_identity(an)).torsion_order();
      s.log_torsion_over_n = log_of(s.torsion_order) / static_cast<double>(n);
      s.target             = target;
      samples.push_back(std::move(s));
    }
    return samples;
  }

}  // namespace fibertor
