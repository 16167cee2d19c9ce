#include "fibertor/spectrum.hpp"

#include <numeric>

#include "fibertor/error.hpp"

namespace fibertor {

  std::string to_string(SpectralKind kind) {
    switch (kind) {
      case SpectralKind::finite_order:
        return "finite_order";
      case SpectralKind::quasi_unipotent_infinite:
        return "quasi_unipotent_infinite";
      case SpectralKind::has_large_eigenvalue:
        return "has_large_eigenvalue";
    }
    return "unknown";
  }

  std::vector<CyclotomicFactor> cyclotomic_factors(IntPolynomial const& p,
                                                   IntPolynomial* remainder) {
    std::vector<CyclotomicFactor> result;
    IntPolynomial                 rest = p;
    for (unsigned long n : cyclotomic_orders_up_to_degree(p.degree())) {
      IntPolynomial const phi = cyclotomic(n);
      int                 mult = 0;
      while (rest.degree() >= phi.degree()) {
        auto q = divide_exact(rest, phi);
        if (!q) {
          break;
        }
        rest = std::move(*q);
        ++mult;
      }
      if (mult > 0) {
        result.push_back({n, mult});
      }
    }
    if (remainder != nullptr) {
      *remainder = std::move(rest);
    }
    return result;
  }

  SpectralClass classify_spectrum(IntMatrix const& m, int precision) {
    if (!m.is_unimodular()) {
      throw InvalidInput("spectral classification needs |det| = 1");
    }
    SpectralClass result;
    result.char_poly = char_poly(m);
    result.cyclotomic_part
        = cyclotomic_factors(result.char_poly, &result.non_cyclotomic_part);
    for (auto const& f : result.cyclotomic_part) {
      result.root_order = std::lcm(result.root_order, f.order);
    }
    if (result.non_cyclotomic_part.degree() == 0) {
      // Every eigenvalue is a root of unity: finite order iff M^L = I.
      result.kind = power(m, result.root_order).is_identity()
                        ? SpectralKind::finite_order
                        : SpectralKind::quasi_unipotent_infinite;
      result.mahler = mahler_measure(result.char_poly, precision);
      return result;
    }
    result.kind   = SpectralKind::has_large_eigenvalue;
    result.mahler = mahler_measure(result.non_cyclotomic_part, precision);
    if (!(result.mahler.value - result.mahler.error_bound > 1.0)) {
      throw InternalError("non-cyclotomic unimodular polynomial with Mahler "
                          "measure not certified above 1");
    }
    return result;
  }

}  // namespace fibertor
