#include "fibertor/witness.hpp"

#include "fibertor/error.hpp"
#include "fibertor/smith.hpp"
#include "fibertor/spectrum.hpp"

namespace fibertor {

  namespace {
    mpz_class factorial(unsigned long k) {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), k);
      return f;
    }
  }  // namespace

  UnipotentWitness unipotent_witness(IntMatrix const& a, mpz_class const& m) {
    if (m < 1) {
      throw InvalidInput("witness order must be positive");
    }
    SpectralClass const spectrum = classify_spectrum(a);
    if (spectrum.kind != SpectralKind::quasi_unipotent_infinite) {
      throw InvalidInput("unipotent witness needs a quasi-unipotent matrix of "
                         "infinite order, got "
                         + to_string(spectrum.kind));
    }
    std::size_t const k = a.rows();
    UnipotentWitness  w;
    w.order       = m;
    w.root_power  = spectrum.root_order;
    w.power       = factorial(k - 1) * m;
    w.total_power = w.power * w.root_power;

    w.unipotent       = power(a, w.root_power);
    w.nilpotent_power = power(minus_identity(w.unipotent), k);
    w.nilpotent       = w.nilpotent_power.is_zero();

    w.torsion_matrix = minus_identity(power(w.unipotent, w.power));
    w.divisible      = w.torsion_matrix.all_entries_divisible_by(m);

    SnfResult const snf = smith_normal_form(w.torsion_matrix);
    w.invariant_factors = snf.invariant_factors;
    w.free_rank         = snf.free_rank;
    for (auto const& d : snf.invariant_factors) {
      if (d != 0 && mpz_divisible_p(d.get_mpz_t(), m.get_mpz_t()) != 0) {
        w.witness_factor = d;
        w.has_order_m    = true;
        break;
      }
    }
    return w;
  }

  std::optional<unsigned long> minimal_witness_oracle(IntMatrix const& a,
                                                      mpz_class const& m,
                                                      unsigned long    n_cap) {
    if (!a.is_square()) {
      throw InvalidInput("witness search needs a square matrix");
    }
    IntMatrix an = IntMatrix::identity(a.rows());
    for (unsigned long n = 1; n <= n_cap; ++n) {
      an = an * a;
      if (cokernel(minus_identity(an)).has_element_of_order(m)) {
        return n;
      }
    }
    return std::nullopt;
  }

  bool binomial_divisibility_holds(unsigned long k, mpz_class const& m) {
    if (k < 1 || m < 1) {
      throw InvalidInput("binomial check needs k >= 1 and m >= 1");
    }
    mpz_class const n = factorial(k - 1) * m;
    if (!n.fits_ulong_p()) {
      throw ResourceLimit("binomial check exponent too large");
    }
    for (unsigned long i = 1; i + 1 <= k; ++i) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), n.get_ui(), i);
      if (mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()) == 0) {
        return false;
      }
    }
    return true;
  }

}  // namespace fibertor
