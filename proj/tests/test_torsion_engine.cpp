#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "fibertor/error.hpp"
#include "fibertor/int_matrix.hpp"
#include "fibertor/mapping_torus.hpp"
#include "fibertor/polynomial.hpp"
#include "fibertor/smith.hpp"
#include "fibertor/spectrum.hpp"
#include "fibertor/witness.hpp"
#include "oracles.hpp"

using fibertor::IntMatrix;

namespace {

  std::vector<mpz_class> z(std::initializer_list<long> values) {
    return {values.begin(), values.end()};
  }

  std::vector<mpz_class> phi_coeffs(unsigned long n) {
    return fibertor::cyclotomic(n).coefficients();
  }

  double const golden_log = std::log((3.0 + std::sqrt(5.0)) / 2.0);

}  // namespace

TEST_CASE("mapping torus homology examples") {
  auto const id = fibertor::mapping_torus_h1(IntMatrix::identity(2));
  CHECK(id.betti == 3);
  CHECK(id.invariant_factors.empty());
  CHECK(id.torsion_order == 1);

  auto const anosov = fibertor::mapping_torus_h1(IntMatrix{{2, 1}, {1, 1}});
  CHECK(anosov.betti == 1);
  CHECK(anosov.torsion_order == 1);

  auto const shear = fibertor::mapping_torus_h1(IntMatrix{{1, 12}, {0, 1}});
  CHECK(shear.betti == 2);
  CHECK(shear.invariant_factors == z({12}));
  CHECK(shear.torsion_order == 12);

  auto const neg = fibertor::mapping_torus_h1(IntMatrix{{-1, 0}, {0, -1}});
  CHECK(neg.betti == 1);
  CHECK(neg.invariant_factors == z({2, 2}));

  CHECK_THROWS_AS(fibertor::mapping_torus_h1(IntMatrix{{2, 0}, {0, 1}}),
                  fibertor::InvalidInput);
}

TEST_CASE("torsion of powers against Lucas numbers") {
  IntMatrix const a{{2, 1}, {1, 1}};
  CHECK(fibertor::torsion_order_of_power(a, 1) == 1);
  CHECK(fibertor::torsion_order_of_power(a, 2) == 5);
  CHECK(fibertor::torsion_order_of_power(a, 3) == 16);
  for (unsigned n = 1; n <= 40; ++n) {
    CHECK(fibertor::torsion_order_of_power(a, n) == oracle::lucas(2 * n) - 2);
  }
  for (unsigned long n = 1; n <= 20; ++n) {
    CHECK(fibertor::torsion_order_of_power(IntMatrix{{1, 1}, {0, 1}}, n) == n);
    CHECK(fibertor::torsion_order_of_power(IntMatrix::identity(3), n) == 1);
  }
}

TEST_CASE("torsion of powers is |det| when A^n - I is nonsingular") {
  std::mt19937_64 rng(31);
  int             checked = 0;
  while (checked < 40) {
    auto [p, q] = oracle::random_unimodular(3, 8, rng);
    auto const cls = fibertor::classify_spectrum(p);
    if (cls.kind != fibertor::SpectralKind::has_large_eigenvalue) {
      continue;
    }
    for (unsigned long n = 1; n <= 6; ++n) {
      auto const b = fibertor::minus_identity(fibertor::power(p, n));
      std::vector<std::vector<mpz_class>> rows(3, std::vector<mpz_class>(3));
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          rows[i][j] = b(i, j);
        }
      }
      mpz_class const det = oracle::cofactor_det(rows);
      if (det != 0) {
        CHECK(fibertor::torsion_order_of_power(p, n) == abs(det));
      }
      // Hadamard's inequality
      double bound = 1.0;
      for (std::size_t i = 0; i < 3; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < 3; ++j) {
          s += rows[i][j].get_d() * rows[i][j].get_d();
        }
        bound *= std::sqrt(s);
      }
      if (det != 0) {
        CHECK(mpz_class(abs(det)).get_d() <= bound * (1 + 1e-12));
      }
    }
    ++checked;
  }
}

TEST_CASE("growth sequence") {
  auto const samples = fibertor::growth_sequence(IntMatrix{{2, 1}, {1, 1}}, 50);
  REQUIRE(samples.size() == 50);
  for (auto const& s : samples) {
    CHECK(s.torsion_order == oracle::lucas(2 * s.n) - 2);
    CHECK(s.target == doctest::Approx(golden_log).epsilon(1e-12));
  }
  CHECK(std::abs(samples[19].log_torsion_over_n - golden_log) < 0.01);
  CHECK(std::abs(samples[49].log_torsion_over_n - golden_log) < 0.002);

  auto const unip = fibertor::growth_sequence(IntMatrix{{1, 1}, {0, 1}}, 40);
  for (auto const& s : unip) {
    CHECK(s.target == 0.0);
    CHECK(s.torsion_order == s.n);
    CHECK(s.log_torsion_over_n
          == doctest::Approx(std::log(double(s.n)) / s.n));
  }

  for (auto const& s : fibertor::growth_sequence(IntMatrix::identity(2), 10)) {
    CHECK(s.torsion_order == 1);
    CHECK(s.log_torsion_over_n == 0.0);
    CHECK(s.target == 0.0);
  }
}

TEST_CASE("unipotent witness examples") {
  auto const w1 = fibertor::unipotent_witness(IntMatrix{{1, 1}, {0, 1}}, 12);
  CHECK(w1.root_power == 1);
  CHECK(w1.power == 12);
  CHECK(w1.total_power == 12);
  CHECK(w1.invariant_factors == z({12}));
  CHECK(w1.free_rank == 1);
  CHECK(w1.verified());

  auto const w2 = fibertor::unipotent_witness(IntMatrix{{-1, 1}, {0, -1}}, 5);
  CHECK(w2.root_power == 2);
  CHECK(w2.unipotent == IntMatrix{{1, -2}, {0, 1}});
  CHECK(w2.power == 5);
  CHECK(w2.total_power == 10);
  CHECK(w2.torsion_matrix == IntMatrix{{0, -10}, {0, 0}});
  CHECK(w2.verified());

  IntMatrix const jordan{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  auto const      w3 = fibertor::unipotent_witness(jordan, 4);
  CHECK(w3.root_power == 1);
  CHECK(w3.power == 8);
  // (I + B)^8 - I = 8B + 28B^2
  CHECK(w3.torsion_matrix == IntMatrix{{0, 8, 28}, {0, 0, 8}, {0, 0, 0}});
  CHECK(w3.divisible);
  CHECK(w3.nilpotent);
  CHECK(w3.verified());

  CHECK_THROWS_AS(fibertor::unipotent_witness(IntMatrix::identity(2), 3),
                  fibertor::InvalidInput);
  CHECK_THROWS_AS(fibertor::unipotent_witness(IntMatrix{{2, 1}, {1, 1}}, 3),
                  fibertor::InvalidInput);
}

TEST_CASE("minimal witness oracle") {
  CHECK(fibertor::minimal_witness_oracle(IntMatrix{{1, 1}, {0, 1}}, 12, 100)
        == 12ul);
  CHECK(fibertor::minimal_witness_oracle(IntMatrix{{1, 2}, {0, 1}}, 4, 100)
        == 2ul);
  CHECK_FALSE(
      fibertor::minimal_witness_oracle(IntMatrix::identity(2), 3, 50));
  CHECK_FALSE(
      fibertor::minimal_witness_oracle(IntMatrix{{1, 1}, {0, 1}}, 12, 11));
}

TEST_CASE("binomial divisibility") {
  for (unsigned long k = 1; k <= 6; ++k) {
    unsigned long fact = 1;
    for (unsigned long i = 2; i < k; ++i) {
      fact *= i;
    }
    for (unsigned long m = 1; m <= 30; ++m) {
      bool direct = true;
      for (unsigned long i = 1; i < k; ++i) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), fact * m, i);
        direct = direct && mpz_divisible_ui_p(c.get_mpz_t(), m);
      }
      CHECK(direct);
      CHECK(fibertor::binomial_divisibility_holds(k, m) == direct);
    }
  }
}

TEST_CASE("property: witnesses on random quasi-unipotent matrices") {
  std::mt19937_64                  rng(6);
  std::vector<unsigned long> const orders{1, 2, 3, 4, 6};
  int                              done = 0;
  while (done < 30) {
    std::size_t const size   = 2 + done % 3;
    auto const        sample = oracle::random_quasi_unipotent(
        size, orders, phi_coeffs, rng);
    auto const& a = sample.matrix;
    auto const  u = fibertor::power(a, sample.block_lcm);
    if (u.is_identity()) {
      CHECK(fibertor::classify_spectrum(a).kind
            == fibertor::SpectralKind::finite_order);
      continue;
    }
    auto const cls = fibertor::classify_spectrum(a);
    REQUIRE(cls.kind == fibertor::SpectralKind::quasi_unipotent_infinite);
    CHECK(sample.block_lcm % cls.root_order == 0);
    CHECK(fibertor::power(fibertor::minus_identity(
                              fibertor::power(a, cls.root_order)),
                          static_cast<unsigned long>(size))
              .is_zero());

    for (long m : {2L, 3L, 5L, 12L}) {
      auto const w = fibertor::unipotent_witness(a, m);
      CHECK(w.verified());
      CHECK(fibertor::cokernel(w.torsion_matrix).has_element_of_order(m));
      auto const minimal
          = fibertor::minimal_witness_oracle(a, m, w.total_power.get_ui());
      REQUIRE(minimal.has_value());
      CHECK(*minimal <= w.total_power);
    }
    ++done;
  }
}
