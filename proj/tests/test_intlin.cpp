#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fibertor/error.hpp"
#include "fibertor/int_matrix.hpp"
#include "fibertor/mahler.hpp"
#include "fibertor/polynomial.hpp"
#include "fibertor/smith.hpp"
#include "fibertor/spectrum.hpp"
#include "oracles.hpp"

using fibertor::IntMatrix;
using fibertor::IntPolynomial;
using fibertor::SpectralKind;

namespace {

  std::vector<mpz_class> z(std::initializer_list<long> values) {
    return {values.begin(), values.end()};
  }

  void check_snf(IntMatrix const& m) {
    auto const snf = fibertor::smith_normal_form(m);
    CHECK(snf.u * m * snf.v == snf.diagonal(m.rows(), m.cols()));
    CHECK(snf.u.is_unimodular());
    CHECK(snf.v.is_unimodular());
    for (std::size_t i = 0; i < snf.invariant_factors.size(); ++i) {
      CHECK(snf.invariant_factors[i] > 0);
      if (i > 0) {
        CHECK(mpz_divisible_p(snf.invariant_factors[i].get_mpz_t(),
                              snf.invariant_factors[i - 1].get_mpz_t()));
      }
    }
    CHECK(snf.free_rank == m.rows() - snf.invariant_factors.size());
    CHECK(snf.invariant_factors
          == oracle::determinantal_invariant_factors(m));
    if (m.is_square()) {
      mpz_class const det = m.determinant();
      if (det != 0) {
        CHECK(fibertor::cokernel(snf).torsion_order() == abs(det));
        CHECK(snf.free_rank == 0);
      }
    }
  }

  // value of the decimal string `digits` as an mpf
  mpf_class decimal(std::string const& digits) {
    return mpf_class(digits, 1024);
  }

  void check_close(fibertor::MahlerMeasure const& mm,
                   mpf_class const&               exact) {
    mpf_class diff = decimal(mm.digits) - exact;
    CHECK(abs(diff) <= mm.error_bound);
    CHECK(mm.error_bound < std::pow(10.0, -mm.precision));
  }

  mpf_class sqrt_of(long x) {
    mpf_class r(0, 1024);
    mpf_class v(x, 1024);
    mpf_sqrt(r.get_mpf_t(), v.get_mpf_t());
    return r;
  }

}  // namespace

TEST_CASE("matrix basics") {
  IntMatrix const a{{2, 1}, {1, 1}};
  CHECK(a.determinant() == 1);
  CHECK(a.is_unimodular());
  CHECK(fibertor::power(a, 3ul) == IntMatrix{{13, 8}, {8, 5}});
  CHECK(fibertor::power(a, mpz_class(3)) == IntMatrix{{13, 8}, {8, 5}});
  CHECK(fibertor::minus_identity(fibertor::power(a, 3ul))
        == IntMatrix{{12, 8}, {8, 4}});
  CHECK(fibertor::power(a, 0ul) == IntMatrix::identity(2));
  CHECK(IntMatrix{{1, 2, 3}}.transpose() == IntMatrix{{1}, {2}, {3}});
  CHECK(IntMatrix{{4, 3}, {3, 1}}.determinant() == -5);
  CHECK(IntMatrix{{0, 2}, {4, 6}}.all_entries_divisible_by(2));
  CHECK_FALSE(IntMatrix{{0, 2}, {4, 7}}.all_entries_divisible_by(2));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const n = 1 + trial % 5;
    auto const        m = oracle::random_matrix(n, 9, rng);
    std::vector<std::vector<mpz_class>> rows(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        rows[i][j] = m(i, j);
      }
    }
    CHECK(m.determinant() == oracle::cofactor_det(rows));
  }
}

TEST_CASE("smith normal form examples") {
  auto const id = fibertor::smith_normal_form(IntMatrix::identity(3));
  CHECK(id.invariant_factors == z({1, 1, 1}));
  CHECK(id.free_rank == 0);

  auto const zero = fibertor::smith_normal_form(IntMatrix::zero(3));
  CHECK(zero.invariant_factors.empty());
  CHECK(zero.free_rank == 3);

  auto const single = fibertor::smith_normal_form(IntMatrix{{0, 12}, {0, 0}});
  CHECK(single.invariant_factors == z({12}));
  CHECK(single.free_rank == 1);

  auto const chain = fibertor::smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  CHECK(chain.invariant_factors == z({1, 6}));

  check_snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(fibertor::smith_normal_form(
            IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})
            .invariant_factors
        == z({2, 6, 12}));
}

TEST_CASE("cokernel examples") {
  auto const trivial = fibertor::cokernel(IntMatrix::zero(2));
  CHECK(trivial.free_rank == 2);
  CHECK(trivial.torsion.empty());
  CHECK(trivial.torsion_order() == 1);

  auto const cyclic = fibertor::cokernel(IntMatrix{{0, 7}, {0, 0}});
  CHECK(cyclic.free_rank == 1);
  CHECK(cyclic.torsion == z({7}));
  CHECK(cyclic.has_element_of_order(7));
  CHECK_FALSE(cyclic.has_element_of_order(14));

  auto const five = fibertor::cokernel(IntMatrix{{4, 3}, {3, 1}});
  CHECK(five.torsion == z({5}));
  CHECK(five.torsion_order() == 5);

  auto const mixed = fibertor::cokernel(IntMatrix{{2, 0}, {0, 6}});
  CHECK(mixed.torsion == z({2, 6}));
  CHECK(mixed.has_element_of_order(3));
  CHECK(mixed.has_element_of_order(6));
  CHECK_FALSE(mixed.has_element_of_order(4));
}

TEST_CASE("property: SNF certificates on random matrices") {
  std::mt19937_64                            rng(42);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const rows = dim(rng), cols = dim(rng);
    std::uniform_int_distribution<int> entry(-9, 9);
    IntMatrix                          m(rows, cols);
    std::bernoulli_distribution        sparse(0.3);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = sparse(rng) ? 0 : entry(rng);
      }
    }
    CAPTURE(m.to_string());
    check_snf(m);
  }
}

TEST_CASE("SNF of large-entry matrices") {
  auto const a = fibertor::power(IntMatrix{{2, 1}, {1, 1}}, 60ul);
  check_snf(fibertor::minus_identity(a));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    auto [p, q] = oracle::random_unimodular(4, 30, rng);
    CHECK(p * q == IntMatrix::identity(4));
    IntMatrix d = IntMatrix::zero(4);
    d(0, 0)     = 3;
    d(1, 1)     = 6;
    d(2, 2)     = 30;
    auto const snf = fibertor::smith_normal_form(p * d * q);
    CHECK(snf.invariant_factors == z({3, 6, 30}));
    CHECK(snf.free_rank == 1);
  }
}

TEST_CASE("polynomial arithmetic") {
  IntPolynomial const p{-1, 0, 1};  // x^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(3) == 8);
  CHECK(p.derivative() == IntPolynomial{0, 2});
  CHECK(*fibertor::divide_exact(p, IntPolynomial{-1, 1})
        == IntPolynomial{1, 1});
  CHECK_FALSE(fibertor::divide_exact(p, IntPolynomial{2, 1}).has_value());
  CHECK(fibertor::gcd(p, IntPolynomial{1, 2, 1}) == IntPolynomial{1, 1});
  CHECK(IntPolynomial{2, 4, 6}.content() == 2);
  CHECK(IntPolynomial{-2, -4}.primitive_part() == IntPolynomial{1, 2});
  CHECK(IntPolynomial{1, -3, 1}.to_string() == "x^2 - 3x + 1");
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(fibertor::cyclotomic(1) == IntPolynomial{-1, 1});
  CHECK(fibertor::cyclotomic(2) == IntPolynomial{1, 1});
  CHECK(fibertor::cyclotomic(4) == IntPolynomial{1, 0, 1});
  CHECK(fibertor::cyclotomic(6) == IntPolynomial{1, -1, 1});
  CHECK(fibertor::cyclotomic(12) == IntPolynomial{1, 0, -1, 0, 1});
  for (unsigned long n = 1; n <= 40; ++n) {
    IntPolynomial product{1};
    unsigned long phi = 0;
    for (unsigned long d = 1; d <= n; ++d) {
      if (n % d == 0) {
        product *= fibertor::cyclotomic(d);
      }
      if (std::gcd(d, n) == 1) {
        ++phi;
      }
    }
    CHECK(product == IntPolynomial::monomial(1, n) - IntPolynomial{1});
    CHECK(fibertor::euler_phi(n) == phi);
    CHECK(fibertor::cyclotomic(n).degree() == static_cast<int>(phi));
  }
  for (int deg = 1; deg <= 12; ++deg) {
    for (unsigned long n : fibertor::cyclotomic_orders_up_to_degree(deg)) {
      CHECK(fibertor::euler_phi(n) <= static_cast<unsigned long>(deg));
    }
    // completeness against a direct scan
    std::size_t count = 0;
    for (unsigned long n = 1; n <= 1000; ++n) {
      count += fibertor::euler_phi(n) <= static_cast<unsigned long>(deg);
    }
    CHECK(fibertor::cyclotomic_orders_up_to_degree(deg).size() == count);
  }
}

TEST_CASE("characteristic polynomial examples") {
  CHECK(fibertor::char_poly(IntMatrix::identity(2)) == IntPolynomial{1, -2, 1});
  CHECK(fibertor::char_poly(IntMatrix{{2, 1}, {1, 1}})
        == IntPolynomial{1, -3, 1});
  CHECK(fibertor::char_poly(IntMatrix{{0, 1}, {1, 1}})
        == IntPolynomial{-1, -1, 1});
}

TEST_CASE("property: char_poly(M)(x) = det(xI - M) at integer points") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t const n = 1 + trial % 6;
    auto const        m = oracle::random_matrix(n, 9, rng);
    auto const        p = fibertor::char_poly(m);
    CHECK(p.degree() == static_cast<int>(n));
    CHECK(p.leading() == 1);
    for (long x = -3; x <= static_cast<long>(n); ++x) {
      std::vector<std::vector<mpz_class>> rows(n,
                                               std::vector<mpz_class>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          rows[i][j] = (i == j ? mpz_class(x) : mpz_class(0)) - m(i, j);
        }
      }
      CHECK(p.evaluate(x) == oracle::cofactor_det(rows));
    }
  }
}

TEST_CASE("spectral classification examples") {
  auto const id = fibertor::classify_spectrum(IntMatrix::identity(3));
  CHECK(id.kind == SpectralKind::finite_order);
  CHECK(id.cyclotomic_part
        == std::vector<fibertor::CyclotomicFactor>{{1, 3}});

  auto const shear = fibertor::classify_spectrum(IntMatrix{{1, 1}, {0, 1}});
  CHECK(shear.kind == SpectralKind::quasi_unipotent_infinite);
  CHECK(shear.root_order == 1);
  CHECK(shear.mahler.digits == "1.000000000000");

  auto const anosov = fibertor::classify_spectrum(IntMatrix{{2, 1}, {1, 1}});
  CHECK(anosov.kind == SpectralKind::has_large_eigenvalue);
  CHECK(anosov.mahler.value == doctest::Approx(2.6180339887).epsilon(1e-10));
  CHECK(anosov.non_cyclotomic_part == IntPolynomial{1, -3, 1});

  auto const rot = fibertor::classify_spectrum(IntMatrix{{0, -1}, {1, 0}});
  CHECK(rot.kind == SpectralKind::finite_order);
  CHECK(rot.root_order == 4);

  auto const neg = fibertor::classify_spectrum(IntMatrix{{-1, 1}, {0, -1}});
  CHECK(neg.kind == SpectralKind::quasi_unipotent_infinite);
  CHECK(neg.root_order == 2);

  CHECK_THROWS_AS(fibertor::classify_spectrum(IntMatrix{{2, 0}, {0, 1}}),
                  fibertor::InvalidInput);
}

TEST_CASE("property: 2x2 classification against closed forms") {
  // For A in GL(2,Z): finite order iff A^12 = I; a root of modulus > 1
  // exists iff |trace| > 2 (det 1) or trace != 0 (det -1).
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    auto const [a, a_inv] = oracle::random_unimodular(2, 1 + trial % 6, rng);
    IntMatrix m           = a;
    if (trial % 3 == 0) {
      m = m * IntMatrix{{0, 1}, {1, 0}};
    }
    if (trial % 5 == 0) {
      m = m * IntMatrix{{0, -1}, {1, 1}};
    }
    auto const cls = fibertor::classify_spectrum(m);
    mpz_class const tr  = m(0, 0) + m(1, 1);
    mpz_class const det = m.determinant();
    bool const      large = det == 1 ? abs(tr) > 2 : tr != 0;
    bool const finite = fibertor::power(m, 12ul) == IntMatrix::identity(2);
    CAPTURE(m.to_string());
    CHECK((cls.kind == SpectralKind::has_large_eigenvalue) == large);
    CHECK((cls.kind == SpectralKind::finite_order) == finite);
    CHECK((cls.mahler.value > 1.0) == large);
    if (cls.kind != SpectralKind::has_large_eigenvalue) {
      auto const u = fibertor::power(m, cls.root_order);
      auto const b = u - IntMatrix::identity(2);
      CHECK((b * b).is_zero());
      CHECK(b.is_zero() == finite);
    }
  }
}

TEST_CASE("mahler measure examples") {
  check_close(fibertor::mahler_measure(IntPolynomial{1, -3, 1}),
              (3 + sqrt_of(5)) / 2);
  check_close(fibertor::mahler_measure(IntPolynomial{-1, -1, 1}),
              (1 + sqrt_of(5)) / 2);
  for (int k = 1; k <= 6; ++k) {
    IntPolynomial p{1};
    for (int i = 0; i < k; ++i) {
      p *= IntPolynomial{-1, 1};
    }
    auto const mm = fibertor::mahler_measure(p);
    CHECK(mm.digits == "1.000000000000");
    CHECK(mm.log_value == 0.0);
  }
  // leading coefficient counts
  check_close(fibertor::mahler_measure(IntPolynomial{-1, 2}), mpf_class(2));
  check_close(fibertor::mahler_measure(IntPolynomial{-6, 1}), mpf_class(6));
  // 3x^2 - 1 = 3 (x - 1/sqrt 3)(x + 1/sqrt 3)
  check_close(fibertor::mahler_measure(IntPolynomial{-1, 0, 3}),
              mpf_class(3));
  // x^2 - 2x - 1: roots 1 +- sqrt 2
  check_close(fibertor::mahler_measure(IntPolynomial{-1, -2, 1}),
              1 + sqrt_of(2));
}

TEST_CASE("mahler measure at high precision") {
  auto const mm = fibertor::mahler_measure(IntPolynomial{1, -3, 1}, 60);
  CHECK(mm.precision == 60);
  CHECK(mm.digits.size() == 62);
  check_close(mm, (3 + sqrt_of(5)) / 2);
  CHECK(mm.digits.substr(0, 32) == "2.618033988749894848204586834365");

  // Lehmer's polynomial
  auto const lehmer = fibertor::mahler_measure(
      IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}, 30);
  CHECK(lehmer.digits == "1.176280818259917506544070338474");

  CHECK_THROWS_AS(fibertor::mahler_measure(IntPolynomial{1, 1}, 0),
                  fibertor::ResourceLimit);
  CHECK_THROWS_AS(fibertor::mahler_measure(
                      IntPolynomial{1, 1}, fibertor::max_mahler_precision + 1),
                  fibertor::ResourceLimit);
  CHECK_THROWS_AS(fibertor::mahler_measure(IntPolynomial{}),
                  fibertor::InvalidInput);
}

TEST_CASE("property: Mahler measure is multiplicative and reversal invariant") {
  std::mt19937_64                    rng(271828);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(1, 5);
  auto random_poly = [&] {
    std::vector<mpz_class> c(deg(rng) + 1);
    for (auto& x : c) {
      x = coeff(rng);
    }
    if (c.back() == 0) {
      c.back() = 1;
    }
    if (c.front() == 0) {
      c.front() = -1;
    }
    return IntPolynomial(c);
  };
  for (int trial = 0; trial < 60; ++trial) {
    auto const p  = random_poly();
    auto const q  = random_poly();
    auto const mp = fibertor::mahler_measure(p, 20);
    auto const mq = fibertor::mahler_measure(q, 20);
    auto const mpq = fibertor::mahler_measure(p * q, 20);
    CAPTURE(p.to_string());
    CAPTURE(q.to_string());
    mpf_class const prod = decimal(mp.digits) * decimal(mq.digits);
    mpf_class const tol
        = decimal(mp.digits) * mq.error_bound
          + decimal(mq.digits) * mp.error_bound + mpq.error_bound + 1e-30;
    CHECK(abs(prod - decimal(mpq.digits)) <= tol);

    std::vector<mpz_class> rev(p.coefficients().rbegin(),
                               p.coefficients().rend());
    CHECK(fibertor::mahler_measure(IntPolynomial(rev), 20).digits
          == mp.digits);

    // |lc|, |p(0)| <= M(p) <= ||p||_2
    mpf_class norm2 = 0;
    for (auto const& c : p.coefficients()) {
      norm2 += mpf_class(c * c);
    }
    mpf_class const m = decimal(mp.digits);
    CHECK(m + mp.error_bound >= abs(p.leading()));
    CHECK(m + mp.error_bound >= abs(p.coefficient(0)));
    CHECK(m * m <= norm2 + 1e-15);
  }
}
