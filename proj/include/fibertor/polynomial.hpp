#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "fibertor/int_matrix.hpp"

namespace fibertor {

  // Univariate polynomial with integer coefficients, stored constant term
  // first with no trailing zeros (the zero polynomial has no coefficients).
  class IntPolynomial {
   public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(mpz_class const& c, int degree);

    // -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept {
      return static_cast<int>(_coeffs.size()) - 1;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _coeffs.empty();
    }
    [[nodiscard]] std::vector<mpz_class> const& coefficients() const noexcept {
      return _coeffs;
    }
    // Coefficient of x^i (zero beyond the degree).
    [[nodiscard]] mpz_class coefficient(int i) const;
    [[nodiscard]] mpz_class const& leading() const;

    [[nodiscard]] mpz_class evaluate(mpz_class const& x) const;
    [[nodiscard]] IntPolynomial derivative() const;

    // gcd of the coefficients (non-negative).
    [[nodiscard]] mpz_class content() const;
    // Divided by its content, with positive leading coefficient.
    [[nodiscard]] IntPolynomial primitive_part() const;

    IntPolynomial& operator+=(IntPolynomial const& other);
    IntPolynomial& operator-=(IntPolynomial const& other);
    IntPolynomial& operator*=(IntPolynomial const& other);

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(IntPolynomial const&, IntPolynomial const&)
        = default;

   private:
    void trim();
    std::vector<mpz_class> _coeffs;
  };

  IntPolynomial operator+(IntPolynomial a, IntPolynomial const& b);
  IntPolynomial operator-(IntPolynomial a, IntPolynomial const& b);
  IntPolynomial operator*(IntPolynomial a, IntPolynomial const& b);

  // a / b when the quotient exists in Z[x], otherwise nullopt.
  std::optional<IntPolynomial> divide_exact(IntPolynomial const& a,
                                            IntPolynomial const& b);

  // Primitive gcd with positive leading coefficient (gcd over Q[x], scaled).
  IntPolynomial gcd(IntPolynomial const& a, IntPolynomial const& b);

  unsigned long euler_phi(unsigned long n);

  // The N-th cyclotomic polynomial.
  IntPolynomial cyclotomic(unsigned long n);

  // All N with phi(N) <= degree, ascending.
  std::vector<unsigned long> cyclotomic_orders_up_to_degree(int degree);

  // det(x I - M), via Faddeev-LeVerrier with exact integer divisions.
  IntPolynomial char_poly(IntMatrix const& m);

}  // namespace fibertor
