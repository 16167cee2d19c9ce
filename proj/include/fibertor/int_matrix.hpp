#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace fibertor {

  // Dense matrix of arbitrary-precision integers, row-major. Most of the
  // library works with square matrices; products and the inclusion maps of
  // covers need rectangular ones as well.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _entries(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t n) {
      return IntMatrix(n, n);
    }

    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }
    [[nodiscard]] bool is_square() const noexcept {
      return _rows == _cols;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _rows;
    }

    mpz_class& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _cols + j];
    }
    mpz_class const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _cols + j];
    }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_identity() const;

    IntMatrix& operator+=(IntMatrix const& other);
    IntMatrix& operator-=(IntMatrix const& other);

    [[nodiscard]] IntMatrix transpose() const;

    // Exact determinant (fraction-free Bareiss elimination).
    [[nodiscard]] mpz_class determinant() const;

    [[nodiscard]] bool is_unimodular() const;

    // Largest absolute entry.
    [[nodiscard]] mpz_class max_abs_entry() const;

    // True iff every entry is divisible by m.
    [[nodiscard]] bool all_entries_divisible_by(mpz_class const& m) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t            _rows = 0;
    std::size_t            _cols = 0;
    std::vector<mpz_class> _entries;
  };

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  IntMatrix operator+(IntMatrix a, IntMatrix const& b);
  IntMatrix operator-(IntMatrix a, IntMatrix const& b);

  // M^n for n >= 0 by repeated squaring.
  IntMatrix power(IntMatrix const& m, unsigned long n);
  IntMatrix power(IntMatrix const& m, mpz_class const& n);

  // M - I.
  IntMatrix minus_identity(IntMatrix m);

}  // namespace fibertor
