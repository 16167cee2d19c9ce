#include "fibertor/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "fibertor/error.hpp"

namespace fibertor {

  IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
      : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
    _entries.reserve(_rows * _cols);
    for (auto const& row : rows) {
      if (row.size() != _cols) {
        throw InvalidInput("ragged matrix literal");
      }
      for (long x : row) {
        _entries.emplace_back(x);
      }
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix result(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      result(i, i) = 1;
    }
    return result;
  }

  bool IntMatrix::is_zero() const {
    for (auto const& x : _entries) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  bool IntMatrix::is_identity() const {
    if (!is_square()) {
      return false;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if ((*this)(i, j) != (i == j ? 1 : 0)) {
          return false;
        }
      }
    }
    return true;
  }

  IntMatrix& IntMatrix::operator+=(IntMatrix const& other) {
    if (_rows != other._rows || _cols != other._cols) {
      throw InvalidInput("matrix dimension mismatch in addition");
    }
    for (std::size_t k = 0; k < _entries.size(); ++k) {
      _entries[k] += other._entries[k];
    }
    return *this;
  }

  IntMatrix& IntMatrix::operator-=(IntMatrix const& other) {
    if (_rows != other._rows || _cols != other._cols) {
      throw InvalidInput("matrix dimension mismatch in subtraction");
    }
    for (std::size_t k = 0; k < _entries.size(); ++k) {
      _entries[k] -= other._entries[k];
    }
    return *this;
  }

  IntMatrix IntMatrix::transpose() const {
    IntMatrix result(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        result(j, i) = (*this)(i, j);
      }
    }
    return result;
  }

  mpz_class IntMatrix::determinant() const {
    if (!is_square()) {
      throw InvalidInput("determinant of a non-square matrix");
    }
    std::size_t const n = _rows;
    if (n == 0) {
      return 1;
    }
    IntMatrix a    = *this;
    mpz_class prev = 1;
    int       sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && a(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(k, j), a(p, j));
        }
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          a(i, j) = t;
        }
        a(i, k) = 0;
      }
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  }

  bool IntMatrix::is_unimodular() const {
    if (!is_square()) {
      return false;
    }
    mpz_class d = determinant();
    return d == 1 || d == -1;
  }

  mpz_class IntMatrix::max_abs_entry() const {
    mpz_class result = 0;
    for (auto const& x : _entries) {
      if (abs(x) > result) {
        result = abs(x);
      }
    }
    return result;
  }

  bool IntMatrix::all_entries_divisible_by(mpz_class const& m) const {
    if (m == 0) {
      return is_zero();
    }
    for (auto const& x : _entries) {
      if (mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()) == 0) {
        return false;
      }
    }
    return true;
  }

  std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < _rows; ++i) {
      os << (i == 0 ? "[" : ", [");
      for (std::size_t j = 0; j < _cols; ++j) {
        os << (j == 0 ? "" : ", ") << (*this)(i, j);
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw InvalidInput("matrix dimension mismatch in product");
    }
    IntMatrix result(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          mpz_addmul(result(i, j).get_mpz_t(),
                     a(i, k).get_mpz_t(),
                     b(k, j).get_mpz_t());
        }
      }
    }
    return result;
  }

  IntMatrix operator+(IntMatrix a, IntMatrix const& b) {
    a += b;
    return a;
  }

  IntMatrix operator-(IntMatrix a, IntMatrix const& b) {
    a -= b;
    return a;
  }

  IntMatrix power(IntMatrix const& m, unsigned long n) {
    if (!m.is_square()) {
      throw InvalidInput("power of a non-square matrix");
    }
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base   = m;
    while (n > 0) {
      if (n & 1UL) {
        result = result * base;
      }
      n >>= 1;
      if (n > 0) {
        base = base * base;
      }
    }
    return result;
  }

  IntMatrix power(IntMatrix const& m, mpz_class const& n) {
    if (n < 0) {
      throw InvalidInput("negative matrix power");
    }
    if (n.fits_ulong_p()) {
      return power(m, n.get_ui());
    }
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base   = m;
    auto const bits  = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t b = 0; b < bits; ++b) {
      if (mpz_tstbit(n.get_mpz_t(), b) != 0) {
        result = result * base;
      }
      if (b + 1 < bits) {
        base = base * base;
      }
    }
    return result;
  }

  IntMatrix minus_identity(IntMatrix m) {
    if (!m.is_square()) {
      throw InvalidInput("M - I needs a square matrix");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      m(i, i) -= 1;
    }
    return m;
  }

}  // namespace fibertor
