#include "fibertor/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "fibertor/error.hpp"

namespace fibertor {

  IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
      : _coeffs(std::move(coeffs)) {
    trim();
  }

  IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) {
      _coeffs.emplace_back(c);
    }
    trim();
  }

  IntPolynomial IntPolynomial::monomial(mpz_class const& c, int degree) {
    std::vector<mpz_class> coeffs(degree + 1);
    coeffs[degree] = c;
    return IntPolynomial(std::move(coeffs));
  }

  void IntPolynomial::trim() {
    while (!_coeffs.empty() && _coeffs.back() == 0) {
      _coeffs.pop_back();
    }
  }

  mpz_class IntPolynomial::coefficient(int i) const {
    if (i < 0 || i > degree()) {
      return 0;
    }
    return _coeffs[i];
  }

  mpz_class const& IntPolynomial::leading() const {
    if (is_zero()) {
      throw InvalidInput("zero polynomial has no leading coefficient");
    }
    return _coeffs.back();
  }

  mpz_class IntPolynomial::evaluate(mpz_class const& x) const {
    mpz_class result = 0;
    for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it) {
      result = result * x + *it;
    }
    return result;
  }

  IntPolynomial IntPolynomial::derivative() const {
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < _coeffs.size(); ++i) {
      d.push_back(_coeffs[i] * static_cast<unsigned long>(i));
    }
    return IntPolynomial(std::move(d));
  }

  mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (auto const& c : _coeffs) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
  }

  IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) {
      return *this;
    }
    mpz_class g = content();
    if (leading() < 0) {
      g = -g;
    }
    std::vector<mpz_class> coeffs = _coeffs;
    for (auto& c : coeffs) {
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    return IntPolynomial(std::move(coeffs));
  }

  IntPolynomial& IntPolynomial::operator+=(IntPolynomial const& other) {
    if (other._coeffs.size() > _coeffs.size()) {
      _coeffs.resize(other._coeffs.size());
    }
    for (std::size_t i = 0; i < other._coeffs.size(); ++i) {
      _coeffs[i] += other._coeffs[i];
    }
    trim();
    return *this;
  }

  IntPolynomial& IntPolynomial::operator-=(IntPolynomial const& other) {
    if (other._coeffs.size() > _coeffs.size()) {
      _coeffs.resize(other._coeffs.size());
    }
    for (std::size_t i = 0; i < other._coeffs.size(); ++i) {
      _coeffs[i] -= other._coeffs[i];
    }
    trim();
    return *this;
  }

  IntPolynomial& IntPolynomial::operator*=(IntPolynomial const& other) {
    if (is_zero() || other.is_zero()) {
      _coeffs.clear();
      return *this;
    }
    std::vector<mpz_class> out(_coeffs.size() + other._coeffs.size() - 1);
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      for (std::size_t j = 0; j < other._coeffs.size(); ++j) {
        mpz_addmul(out[i + j].get_mpz_t(),
                   _coeffs[i].get_mpz_t(),
                   other._coeffs[j].get_mpz_t());
      }
    }
    _coeffs = std::move(out);
    trim();
    return *this;
  }

  std::string IntPolynomial::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (int i = degree(); i >= 0; --i) {
      mpz_class const& c = _coeffs[i];
      if (c == 0) {
        continue;
      }
      mpz_class a = abs(c);
      if (first) {
        os << (c < 0 ? "-" : "");
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (a != 1 || i == 0) {
        os << a;
      }
      if (i >= 1) {
        os << 'x';
      }
      if (i >= 2) {
        os << '^' << i;
      }
      first = false;
    }
    return os.str();
  }

  IntPolynomial operator+(IntPolynomial a, IntPolynomial const& b) {
    a += b;
    return a;
  }

  IntPolynomial operator-(IntPolynomial a, IntPolynomial const& b) {
    a -= b;
    return a;
  }

  IntPolynomial operator*(IntPolynomial a, IntPolynomial const& b) {
    a *= b;
    return a;
  }

  std::optional<IntPolynomial> divide_exact(IntPolynomial const& a,
                                            IntPolynomial const& b) {
    if (b.is_zero()) {
      throw InvalidInput("division by the zero polynomial");
    }
    if (a.is_zero()) {
      return IntPolynomial();
    }
    if (a.degree() < b.degree()) {
      return std::nullopt;
    }
    std::vector<mpz_class> rem = a.coefficients();
    std::vector<mpz_class> quot(a.degree() - b.degree() + 1);
    auto const&            bc = b.coefficients();
    mpz_class const&       lc = b.leading();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
      mpz_class const& top = rem[i + b.degree()];
      if (mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()) == 0) {
        return std::nullopt;
      }
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
      quot[i] = q;
      for (int j = 0; j <= b.degree(); ++j) {
        mpz_submul(rem[i + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
      }
    }
    for (auto const& r : rem) {
      if (r != 0) {
        return std::nullopt;
      }
    }
    return IntPolynomial(std::move(quot));
  }

  namespace {
    // lc(b)^(deg a - deg b + 1) * a mod b.
    IntPolynomial pseudo_remainder(IntPolynomial const& a,
                                   IntPolynomial const& b) {
      std::vector<mpz_class> rem = a.coefficients();
      auto const&            bc  = b.coefficients();
      mpz_class const&       lc  = b.leading();
      int                    deg = a.degree();
      while (deg >= b.degree() && deg >= 0) {
        mpz_class top = rem[deg];
        for (auto& r : rem) {
          r *= lc;
        }
        int const shift = deg - b.degree();
        for (int j = 0; j <= b.degree(); ++j) {
          mpz_submul(rem[shift + j].get_mpz_t(),
                     top.get_mpz_t(),
                     bc[j].get_mpz_t());
        }
        --deg;
        while (deg >= 0 && rem[deg] == 0) {
          --deg;
        }
      }
      return IntPolynomial(std::move(rem));
    }
  }  // namespace

  IntPolynomial gcd(IntPolynomial const& a, IntPolynomial const& b) {
    IntPolynomial x = a.primitive_part();
    IntPolynomial y = b.primitive_part();
    if (x.degree() < y.degree()) {
      std::swap(x, y);
    }
    while (!y.is_zero()) {
      IntPolynomial r = pseudo_remainder(x, y).primitive_part();
      x               = std::move(y);
      y               = std::move(r);
    }
    return x;
  }

  unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        while (n % p == 0) {
          n /= p;
        }
        result -= result / p;
      }
    }
    if (n > 1) {
      result -= result / n;
    }
    return result;
  }

  IntPolynomial cyclotomic(unsigned long n) {
    if (n == 0) {
      throw InvalidInput("cyclotomic polynomial of order 0");
    }
    static std::mutex                              mtx;
    static std::map<unsigned long, IntPolynomial> cache;
    {
      std::lock_guard<std::mutex> lock(mtx);
      if (auto it = cache.find(n); it != cache.end()) {
        return it->second;
      }
    }
    // x^n - 1 = prod_{d | n} Phi_d
    IntPolynomial result = IntPolynomial::monomial(1, static_cast<int>(n))
                           - IntPolynomial{1};
    for (unsigned long d = 1; d < n; ++d) {
      if (n % d == 0) {
        auto q = divide_exact(result, cyclotomic(d));
        if (!q) {
          throw InternalError("cyclotomic recursion failed");
        }
        result = std::move(*q);
      }
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(n, result);
    return result;
  }

  std::vector<unsigned long> cyclotomic_orders_up_to_degree(int degree) {
    std::vector<unsigned long> result;
    if (degree < 1) {
      return result;
    }
    // phi(N) >= sqrt(N / 2), so phi(N) <= k forces N <= 2 k^2.
    unsigned long const bound = 2UL * degree * degree + 2;
    for (unsigned long n = 1; n <= bound; ++n) {
      if (euler_phi(n) <= static_cast<unsigned long>(degree)) {
        result.push_back(n);
      }
    }
    return result;
  }

  IntPolynomial char_poly(IntMatrix const& m) {
    if (!m.is_square()) {
      throw InvalidInput("characteristic polynomial of a non-square matrix");
    }
    std::size_t const      k = m.rows();
    std::vector<mpz_class> coeffs(k + 1);
    coeffs[k] = 1;
    // M_j = A M_{j-1} + c_{k-j+1} I,  c_{k-j} = -tr(A M_j) / j
    IntMatrix mj = IntMatrix::zero(k);
    for (std::size_t j = 1; j <= k; ++j) {
      IntMatrix next = m * mj;
      for (std::size_t i = 0; i < k; ++i) {
        next(i, i) += coeffs[k - j + 1];
      }
      mj             = std::move(next);
      IntMatrix am   = m * mj;
      mpz_class tr   = 0;
      for (std::size_t i = 0; i < k; ++i) {
        tr += am(i, i);
      }
      if (mpz_divisible_ui_p(tr.get_mpz_t(), j) == 0) {
        throw InternalError("non-exact division in Faddeev-LeVerrier");
      }
      mpz_class c;
      mpz_divexact_ui(c.get_mpz_t(), tr.get_mpz_t(), j);
      coeffs[k - j] = -c;
    }
    return IntPolynomial(std::move(coeffs));
  }

}  // namespace fibertor
