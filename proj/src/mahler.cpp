#include "fibertor/mahler.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "fibertor/error.hpp"

namespace fibertor {

  namespace {

    namespace bmp = boost::multiprecision;

    constexpr unsigned working_digits = 150;
    using Real = bmp::number<bmp::mpfr_float_backend<working_digits>,
                             bmp::et_off>;

    struct Complex {
      Real re = 0;
      Real im = 0;
    };

    Complex operator+(Complex const& a, Complex const& b) {
      return {a.re + b.re, a.im + b.im};
    }
    Complex operator-(Complex const& a, Complex const& b) {
      return {a.re - b.re, a.im - b.im};
    }
    Complex operator*(Complex const& a, Complex const& b) {
      return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Complex operator/(Complex const& a, Complex const& b) {
      Real const den = b.re * b.re + b.im * b.im;
      return {(a.re * b.re + a.im * b.im) / den,
              (a.im * b.re - a.re * b.im) / den};
    }
    Real abs(Complex const& a) {
      return bmp::sqrt(a.re * a.re + a.im * a.im);
    }

    Real to_real(mpz_class const& z) {
      return Real(z.get_str());
    }

    // Horner evaluation of p and p' at z (coefficients constant first).
    void evaluate(std::vector<Real> const& c,
                  Complex const&           z,
                  Complex&                 value,
                  Complex&                 slope) {
      value = {c.back(), 0};
      slope = {0, 0};
      for (std::size_t i = c.size() - 1; i-- > 0;) {
        slope = slope * z + value;
        value = value * z + Complex{c[i], 0};
      }
    }

    struct Enclosure {
      Real lower = 1;
      Real upper = 1;
    };

    // Isolates the simple roots of the square-free polynomial `p` and
    // encloses prod max(1, |root|).
    Enclosure enclose_squarefree(IntPolynomial const& p, Real const& target) {
      int const d = p.degree();
      if (d < 1) {
        return {};
      }
      Real const        lc = to_real(p.leading());
      std::vector<Real> c;
      for (auto const& a : p.coefficients()) {
        c.push_back(to_real(a) / lc);  // monic
      }
      if (d == 1) {
        Real const r = bmp::abs(c[0]);
        Real const m = (r > 1 ? r : Real(1)) * bmp::abs(lc);
        return {m, m};
      }

      // Aberth-Ehrlich iteration from points on a circle.
      Real radius = bmp::pow(bmp::abs(c[0]), Real(1) / d);
      if (radius < Real("0.5")) {
        radius = Real("0.5");
      }
      std::vector<Complex> z(d);
      Real const           two_pi = 2 * boost::math::constants::pi<Real>();
      for (int i = 0; i < d; ++i) {
        Real const angle = two_pi * i / d + Real("0.4");
        z[i]             = {radius * bmp::cos(angle), radius * bmp::sin(angle)};
      }

      Real const  tiny   = bmp::pow(Real(10), -Real(working_digits - 10));
      Real const  slack  = bmp::pow(Real(10), -Real(working_digits - 20));
      int const   cap    = 2000;
      for (int iter = 0; iter < cap; ++iter) {
        Real max_step = 0;
        for (int i = 0; i < d; ++i) {
          Complex value, slope;
          evaluate(c, z[i], value, slope);
          if (abs(value) == 0) {
            continue;
          }
          Complex const newton = value / slope;
          Complex       sum{0, 0};
          for (int j = 0; j < d; ++j) {
            if (j != i) {
              sum = sum + Complex{1, 0} / (z[i] - z[j]);
            }
          }
          Complex const step = newton / (Complex{1, 0} - newton * sum);
          z[i]               = z[i] - step;
          Real const s       = abs(step);
          if (s > max_step) {
            max_step = s;
          }
        }
        if (max_step > tiny && iter + 1 < cap) {
          continue;
        }

        // Gershgorin disks of diag(z) - w 1^T, whose characteristic
        // polynomial is p: centre z_i - w_i, radius (d-1)|w_i|.
        std::vector<Complex> centre(d);
        std::vector<Real>    rad(d);
        bool                 coincident = false;
        for (int i = 0; i < d; ++i) {
          Complex value, slope;
          evaluate(c, z[i], value, slope);
          Complex den{1, 0};
          for (int j = 0; j < d; ++j) {
            if (j != i) {
              den = den * (z[i] - z[j]);
            }
          }
          if (abs(den) == 0) {
            coincident = true;
            break;
          }
          Complex const w = value / den;
          centre[i]       = z[i] - w;
          rad[i] = (d - 1) * abs(w) + d * slack * (1 + abs(z[i]));
        }
        bool disjoint = !coincident;
        for (int i = 0; i < d && disjoint; ++i) {
          for (int j = i + 1; j < d; ++j) {
            if (abs(centre[i] - centre[j]) <= rad[i] + rad[j]) {
              disjoint = false;
              break;
            }
          }
        }
        if (!disjoint) {
          continue;
        }
        Enclosure e;
        for (int i = 0; i < d; ++i) {
          Real const m  = abs(centre[i]);
          Real const lo = m - rad[i];
          Real const hi = m + rad[i];
          e.lower *= lo > 1 ? lo : Real(1);
          e.upper *= hi > 1 ? hi : Real(1);
        }
        Real const alc = bmp::abs(lc);
        e.lower *= alc;
        e.upper *= alc;
        if (e.upper - e.lower <= target || iter + 1 == cap) {
          return e;
        }
      }
      throw ResourceLimit("root isolation did not converge");
    }

  }  // namespace

  MahlerMeasure mahler_measure(IntPolynomial const& p, int precision) {
    if (p.is_zero()) {
      throw InvalidInput("Mahler measure of the zero polynomial");
    }
    if (precision < 1 || precision > max_mahler_precision) {
      throw ResourceLimit("Mahler measure precision of "
                          + std::to_string(precision)
                          + " digits is unreachable (limit "
                          + std::to_string(max_mahler_precision) + ")");
    }

    // Cyclotomic factors contribute exactly 1.
    IntPolynomial rest = p;
    for (unsigned long n : cyclotomic_orders_up_to_degree(rest.degree())) {
      IntPolynomial const phi = cyclotomic(n);
      while (rest.degree() >= phi.degree()) {
        auto q = divide_exact(rest, phi);
        if (!q) {
          break;
        }
        rest = std::move(*q);
      }
    }

    // rest = s_1 * s_2 * ... with every s_i square-free.
    std::vector<IntPolynomial> parts;
    while (rest.degree() > 0) {
      IntPolynomial g = gcd(rest, rest.derivative());
      auto          s = divide_exact(rest, g);
      if (!s) {
        throw InternalError("square-free split is not exact");
      }
      parts.push_back(std::move(*s));
      rest = std::move(g);
    }
    Real const constant = bmp::abs(to_real(rest.leading()));

    Real const target = bmp::pow(Real(10), -Real(precision))
                        / (8 * (parts.size() + 1));
    Enclosure total{constant, constant};
    for (auto const& s : parts) {
      Enclosure const e = enclose_squarefree(s, target / total.upper);
      total.lower *= e.lower;
      total.upper *= e.upper;
    }
    Real const err  = (total.upper - total.lower) / 2;
    Real const unit = bmp::pow(Real(10), -Real(precision));
    // Printing to `precision` places adds at most half a unit.
    Real const bound = err + unit / 2;
    if (bound >= unit) {
      throw ResourceLimit("could not certify Mahler measure to "
                          + std::to_string(precision) + " digits");
    }
    Real const mid = (total.upper + total.lower) / 2;

    MahlerMeasure result;
    result.precision = precision;
    result.value     = static_cast<double>(mid);
    result.log_value = static_cast<double>(bmp::log(mid));
    result.error_bound
        = std::nextafter(static_cast<double>(bound),
                         std::numeric_limits<double>::infinity());
    result.digits = mid.str(precision, std::ios_base::fixed);
    return result;
  }

}  // namespace fibertor
