#include "fibertor/smith.hpp"

#include <optional>
#include <utility>

namespace fibertor {

  namespace {

    // Matrix being reduced together with the transforms accumulated so far.
    class SnfWork {
     public:
      explicit SnfWork(IntMatrix const& m)
          : a(m),
            u(IntMatrix::identity(m.rows())),
            v(IntMatrix::identity(m.cols())) {}

      void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) {
          return;
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
          std::swap(a(i, j), a(k, j));
        }
        for (std::size_t j = 0; j < u.cols(); ++j) {
          std::swap(u(i, j), u(k, j));
        }
      }

      void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) {
          return;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
          std::swap(a(i, j), a(i, k));
        }
        for (std::size_t i = 0; i < v.rows(); ++i) {
          std::swap(v(i, j), v(i, k));
        }
      }

      // row_i += q * row_k
      void add_row(std::size_t i, std::size_t k, mpz_class const& q) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          mpz_addmul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(k, j).get_mpz_t());
        }
        for (std::size_t j = 0; j < u.cols(); ++j) {
          mpz_addmul(u(i, j).get_mpz_t(), q.get_mpz_t(), u(k, j).get_mpz_t());
        }
      }

      // col_j += q * col_k
      void add_col(std::size_t j, std::size_t k, mpz_class const& q) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
          mpz_addmul(a(i, j).get_mpz_t(), q.get_mpz_t(), a(i, k).get_mpz_t());
        }
        for (std::size_t i = 0; i < v.rows(); ++i) {
          mpz_addmul(v(i, j).get_mpz_t(), q.get_mpz_t(), v(i, k).get_mpz_t());
        }
      }

      void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          a(i, j) = -a(i, j);
        }
        for (std::size_t j = 0; j < u.cols(); ++j) {
          u(i, j) = -u(i, j);
        }
      }

      IntMatrix a;
      IntMatrix u;
      IntMatrix v;
    };

    // Quotient rounded to nearest, so the remainder has |r| <= |d|/2.
    mpz_class nearest_quotient(mpz_class const& n, mpz_class const& d) {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      if (2 * abs(r) > abs(d)) {
        q += (sgn(r) == sgn(d)) ? 1 : -1;
      }
      return q;
    }

    // Position of a nonzero entry of least absolute value in the trailing
    // block starting at (t, t).
    std::optional<std::pair<std::size_t, std::size_t>>
    min_pivot(IntMatrix const& a, std::size_t t) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
          if (a(i, j) != 0
              && (!best || abs(a(i, j)) < abs(a(best->first, best->second)))) {
            best = {i, j};
          }
        }
      }
      return best;
    }

    // Position of a least nonzero entry in row t or column t of the trailing
    // block.
    std::pair<std::size_t, std::size_t> min_in_cross(IntMatrix const& a,
                                                     std::size_t      t) {
      std::pair<std::size_t, std::size_t> best{t, t};
      auto better = [&](std::size_t i, std::size_t j) {
        return a(i, j) != 0
               && (a(best.first, best.second) == 0
                   || abs(a(i, j)) < abs(a(best.first, best.second)));
      };
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (better(i, t)) {
          best = {i, t};
        }
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (better(t, j)) {
          best = {t, j};
        }
      }
      return best;
    }

  }  // namespace

  IntMatrix SnfResult::diagonal(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
      d(i, i) = invariant_factors[i];
    }
    return d;
  }

  SnfResult smith_normal_form(IntMatrix const& m) {
    SnfWork           w(m);
    std::size_t const limit = std::min(m.rows(), m.cols());
    std::size_t       t     = 0;
    for (; t < limit; ++t) {
      auto pivot = min_pivot(w.a, t);
      if (!pivot) {
        break;
      }
      w.swap_rows(t, pivot->first);
      w.swap_cols(t, pivot->second);

      while (true) {
        for (std::size_t i = t + 1; i < m.rows(); ++i) {
          if (w.a(i, t) != 0) {
            w.add_row(i, t, -nearest_quotient(w.a(i, t), w.a(t, t)));
          }
        }
        for (std::size_t j = t + 1; j < m.cols(); ++j) {
          if (w.a(t, j) != 0) {
            w.add_col(j, t, -nearest_quotient(w.a(t, j), w.a(t, t)));
          }
        }
        auto [pi, pj] = min_in_cross(w.a, t);
        if (pi != t || pj != t) {
          // A remainder survived; it is smaller than the pivot.
          w.swap_rows(t, pi);
          w.swap_cols(t, pj);
          continue;
        }
        // Row and column t are clear. Enforce d_t | every trailing entry.
        bool clean = true;
        for (std::size_t i = t + 1; i < m.rows() && clean; ++i) {
          for (std::size_t j = t + 1; j < m.cols(); ++j) {
            if (mpz_divisible_p(w.a(i, j).get_mpz_t(), w.a(t, t).get_mpz_t())
                == 0) {
              w.add_row(t, i, 1);
              clean = false;
              break;
            }
          }
        }
        if (clean) {
          break;
        }
      }
      if (w.a(t, t) < 0) {
        w.negate_row(t);
      }
    }

    SnfResult result;
    for (std::size_t i = 0; i < t; ++i) {
      result.invariant_factors.push_back(w.a(i, i));
    }
    result.free_rank = m.rows() - t;
    result.u         = std::move(w.u);
    result.v         = std::move(w.v);
    return result;
  }

  mpz_class Cokernel::torsion_order() const {
    mpz_class result = 1;
    for (auto const& d : torsion) {
      result *= d;
    }
    return result;
  }

  bool Cokernel::has_element_of_order(mpz_class const& m) const {
    if (m <= 0) {
      return false;
    }
    if (m == 1) {
      return true;
    }
    for (auto const& d : torsion) {
      if (mpz_divisible_p(d.get_mpz_t(), m.get_mpz_t()) != 0) {
        return true;
      }
    }
    return false;
  }

  Cokernel cokernel(SnfResult const& snf) {
    Cokernel result;
    result.free_rank = snf.free_rank;
    for (auto const& d : snf.invariant_factors) {
      if (d > 1) {
        result.torsion.push_back(d);
      }
    }
    return result;
  }

  Cokernel cokernel(IntMatrix const& m) {
    return cokernel(smith_normal_form(m));
  }

}  // namespace fibertor
