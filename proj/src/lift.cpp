#include "fibertor/lift.hpp"

#include <numeric>
#include <string>

#include "fibertor/error.hpp"
#include "fibertor/subgroups.hpp"

namespace fibertor {

  namespace {
    void check_ranks(FreeAutomorphism const& phi, CosetTable const& table) {
      if (phi.rank() != table.rank()) {
        throw InvalidInput("automorphism of rank " + std::to_string(phi.rank())
                           + " cannot act on a table of rank "
                           + std::to_string(table.rank()));
      }
    }
  }  // namespace

  CosetTable image_subgroup(FreeAutomorphism const& phi,
                            CosetTable const&       table) {
    check_ranks(phi, table);
    int const                     m = table.index();
    std::vector<std::vector<int>> perms(phi.rank(), std::vector<int>(m));
    for (int g = 1; g <= phi.rank(); ++g) {
      Word const pre = phi.inverse_images()[g - 1];
      for (int c = 0; c < m; ++c) {
        perms[g - 1][c] = table.trace(pre, c);
      }
    }
    return CosetTable::canonicalize(perms, 0);
  }

  std::uint64_t orbit_period(FreeAutomorphism const&      phi,
                             CosetTable const&            table,
                             std::optional<std::uint64_t> max_period) {
    check_ranks(phi, table);
    mpz_class const orbit_bound = subgroup_count(table.rank(), table.index());
    std::uint64_t   cap         = max_period.value_or(0);
    if (!max_period) {
      cap = orbit_bound.fits_ulong_p() ? orbit_bound.get_ui()
                                       : std::uint64_t(-1);
    }
    CosetTable current = table;
    for (std::uint64_t k = 1; k <= cap; ++k) {
      current = image_subgroup(phi, current);
      if (current == table) {
        return k;
      }
    }
    if (cmp(orbit_bound, mpz_class(std::to_string(cap))) <= 0) {
      throw InternalError("orbit longer than the number of subgroups");
    }
    throw ResourceLimit("orbit period exceeds the cap of "
                        + std::to_string(cap));
  }

  FreeAutomorphism restrict(FreeAutomorphism const& phi_k,
                            SchreierBasis const&    basis) {
    check_ranks(phi_k, basis.table());
    std::vector<Word> images, inverse_images;
    for (Word const& s : basis.generators()) {
      Word const img = phi_k.apply(s);
      Word const pre = phi_k.apply_inverse(s);
      if (!basis.table().contains(img) || !basis.table().contains(pre)) {
        throw InvalidInput("automorphism does not preserve the subgroup");
      }
      images.push_back(basis.rewrite(img));
      inverse_images.push_back(basis.rewrite(pre));
    }
    return FreeAutomorphism(std::move(images), std::move(inverse_images),
                            FreeAutomorphism::unchecked_tag{});
  }

  std::vector<int> fiber_permutation(FreeAutomorphism const& phi_k,
                                     SchreierBasis const&    basis) {
    check_ranks(phi_k, basis.table());
    std::vector<int> perm;
    for (Word const& t : basis.transversal()) {
      perm.push_back(basis.table().trace(phi_k.apply(t), 0));
    }
    return perm;
  }

  std::uint64_t permutation_order(std::vector<int> const& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::uint64_t     order = 1;
    for (std::size_t start = 0; start < perm.size(); ++start) {
      if (seen[start]) {
        continue;
      }
      std::uint64_t len = 0;
      for (std::size_t c = start; !seen[c]; c = perm[c]) {
        seen[c] = true;
        ++len;
      }
      order = std::lcm(order, len);
    }
    return order;
  }

  IntMatrix transfer_matrix(FreeAutomorphism const& phi,
                            SchreierBasis const&    from,
                            SchreierBasis const&    to) {
    check_ranks(phi, from.table());
    check_ranks(phi, to.table());
    int const r = to.rank();
    IntMatrix m(static_cast<std::size_t>(r),
                static_cast<std::size_t>(from.rank()));
    for (int j = 0; j < from.rank(); ++j) {
      Word const image = phi.apply(from.generators()[j]);
      if (!to.table().contains(image)) {
        throw InvalidInput("automorphism does not map the first subgroup "
                           "into the second");
      }
      auto const sums = exponent_sum(to.rewrite(image), r);
      for (int i = 0; i < r; ++i) {
        m(i, j) = sums[i];
      }
    }
    return m;
  }

  IntMatrix h1_action_along_orbit(FreeAutomorphism const& phi,
                                  CosetTable const&       table,
                                  std::uint64_t           k) {
    check_ranks(phi, table);
    SchreierBasis current(table);
    IntMatrix     action = IntMatrix::identity(current.rank());
    for (std::uint64_t step = 0; step < k; ++step) {
      SchreierBasis next(step + 1 == k ? table
                                       : image_subgroup(phi, current.table()));
      action  = transfer_matrix(phi, current, next) * action;
      current = std::move(next);
    }
    return action;
  }

  LiftResult lift_h1(FreeAutomorphism const& phi,
                     CosetTable const&       table,
                     LiftOptions const&      options) {
    std::uint64_t const k  = orbit_period(phi, table, options.max_period);
    IntMatrix           h1 = h1_action_along_orbit(phi, table, k);
    std::optional<FreeAutomorphism> restricted;
    if (options.with_restricted) {
      FreeAutomorphism const phi_k = power(
          phi, static_cast<std::int64_t>(k), options.max_word_length);
      restricted = restrict(phi_k, SchreierBasis(table));
      if (restricted->max_image_length() > options.max_word_length) {
        throw ResourceLimit(
            "restricted automorphism exceeds the word length cap");
      }
      if (restricted->abelianization() != h1) {
        throw InternalError("restricted automorphism disagrees with the "
                            "transfer matrix product");
      }
    }
    return LiftResult{table, k, std::move(restricted), std::move(h1)};
  }

}  // namespace fibertor
