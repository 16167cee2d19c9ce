#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fibertor/automorphism.hpp"
#include "fibertor/coset_table.hpp"
#include "fibertor/int_matrix.hpp"

namespace fibertor {

  using Monodromy = std::variant<FreeAutomorphism, IntMatrix>;

  struct SearchConfig {
    Monodromy     monodromy = IntMatrix::identity(1);
    mpz_class     torsion_bound = 1;
    int           max_index     = 7;
    unsigned long max_power     = 1000;
    std::size_t   max_tables    = 1'000'000;
    // Recorded for reproducibility; the search itself is deterministic.
    std::uint64_t seed = 0;
  };

  enum class Route { mahler_growth, unipotent };

  std::string to_string(Route route);
  Route       route_from_string(std::string const& name);

  // Witness that the mapping torus of the lifted monodromy power has torsion
  // in H_1 of order larger than `bound`.
  struct TorsionCertificate {
    std::optional<FreeAutomorphism> automorphism;  // absent for matrix input
    std::optional<CosetTable>       cover;         // absent for matrix input
    std::uint64_t                   lift_power = 1;
    IntMatrix                       h1_matrix;
    Route                           route = Route::mahler_growth;
    mpz_class                       torus_power = 1;
    std::size_t                     free_rank   = 0;
    std::vector<mpz_class>          invariant_factors;  // torsion, all > 1
    mpz_class                       torsion_order = 1;
    mpz_class                       bound         = 1;
    // Unipotent route only: m = bound + 1 and e, with torus_power = e n.
    std::optional<mpz_class>     witness_order;
    std::optional<unsigned long> root_power;
  };

  struct SearchStats {
    std::size_t   covers_tried     = 0;
    std::size_t   finite_order     = 0;
    std::size_t   quasi_unipotent  = 0;
    std::size_t   large_eigenvalue = 0;
    std::size_t   growth_exhausted = 0;  // no n <= max_power cleared the bound
    int           max_index_reached = 0;
  };

  struct SearchOutcome {
    std::optional<TorsionCertificate> certificate;
    SearchStats                       stats;
  };

  // Covers in order of (index, canonical table); for each, the lifted H_1
  // action is classified: finite order is skipped, a large eigenvalue leads
  // to a linear scan over torus powers, and a quasi-unipotent action of
  // infinite order gets the unipotent witness with m = bound + 1. The first
  // certificate found is returned. Throws ResourceLimit if cover
  // enumeration exceeds its caps.
  SearchOutcome search(SearchConfig const& config);

  struct Verification {
    bool        ok = false;
    std::string reason;
  };

  // Recomputes everything the certificate claims from its matrices (and, for
  // cover-bearing certificates, from the automorphism and coset table).
  Verification verify(TorsionCertificate const& certificate);

}  // namespace fibertor
