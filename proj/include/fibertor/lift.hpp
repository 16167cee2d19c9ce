#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fibertor/automorphism.hpp"
#include "fibertor/coset_table.hpp"
#include "fibertor/int_matrix.hpp"
#include "fibertor/schreier.hpp"

namespace fibertor {

  // Canonical table of phi(H) for the subgroup H described by `table`.
  // A word w lies in phi(H) iff phi^-1(w) lies in H, so generator g of the
  // new table acts as phi^-1(g) acts on the old one.
  CosetTable image_subgroup(FreeAutomorphism const& phi,
                            CosetTable const&       table);

  // Least k >= 1 with phi^k(H) = H. The orbit of H lives in the finite set
  // of index-m subgroups, so k is at most their number, which is the
  // default cap. Throws ResourceLimit when an explicit cap is exceeded.
  std::uint64_t orbit_period(FreeAutomorphism const&      phi,
                             CosetTable const&            table,
                             std::optional<std::uint64_t> max_period = {});

  // The automorphism that phi_k (which must preserve the subgroup) induces
  // on the subgroup, written in the Schreier basis.
  FreeAutomorphism restrict(FreeAutomorphism const& phi_k,
                            SchreierBasis const&    basis);

  // Permutation of the cosets (the fibre over the basepoint) induced by the
  // basepoint-fixing lift of phi_k: H t_c  ->  H phi_k(t_c).
  std::vector<int> fiber_permutation(FreeAutomorphism const& phi_k,
                                     SchreierBasis const&    basis);

  // Order of a permutation of {0, ..., m-1}.
  std::uint64_t permutation_order(std::vector<int> const& perm);

  // Matrix of phi: H_from -> H_to on first homology, in the two Schreier
  // bases (column j holds the exponent sums of phi(s_j) rewritten in the
  // target basis). Throws InvalidInput unless phi(H_from) lies in H_to.
  IntMatrix transfer_matrix(FreeAutomorphism const& phi,
                            SchreierBasis const&    from,
                            SchreierBasis const&    to);

  // H_1 action of phi^k on H, as the product of the transfer matrices along
  // H -> phi(H) -> ... -> phi^k(H). Words stay short however large k is.
  // Throws InvalidInput if phi^k(H) != H.
  IntMatrix h1_action_along_orbit(FreeAutomorphism const& phi,
                                  CosetTable const&       table,
                                  std::uint64_t           k);

  struct LiftOptions {
    std::size_t                  max_word_length = 1'000'000;
    std::optional<std::uint64_t> max_period;
    // Also build phi^k restricted to H as words. Image lengths grow
    // exponentially in k for most automorphisms.
    bool with_restricted = false;
  };

  struct LiftResult {
    CosetTable                      base_table;
    std::uint64_t                   power = 1;
    std::optional<FreeAutomorphism> restricted;
    IntMatrix                       h1_action;
  };

  // orbit_period, then the H_1 action of phi^power on the subgroup. With
  // `with_restricted`, the restricted automorphism is computed too and its
  // abelianization must agree with h1_action; exceeding max_word_length is
  // then a ResourceLimit.
  LiftResult lift_h1(FreeAutomorphism const& phi,
                     CosetTable const&       table,
                     LiftOptions const&      options = {});

}  // namespace fibertor
