#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <vector>

#include "fibertor/coset_table.hpp"

namespace fibertor {

  struct EnumerationLimits {
    int         max_index = 7;
    std::size_t max_count = 1'000'000;
  };

  // Calls `visit` on every index-m subgroup of the free group of rank r, in
  // increasing table order, until it returns false. Throws ResourceLimit if
  // m exceeds limits.max_index or more than limits.max_count tables would be
  // produced; returns the number of tables visited.
  std::size_t for_each_subgroup(int                                    rank,
                                int                                    index,
                                std::function<bool(CosetTable const&)> visit,
                                EnumerationLimits limits = {});

  std::vector<CosetTable> enumerate_subgroups(int               rank,
                                              int               index,
                                              EnumerationLimits limits = {});

  // Number of index-m subgroups of F_r by M. Hall's recursion.
  mpz_class subgroup_count(int rank, int index);

}  // namespace fibertor
