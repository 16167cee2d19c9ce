#pragma once

#include <cstddef>
#include <vector>

#include "fibertor/coset_table.hpp"
#include "fibertor/int_matrix.hpp"
#include "fibertor/word.hpp"

namespace fibertor {

  // Free basis of a finite-index subgroup from its breadth-first Schreier
  // transversal, with Reidemeister-Schreier rewriting into that basis.
  //
  // Generator j (1-based letter j in rewritten words) is
  //   t_c x_g t_{c.x_g}^-1
  // for the j-th non-tree edge (c, g) in (coset, generator) order.
  class SchreierBasis {
   public:
    explicit SchreierBasis(CosetTable table);

    [[nodiscard]] CosetTable const& table() const noexcept {
      return _table;
    }
    // transversal()[c] is the representative of coset c; prefix-closed.
    [[nodiscard]] std::vector<Word> const& transversal() const noexcept {
      return _transversal;
    }
    [[nodiscard]] std::vector<Word> const& generators() const noexcept {
      return _generators;
    }
    // m (r - 1) + 1.
    [[nodiscard]] int rank() const noexcept {
      return static_cast<int>(_generators.size());
    }

    // Rewrites w (which must lie in the subgroup) as a word in the basis.
    // Throws InvalidInput otherwise.
    [[nodiscard]] Word rewrite(Word const& w) const;

    // Inverse of rewrite: substitutes basis elements back into the ambient
    // free group.
    [[nodiscard]] Word expand(Word const& s) const;

    // r x rank matrix whose column j is the exponent sum of generator j in
    // the ambient group: the map H_1(subgroup) -> H_1(ambient).
    [[nodiscard]] IntMatrix inclusion_matrix() const;

   private:
    CosetTable        _table;
    std::vector<Word> _transversal;
    std::vector<Word> _generators;
    // _edge[c * r + g] = basis index of the edge (c, x_{g+1}), or -1 for
    // edges of the spanning tree.
    std::vector<int> _edge;
  };

  inline SchreierBasis schreier_basis(CosetTable const& table) {
    return SchreierBasis(table);
  }

}  // namespace fibertor
