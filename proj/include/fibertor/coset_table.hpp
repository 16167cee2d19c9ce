#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "fibertor/word.hpp"

namespace fibertor {

  // A transitive right action of the free group of rank r on the cosets
  // {0, ..., m-1} of an index-m subgroup, with coset 0 the subgroup itself.
  // Tables are always in canonical form: cosets are numbered in order of
  // first appearance when scanning cosets 0, 1, ... and, within a coset, the
  // columns x_1, x_1^-1, x_2, x_2^-1, ... . Two tables describe the same
  // subgroup iff they are equal.
  class CosetTable {
   public:
    // perms[g][c] is the image of coset c under generator g+1 (0-based).
    // Throws InvalidInput unless the action is by bijections, transitive and
    // already canonical.
    static CosetTable from_perms(std::vector<std::vector<int>> perms);

    // Canonical table of the subgroup stabilising `base` in an arbitrary
    // transitive action. Throws InvalidInput if the action is not transitive.
    static CosetTable canonicalize(std::vector<std::vector<int>> const& perms,
                                   int base = 0);

    // The whole group (index 1).
    static CosetTable trivial(int rank);

    [[nodiscard]] int rank() const noexcept {
      return static_cast<int>(_perms.size());
    }
    [[nodiscard]] int index() const noexcept {
      return _perms.empty() ? 1 : static_cast<int>(_perms[0].size());
    }
    [[nodiscard]] std::vector<std::vector<int>> const& perms() const noexcept {
      return _perms;
    }

    // Image of `coset` under a single letter.
    [[nodiscard]] int act(int coset, Letter x) const {
      return x > 0 ? _perms[x - 1][coset] : _inverse[-x - 1][coset];
    }

    // Image of `start` under the right action of w.
    [[nodiscard]] int trace(Word const& w, int start = 0) const;

    [[nodiscard]] bool contains(Word const& w) const {
      return trace(w, 0) == 0;
    }

    // Row-major listing of the table by (coset, column); tables compare in
    // this order.
    [[nodiscard]] std::vector<int> encoding() const;

    friend bool operator==(CosetTable const& a, CosetTable const& b) {
      return a._perms == b._perms;
    }
    friend std::strong_ordering operator<=>(CosetTable const& a,
                                            CosetTable const& b);

   private:
    CosetTable() = default;
    explicit CosetTable(std::vector<std::vector<int>> perms);
    friend class SubgroupEnumerator;

    std::vector<std::vector<int>> _perms;
    std::vector<std::vector<int>> _inverse;
  };

  // Column of the table used for a letter: x_g -> 2(g-1), x_g^-1 -> 2(g-1)+1.
  inline int column_of(Letter x) {
    return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
  }
  inline Letter letter_of_column(int col) {
    return (col % 2 == 0) ? (col / 2 + 1) : -(col / 2 + 1);
  }

}  // namespace fibertor
