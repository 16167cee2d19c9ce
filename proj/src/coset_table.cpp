#include "fibertor/coset_table.hpp"

#include <string>

#include "fibertor/error.hpp"

namespace fibertor {

  namespace {
    void check_bijections(std::vector<std::vector<int>> const& perms) {
      if (perms.empty()) {
        throw InvalidInput("coset table needs rank >= 1");
      }
      std::size_t const m = perms[0].size();
      if (m == 0) {
        throw InvalidInput("coset table needs index >= 1");
      }
      for (std::size_t g = 0; g < perms.size(); ++g) {
        if (perms[g].size() != m) {
          throw InvalidInput("generator " + std::to_string(g + 1)
                             + " acts on the wrong number of cosets");
        }
        std::vector<bool> hit(m, false);
        for (int image : perms[g]) {
          if (image < 0 || static_cast<std::size_t>(image) >= m
              || hit[image]) {
            throw InvalidInput("generator " + std::to_string(g + 1)
                               + " does not act by a permutation");
          }
          hit[image] = true;
        }
      }
    }

    std::vector<std::vector<int>>
    inverses(std::vector<std::vector<int>> const& perms) {
      std::vector<std::vector<int>> inv(perms.size(),
                                        std::vector<int>(perms[0].size()));
      for (std::size_t g = 0; g < perms.size(); ++g) {
        for (std::size_t c = 0; c < perms[g].size(); ++c) {
          inv[g][perms[g][c]] = static_cast<int>(c);
        }
      }
      return inv;
    }
  }  // namespace

  CosetTable::CosetTable(std::vector<std::vector<int>> perms)
      : _perms(std::move(perms)), _inverse(inverses(_perms)) {}

  CosetTable CosetTable::from_perms(std::vector<std::vector<int>> perms) {
    CosetTable candidate = canonicalize(perms, 0);
    if (candidate._perms != perms) {
      throw InvalidInput("coset table is not in canonical form");
    }
    return candidate;
  }

  CosetTable CosetTable::canonicalize(std::vector<std::vector<int>> const& perms,
                                      int base) {
    check_bijections(perms);
    std::size_t const m   = perms[0].size();
    auto const        inv = inverses(perms);
    if (base < 0 || static_cast<std::size_t>(base) >= m) {
      throw InvalidInput("basepoint out of range");
    }
    // BFS numbering: new_of[old] and old_of[new].
    std::vector<int> new_of(m, -1), old_of;
    new_of[base] = 0;
    old_of.push_back(base);
    for (std::size_t k = 0; k < old_of.size(); ++k) {
      int const c = old_of[k];
      for (std::size_t g = 0; g < perms.size(); ++g) {
        for (int d : {perms[g][c], inv[g][c]}) {
          if (new_of[d] < 0) {
            new_of[d] = static_cast<int>(old_of.size());
            old_of.push_back(d);
          }
        }
      }
    }
    if (old_of.size() != m) {
      throw InvalidInput("coset table action is not transitive");
    }
    std::vector<std::vector<int>> result(perms.size(), std::vector<int>(m));
    for (std::size_t g = 0; g < perms.size(); ++g) {
      for (std::size_t c = 0; c < m; ++c) {
        result[g][new_of[c]] = new_of[perms[g][c]];
      }
    }
    return CosetTable(std::move(result));
  }

  CosetTable CosetTable::trivial(int rank) {
    if (rank < 1) {
      throw InvalidInput("coset table needs rank >= 1");
    }
    return CosetTable(std::vector<std::vector<int>>(rank, {0}));
  }

  int CosetTable::trace(Word const& w, int start) const {
    if (w.max_generator() > rank()) {
      throw InvalidInput("word " + w.to_string()
                         + " is outside the free group of rank "
                         + std::to_string(rank()));
    }
    int c = start;
    for (Letter x : w.letters()) {
      c = act(c, x);
    }
    return c;
  }

  std::vector<int> CosetTable::encoding() const {
    std::vector<int> out;
    int const        m = index();
    out.reserve(static_cast<std::size_t>(m) * 2 * rank());
    for (int c = 0; c < m; ++c) {
      for (int col = 0; col < 2 * rank(); ++col) {
        out.push_back(act(c, letter_of_column(col)));
      }
    }
    return out;
  }

  std::strong_ordering operator<=>(CosetTable const& a, CosetTable const& b) {
    if (auto cmp = a.rank() <=> b.rank(); cmp != 0) {
      return cmp;
    }
    if (auto cmp = a.index() <=> b.index(); cmp != 0) {
      return cmp;
    }
    return a.encoding() <=> b.encoding();
  }

}  // namespace fibertor
