#include "fibertor/schreier.hpp"

#include <cstdlib>
#include <string>

#include "fibertor/error.hpp"

namespace fibertor {

  SchreierBasis::SchreierBasis(CosetTable table) : _table(std::move(table)) {
    int const r = _table.rank();
    int const m = _table.index();
    _transversal.assign(m, Word());
    _edge.assign(static_cast<std::size_t>(m) * r, -1);

    // Tree edges in breadth-first order. Because the table is canonical the
    // first reference to coset d (scanning row-major) is its parent edge.
    std::vector<bool> tree(static_cast<std::size_t>(m) * r, false);
    int               reached = 1;
    for (int c = 0; c < m; ++c) {
      for (int col = 0; col < 2 * r; ++col) {
        Letter const x = letter_of_column(col);
        int const    d = _table.act(c, x);
        if (d == reached) {
          _transversal[d] = _transversal[c] * Word::generator(x);
          ++reached;
          // Record as the positive edge (source, g).
          if (x > 0) {
            tree[static_cast<std::size_t>(c) * r + (x - 1)] = true;
          } else {
            tree[static_cast<std::size_t>(d) * r + (-x - 1)] = true;
          }
        } else if (d > reached) {
          throw InternalError("coset table is not canonical");
        }
      }
    }
    for (int c = 0; c < m; ++c) {
      for (int g = 1; g <= r; ++g) {
        std::size_t const e = static_cast<std::size_t>(c) * r + (g - 1);
        if (tree[e]) {
          continue;
        }
        int const d = _table.act(c, g);
        _edge[e]    = static_cast<int>(_generators.size());
        _generators.push_back(_transversal[c] * Word::generator(g)
                              * _transversal[d].inverse());
      }
    }
    if (static_cast<int>(_generators.size()) != m * (r - 1) + 1) {
      throw InternalError("Schreier basis has the wrong rank");
    }
  }

  Word SchreierBasis::rewrite(Word const& w) const {
    int const           r = _table.rank();
    int                 c = 0;
    std::vector<Letter> out;
    if (w.max_generator() > r) {
      throw InvalidInput("word " + w.to_string()
                         + " is outside the ambient free group");
    }
    for (Letter x : w.letters()) {
      if (x > 0) {
        int const j = _edge[static_cast<std::size_t>(c) * r + (x - 1)];
        if (j >= 0) {
          push_reduced(out, j + 1);
        }
        c = _table.act(c, x);
      } else {
        int const d = _table.act(c, x);
        int const j = _edge[static_cast<std::size_t>(d) * r + (-x - 1)];
        if (j >= 0) {
          push_reduced(out, -(j + 1));
        }
        c = d;
      }
    }
    if (c != 0) {
      throw InvalidInput("word " + w.to_string() + " is not in the subgroup");
    }
    return Word::reduce(out, rank());
  }

  Word SchreierBasis::expand(Word const& s) const {
    if (s.max_generator() > rank()) {
      throw InvalidInput("word is not over the subgroup basis");
    }
    Word result;
    for (Letter x : s.letters()) {
      result *= x > 0 ? _generators[x - 1] : _generators[-x - 1].inverse();
    }
    return result;
  }

  IntMatrix SchreierBasis::inclusion_matrix() const {
    int const r = _table.rank();
    IntMatrix result(r, _generators.size());
    for (std::size_t j = 0; j < _generators.size(); ++j) {
      auto counts = exponent_sum(_generators[j], r);
      for (int i = 0; i < r; ++i) {
        result(i, j) = counts[i];
      }
    }
    return result;
  }

}  // namespace fibertor
