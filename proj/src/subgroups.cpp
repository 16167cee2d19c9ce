#include "fibertor/subgroups.hpp"

#include <string>

#include "fibertor/error.hpp"

namespace fibertor {

  // Low-index backtracking for a free group: there are no relators, so a
  // partial table is consistent as long as every generator stays injective.
  // Cells are filled in row-major (coset, column) order and a new coset is
  // only ever created at the first cell that reaches it, so every complete
  // table is produced already canonical and exactly once.
  class SubgroupEnumerator {
   public:
    SubgroupEnumerator(int                                    rank,
                       int                                    index,
                       std::function<bool(CosetTable const&)> visit,
                       std::size_t                            max_count)
        : _rank(rank),
          _index(index),
          _cols(2 * rank),
          _table(static_cast<std::size_t>(index) * 2 * rank, -1),
          _visit(std::move(visit)),
          _max_count(max_count) {}

    std::size_t run() {
      _defined = 1;
      fill(0);
      return _count;
    }

   private:
    int& cell(int coset, int col) {
      return _table[static_cast<std::size_t>(coset) * _cols + col];
    }

    static int inverse_column(int col) {
      return col ^ 1;
    }

    void emit() {
      if (_count == _max_count) {
        throw ResourceLimit("more than " + std::to_string(_max_count)
                            + " subgroups of index " + std::to_string(_index)
                            + " in rank " + std::to_string(_rank));
      }
      std::vector<std::vector<int>> perms(_rank, std::vector<int>(_index));
      for (int g = 0; g < _rank; ++g) {
        for (int c = 0; c < _index; ++c) {
          perms[g][c] = cell(c, 2 * g);
        }
      }
      ++_count;
      if (!_visit(CosetTable(std::move(perms)))) {
        _stopped = true;
      }
    }

    void fill(std::size_t pos) {
      std::size_t const end = static_cast<std::size_t>(_defined) * _cols;
      while (pos < end && _table[pos] >= 0) {
        ++pos;
      }
      if (pos >= end) {
        // Every defined coset is complete; a full table needs all m.
        if (_defined == _index) {
          emit();
        }
        return;
      }
      int const c   = static_cast<int>(pos / _cols);
      int const col = static_cast<int>(pos % _cols);
      int const inv = inverse_column(col);
      for (int d = 0; d < _defined && !_stopped; ++d) {
        if (cell(d, inv) < 0) {
          cell(c, col) = d;
          cell(d, inv) = c;
          fill(pos + 1);
          cell(c, col) = -1;
          cell(d, inv) = -1;
        }
      }
      if (_defined < _index && !_stopped) {
        int const d  = _defined++;
        cell(c, col) = d;
        cell(d, inv) = c;
        fill(pos + 1);
        cell(c, col) = -1;
        cell(d, inv) = -1;
        --_defined;
      }
    }

    int                                    _rank;
    int                                    _index;
    int                                    _cols;
    std::vector<int>                       _table;
    std::function<bool(CosetTable const&)> _visit;
    std::size_t                            _max_count;
    std::size_t                            _count   = 0;
    int                                    _defined = 1;
    bool                                   _stopped = false;
  };

  std::size_t for_each_subgroup(int                                    rank,
                                int                                    index,
                                std::function<bool(CosetTable const&)> visit,
                                EnumerationLimits                      limits) {
    if (rank < 1 || index < 1) {
      throw InvalidInput("subgroup enumeration needs rank >= 1 and index >= 1");
    }
    if (index > limits.max_index) {
      throw ResourceLimit("index " + std::to_string(index)
                          + " exceeds the cap of "
                          + std::to_string(limits.max_index));
    }
    SubgroupEnumerator e(rank, index, std::move(visit), limits.max_count);
    return e.run();
  }

  std::vector<CosetTable> enumerate_subgroups(int               rank,
                                              int               index,
                                              EnumerationLimits limits) {
    std::vector<CosetTable> result;
    for_each_subgroup(
        rank,
        index,
        [&result](CosetTable const& t) {
          result.push_back(t);
          return true;
        },
        limits);
    return result;
  }

  mpz_class subgroup_count(int rank, int index) {
    if (rank < 1 || index < 1) {
      throw InvalidInput("subgroup count needs rank >= 1 and index >= 1");
    }
    // N_m = m (m!)^(r-1) - sum_{i<m} ((m-i)!)^(r-1) N_i
    std::vector<mpz_class> fact(index + 1), count(index + 1);
    fact[0] = 1;
    for (int i = 1; i <= index; ++i) {
      fact[i] = fact[i - 1] * i;
    }
    auto pw = [rank](mpz_class const& x) {
      mpz_class y;
      mpz_pow_ui(y.get_mpz_t(), x.get_mpz_t(), rank - 1);
      return y;
    };
    for (int m = 1; m <= index; ++m) {
      count[m] = m * pw(fact[m]);
      for (int i = 1; i < m; ++i) {
        count[m] -= pw(fact[m - i]) * count[i];
      }
    }
    return count[index];
  }

}  // namespace fibertor
