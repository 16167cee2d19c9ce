#include "fibertor/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "fibertor/error.hpp"

namespace fibertor {

  Word Word::reduce(std::span<Letter const> letters, int rank) {
    Word result;
    result._letters.reserve(letters.size());
    for (Letter x : letters) {
      if (x == 0 || std::abs(x) > rank) {
        throw InvalidInput("letter " + std::to_string(x)
                           + " out of range for rank "
                           + std::to_string(rank));
      }
      push_reduced(result._letters, x);
    }
    return result;
  }

  Word Word::parse(std::string_view text, int rank) {
    std::vector<Letter> letters;
    if (text == "1") {
      return Word();
    }
    for (char c : text) {
      if (c >= 'a' && c <= 'z') {
        letters.push_back(c - 'a' + 1);
      } else if (c >= 'A' && c <= 'Z') {
        letters.push_back(-(c - 'A' + 1));
      } else {
        throw InvalidInput(std::string("invalid character '") + c
                           + "' in word \"" + std::string(text) + "\"");
      }
    }
    return reduce(letters, rank);
  }

  int Word::max_generator() const noexcept {
    int result = 0;
    for (Letter x : _letters) {
      result = std::max(result, std::abs(x));
    }
    return result;
  }

  Word Word::inverse() const {
    Word result;
    result._letters.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      result._letters.push_back(-*it);
    }
    return result;
  }

  Word& Word::operator*=(Word const& other) {
    auto it = other._letters.begin();
    while (it != other._letters.end() && !_letters.empty()
           && _letters.back() == -*it) {
      _letters.pop_back();
      ++it;
    }
    _letters.insert(_letters.end(), it, other._letters.end());
    return *this;
  }

  std::string Word::to_string() const {
    // Generators beyond 26 have no single-letter name; fall back to x<i>.
    std::string out;
    for (Letter x : _letters) {
      int g = std::abs(x);
      if (g <= 26) {
        out += static_cast<char>((x > 0 ? 'a' : 'A') + g - 1);
      } else {
        out += (x > 0 ? "x" : "X") + std::to_string(g);
      }
    }
    return out;
  }

  std::vector<long> exponent_sum(Word const& w, int rank) {
    std::vector<long> counts(rank, 0);
    for (Letter x : w.letters()) {
      counts[std::abs(x) - 1] += (x > 0 ? 1 : -1);
    }
    return counts;
  }

}  // namespace fibertor
