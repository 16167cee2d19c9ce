#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibertor {

  // A letter is a signed, 1-based generator index: +i is x_i, -i is x_i^-1.
  using Letter = int;

  // A freely reduced word in a free group. The rank is not stored; callers
  // that care check it with `max_generator()` or `reduce(letters, rank)`.
  class Word {
   public:
    Word() = default;

    // Free reduction of an arbitrary letter sequence. Throws InvalidInput if a
    // letter is 0 or refers to a generator above `rank`.
    static Word reduce(std::span<Letter const> letters, int rank);

    // Text form: 'a'..'z' are generators 1..26, 'A'..'Z' their inverses.
    // The empty string (or "1") is the identity.
    static Word parse(std::string_view text, int rank);

    static Word generator(int index) {
      Word w;
      w._letters.push_back(index);
      return w;
    }

    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] int max_generator() const noexcept;

    [[nodiscard]] Word inverse() const;

    // Reduced concatenation.
    Word& operator*=(Word const& other);

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<Letter> _letters;
  };

  inline Word operator*(Word lhs, Word const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  // Appends `letter` to a reduced letter buffer, cancelling if possible.
  inline void push_reduced(std::vector<Letter>& buffer, Letter letter) {
    if (!buffer.empty() && buffer.back() == -letter) {
      buffer.pop_back();
    } else {
      buffer.push_back(letter);
    }
  }

  // Vector of signed letter counts (length `rank`).
  std::vector<long> exponent_sum(Word const& w, int rank);

}  // namespace fibertor
