#include "fibertor/automorphism.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "fibertor/error.hpp"

namespace fibertor {

  namespace {
    Word substitute(std::vector<Word> const& images, Word const& w) {
      int const rank = static_cast<int>(images.size());
      if (w.max_generator() > rank) {
        throw InvalidInput("word " + w.to_string()
                           + " is not in the free group of rank "
                           + std::to_string(rank));
      }
      std::vector<Letter> out;
      for (Letter x : w.letters()) {
        // The image of x^-1 is the inverse of the image of x.
        if (x > 0) {
          for (Letter y : images[x - 1].letters()) {
            push_reduced(out, y);
          }
        } else {
          auto const& img = images[-x - 1].letters();
          for (auto it = img.rbegin(); it != img.rend(); ++it) {
            push_reduced(out, -*it);
          }
        }
      }
      return Word::reduce(out, rank);
    }
  }  // namespace

  FreeAutomorphism::FreeAutomorphism(std::vector<Word> images,
                                     std::vector<Word> inverse_images)
      : _images(std::move(images)), _inverse_images(std::move(inverse_images)) {
    int const r = rank();
    if (r < 1) {
      throw InvalidInput("automorphism must have rank >= 1");
    }
    if (static_cast<int>(_inverse_images.size()) != r) {
      throw InvalidInput("automorphism has " + std::to_string(r)
                         + " images but "
                         + std::to_string(_inverse_images.size())
                         + " inverse images");
    }
    for (int g = 1; g <= r; ++g) {
      for (auto const* side : {&_images, &_inverse_images}) {
        if ((*side)[g - 1].max_generator() > r) {
          throw InvalidInput("image of generator " + std::to_string(g)
                             + " leaves the free group of rank "
                             + std::to_string(r));
        }
      }
    }
    for (int g = 1; g <= r; ++g) {
      Word const gen = Word::generator(g);
      if (apply(apply_inverse(gen)) != gen
          || apply_inverse(apply(gen)) != gen) {
        throw InvalidInput("supplied inverse images do not invert the "
                           "automorphism on generator "
                           + std::to_string(g));
      }
    }
  }

  FreeAutomorphism FreeAutomorphism::identity(int rank) {
    std::vector<Word> gens;
    for (int g = 1; g <= rank; ++g) {
      gens.push_back(Word::generator(g));
    }
    return FreeAutomorphism(gens, gens);
  }

  Word FreeAutomorphism::apply(Word const& w) const {
    return substitute(_images, w);
  }

  Word FreeAutomorphism::apply_inverse(Word const& w) const {
    return substitute(_inverse_images, w);
  }

  std::size_t FreeAutomorphism::max_image_length() const noexcept {
    std::size_t result = 0;
    for (auto const* side : {&_images, &_inverse_images}) {
      for (auto const& w : *side) {
        result = std::max(result, w.length());
      }
    }
    return result;
  }

  IntMatrix FreeAutomorphism::abelianization() const {
    auto const r = static_cast<std::size_t>(rank());
    IntMatrix  result(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      auto counts = exponent_sum(_images[j], rank());
      for (std::size_t i = 0; i < r; ++i) {
        result(i, j) = counts[i];
      }
    }
    return result;
  }

  FreeAutomorphism compose(FreeAutomorphism const& phi,
                           FreeAutomorphism const& psi) {
    if (phi.rank() != psi.rank()) {
      throw InvalidInput("cannot compose automorphisms of ranks "
                         + std::to_string(phi.rank()) + " and "
                         + std::to_string(psi.rank()));
    }
    std::vector<Word> images, inverse_images;
    for (int g = 0; g < phi.rank(); ++g) {
      images.push_back(phi.apply(psi._images[g]));
      inverse_images.push_back(psi.apply_inverse(phi._inverse_images[g]));
    }
    return FreeAutomorphism(
        std::move(images), std::move(inverse_images),
        FreeAutomorphism::unchecked_tag{});
  }

  FreeAutomorphism power(FreeAutomorphism const& phi,
                         std::int64_t            k,
                         std::size_t             max_word_length) {
    FreeAutomorphism base = k < 0 ? phi.inverse() : phi;
    auto             e    = static_cast<std::uint64_t>(k < 0 ? -k : k);
    FreeAutomorphism result = FreeAutomorphism::identity(phi.rank());
    auto             check  = [&](FreeAutomorphism const& f) {
      if (f.max_image_length() > max_word_length) {
        throw ResourceLimit("automorphism power exceeds word length cap of "
                            + std::to_string(max_word_length));
      }
    };
    while (e > 0) {
      if (e & 1) {
        result = compose(result, base);
        check(result);
      }
      e >>= 1;
      if (e > 0) {
        base = compose(base, base);
        check(base);
      }
    }
    return result;
  }

  namespace nielsen {
    namespace {
      void check_index(int rank, int i) {
        if (i < 1 || i > rank) {
          throw InvalidInput("generator index " + std::to_string(i)
                             + " out of range for rank "
                             + std::to_string(rank));
        }
      }

      std::vector<Word> generators(int rank) {
        std::vector<Word> gens;
        for (int g = 1; g <= rank; ++g) {
          gens.push_back(Word::generator(g));
        }
        return gens;
      }
    }  // namespace

    FreeAutomorphism swap(int rank, int i, int j) {
      check_index(rank, i);
      check_index(rank, j);
      auto images = generators(rank);
      std::swap(images[i - 1], images[j - 1]);
      return FreeAutomorphism(images, images);
    }

    FreeAutomorphism invert(int rank, int i) {
      check_index(rank, i);
      auto images     = generators(rank);
      images[i - 1]   = images[i - 1].inverse();
      return FreeAutomorphism(images, images);
    }

    FreeAutomorphism multiply_right(int rank, int i, int j) {
      check_index(rank, i);
      check_index(rank, j);
      if (i == j) {
        throw InvalidInput("Nielsen multiplication needs distinct generators");
      }
      auto images   = generators(rank);
      auto inverses = images;
      images[i - 1]   = Word::generator(i) * Word::generator(j);
      inverses[i - 1] = Word::generator(i) * Word::generator(-j);
      return FreeAutomorphism(images, inverses);
    }

    FreeAutomorphism multiply_left(int rank, int i, int j) {
      check_index(rank, i);
      check_index(rank, j);
      if (i == j) {
        throw InvalidInput("Nielsen multiplication needs distinct generators");
      }
      auto images   = generators(rank);
      auto inverses = images;
      images[i - 1]   = Word::generator(j) * Word::generator(i);
      inverses[i - 1] = Word::generator(-j) * Word::generator(i);
      return FreeAutomorphism(images, inverses);
    }

    FreeAutomorphism random(int rank, int moves, std::mt19937_64& rng) {
      FreeAutomorphism result = FreeAutomorphism::identity(rank);
      std::uniform_int_distribution<int> gen(1, rank);
      std::uniform_int_distribution<int> kind(0, rank > 1 ? 3 : 1);
      for (int step = 0; step < moves; ++step) {
        int const i = gen(rng);
        int       j = gen(rng);
        if (rank > 1) {
          while (j == i) {
            j = gen(rng);
          }
        }
        switch (kind(rng)) {
          case 0:
            result = compose(invert(rank, i), result);
            break;
          case 1:
            result = compose(swap(rank, i, j), result);
            break;
          case 2:
            result = compose(multiply_right(rank, i, j), result);
            break;
          default:
            result = compose(multiply_left(rank, i, j), result);
            break;
        }
      }
      return result;
    }
  }  // namespace nielsen

}  // namespace fibertor
