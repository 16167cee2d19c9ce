#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fibertor/int_matrix.hpp"
#include "fibertor/word.hpp"

namespace fibertor {
  class SchreierBasis;
}

namespace fibertor {

  // An automorphism of the free group of rank r, given by the images of the
  // generators together with the images under its inverse. Construction
  // checks that both composites are the identity on generators, so every
  // instance is a certified automorphism.
  class FreeAutomorphism {
   public:
    FreeAutomorphism(std::vector<Word> images,
                     std::vector<Word> inverse_images);

    static FreeAutomorphism identity(int rank);

    [[nodiscard]] int rank() const noexcept {
      return static_cast<int>(_images.size());
    }
    [[nodiscard]] std::vector<Word> const& images() const noexcept {
      return _images;
    }
    [[nodiscard]] std::vector<Word> const& inverse_images() const noexcept {
      return _inverse_images;
    }

    // Substitutes images for generators and reduces.
    [[nodiscard]] Word apply(Word const& w) const;
    [[nodiscard]] Word apply_inverse(Word const& w) const;

    [[nodiscard]] FreeAutomorphism inverse() const {
      return FreeAutomorphism(_inverse_images, _images, unchecked_tag{});
    }

    // Largest image length over both directions.
    [[nodiscard]] std::size_t max_image_length() const noexcept;

    // r x r matrix whose column j is the exponent-sum vector of images[j].
    [[nodiscard]] IntMatrix abelianization() const;

    friend bool operator==(FreeAutomorphism const&, FreeAutomorphism const&)
        = default;

   private:
    struct unchecked_tag {};
    FreeAutomorphism(std::vector<Word> images,
                     std::vector<Word> inverse_images,
                     unchecked_tag)
        : _images(std::move(images)),
          _inverse_images(std::move(inverse_images)) {}

    friend FreeAutomorphism compose(FreeAutomorphism const&,
                                    FreeAutomorphism const&);
    // Rewritten images of an invertible map are inverse by construction;
    // re-checking costs a product of word lengths.
    friend FreeAutomorphism restrict(FreeAutomorphism const&,
                                     SchreierBasis const&);

    std::vector<Word> _images;
    std::vector<Word> _inverse_images;
  };

  // (phi o psi)(g) = phi(psi(g)).
  FreeAutomorphism compose(FreeAutomorphism const& phi,
                           FreeAutomorphism const& psi);

  // phi^k for any integer k (negative powers use the inverse). Throws
  // ResourceLimit if an image would exceed `max_word_length` letters.
  FreeAutomorphism power(FreeAutomorphism const& phi,
                         std::int64_t          k,
                         std::size_t max_word_length = 10'000'000);

  // Elementary Nielsen transformations; all are automorphisms.
  namespace nielsen {
    // x_i <-> x_j
    FreeAutomorphism swap(int rank, int i, int j);
    // x_i -> x_i^-1
    FreeAutomorphism invert(int rank, int i);
    // x_i -> x_i x_j  (i != j)
    FreeAutomorphism multiply_right(int rank, int i, int j);
    // x_i -> x_j x_i  (i != j)
    FreeAutomorphism multiply_left(int rank, int i, int j);

    // Composite of `moves` uniformly chosen elementary transformations.
    FreeAutomorphism random(int rank, int moves, std::mt19937_64& rng);
  }  // namespace nielsen

}  // namespace fibertor
