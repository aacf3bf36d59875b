#ifndef CROSSED_PARTIAL_BIJECTION_HPP_
#define CROSSED_PARTIAL_BIJECTION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace crossed {

  // An injective partial map on the carrier {0, ..., degree - 1}. Points
  // outside the domain map to `undefined`.
  class PartialBijection {
   public:
    using point_type = std::uint32_t;
    static constexpr point_type undefined = UINT32_MAX;

    PartialBijection() = default;

    // The empty map on `degree` points.
    explicit PartialBijection(std::size_t degree);

    // Throws Error(NotInjective) or Error(DimensionMismatch) for bad data.
    PartialBijection(std::size_t                                    degree,
                     std::vector<std::pair<point_type, point_type>> graph);

    // `images[x]` is the image of x or `undefined`.
    static PartialBijection from_images(std::vector<point_type> images);

    static PartialBijection identity(std::size_t degree);
    static PartialBijection identity_on(std::size_t                 degree,
                                        std::span<point_type const> subset);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    point_type operator[](point_type x) const noexcept {
      return _images[x];
    }

    bool defined_at(point_type x) const noexcept {
      return x < _images.size() && _images[x] != undefined;
    }

    std::vector<point_type> domain() const;
    std::vector<point_type> image() const;
    std::size_t             rank() const noexcept;

    bool is_idempotent() const noexcept;
    bool is_total() const noexcept;

    std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    friend bool operator==(PartialBijection const&,
                           PartialBijection const&) = default;
    friend auto operator<=>(PartialBijection const&,
                            PartialBijection const&) = default;

   private:
    std::vector<point_type> _images;
  };

  // f o g on the largest domain where it makes sense: the domain is
  // g^{-1}(dom f intersect im g). Throws Error(CarrierMismatch).
  PartialBijection compose(PartialBijection const& f, PartialBijection const& g);

  PartialBijection inverse(PartialBijection const& f);

  // f is a restriction of g.
  bool is_restriction_of(PartialBijection const& f, PartialBijection const& g);

  std::ostream& operator<<(std::ostream& os, PartialBijection const& f);

}  // namespace crossed

template <>
struct std::hash<crossed::PartialBijection> {
  std::size_t operator()(crossed::PartialBijection const& f) const noexcept;
};

#endif  // CROSSED_PARTIAL_BIJECTION_HPP_
