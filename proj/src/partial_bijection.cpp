#include "crossed/partial_bijection.hpp"

#include <string>

#include "crossed/errors.hpp"

namespace crossed {

  PartialBijection::PartialBijection(std::size_t degree)
      : _images(degree, undefined) {}

  PartialBijection::PartialBijection(
      std::size_t                                    degree,
      std::vector<std::pair<point_type, point_type>> graph)
      : _images(degree, undefined) {
    std::vector<bool> hit(degree, false);
    for (auto [x, y] : graph) {
      if (x >= degree || y >= degree) {
        throw Error(Errc::DimensionMismatch,
                    "point out of range for carrier of size "
                        + std::to_string(degree));
      }
      if (_images[x] != undefined && _images[x] != y) {
        throw Error(Errc::NotInjective,
                    "point " + std::to_string(x) + " assigned twice");
      }
      if (hit[y] && _images[x] != y) {
        throw Error(Errc::NotInjective,
                    "point " + std::to_string(y) + " hit twice");
      }
      _images[x] = y;
      hit[y]     = true;
    }
  }

  PartialBijection PartialBijection::from_images(std::vector<point_type> images) {
    std::vector<std::pair<point_type, point_type>> graph;
    for (point_type x = 0; x < images.size(); ++x) {
      if (images[x] != undefined) {
        graph.emplace_back(x, images[x]);
      }
    }
    return PartialBijection(images.size(), std::move(graph));
  }

  PartialBijection PartialBijection::identity(std::size_t degree) {
    PartialBijection f(degree);
    for (point_type x = 0; x < degree; ++x) {
      f._images[x] = x;
    }
    return f;
  }

  PartialBijection PartialBijection::identity_on(std::size_t degree,
                                                 std::span<point_type const> subset) {
    std::vector<std::pair<point_type, point_type>> graph;
    for (auto x : subset) {
      graph.emplace_back(x, x);
    }
    return PartialBijection(degree, std::move(graph));
  }

  std::vector<PartialBijection::point_type> PartialBijection::domain() const {
    std::vector<point_type> result;
    for (point_type x = 0; x < _images.size(); ++x) {
      if (_images[x] != undefined) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::vector<PartialBijection::point_type> PartialBijection::image() const {
    std::vector<bool> hit(_images.size(), false);
    for (auto y : _images) {
      if (y != undefined) {
        hit[y] = true;
      }
    }
    std::vector<point_type> result;
    for (point_type y = 0; y < hit.size(); ++y) {
      if (hit[y]) {
        result.push_back(y);
      }
    }
    return result;
  }

  std::size_t PartialBijection::rank() const noexcept {
    std::size_t r = 0;
    for (auto y : _images) {
      r += (y != undefined);
    }
    return r;
  }

  bool PartialBijection::is_idempotent() const noexcept {
    for (point_type x = 0; x < _images.size(); ++x) {
      if (_images[x] != undefined && _images[x] != x) {
        return false;
      }
    }
    return true;
  }

  bool PartialBijection::is_total() const noexcept {
    return rank() == degree();
  }

  PartialBijection compose(PartialBijection const& f, PartialBijection const& g) {
    if (f.degree() != g.degree()) {
      throw Error(Errc::CarrierMismatch,
                  "cannot compose maps on carriers of size "
                      + std::to_string(f.degree()) + " and "
                      + std::to_string(g.degree()));
    }
    std::vector<PartialBijection::point_type> images(g.degree(),
                                                     PartialBijection::undefined);
    for (PartialBijection::point_type x = 0; x < g.degree(); ++x) {
      auto y = g[x];
      if (y != PartialBijection::undefined) {
        images[x] = f[y];
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  PartialBijection inverse(PartialBijection const& f) {
    std::vector<PartialBijection::point_type> images(f.degree(),
                                                     PartialBijection::undefined);
    for (PartialBijection::point_type x = 0; x < f.degree(); ++x) {
      if (f[x] != PartialBijection::undefined) {
        images[f[x]] = x;
      }
    }
    return PartialBijection::from_images(std::move(images));
  }

  bool is_restriction_of(PartialBijection const& f, PartialBijection const& g) {
    if (f.degree() != g.degree()) {
      return false;
    }
    for (PartialBijection::point_type x = 0; x < f.degree(); ++x) {
      if (f[x] != PartialBijection::undefined && f[x] != g[x]) {
        return false;
      }
    }
    return true;
  }

  std::ostream& operator<<(std::ostream& os, PartialBijection const& f) {
    os << "{";
    bool first = true;
    for (PartialBijection::point_type x = 0; x < f.degree(); ++x) {
      if (f[x] != PartialBijection::undefined) {
        os << (first ? "" : ", ") << x << "->" << f[x];
        first = false;
      }
    }
    return os << "} on " << f.degree();
  }

}  // namespace crossed

std::size_t std::hash<crossed::PartialBijection>::operator()(
    crossed::PartialBijection const& f) const noexcept {
  std::size_t seed = f.degree();
  for (auto y : f.images()) {
    seed ^= std::hash<std::uint32_t>{}(y) + 0x9e3779b97f4a7c15ULL + (seed << 6)
            + (seed >> 2);
  }
  return seed;
}
