#ifndef CROSSED_TESTS_ORACLES_HPP_
#define CROSSED_TESTS_ORACLES_HPP_

#include <set>
#include <vector>

#include "crossed/inverse_semigroup.hpp"

namespace oracles {

  using namespace crossed;

  // Partial maps as image vectors (-1 = undefined), closure by a
  // plain worklist over std::set.
  using Img = std::vector<int>;

  inline Img img(PartialBijection const& f) {
    Img out(f.degree(), -1);
    for (std::size_t x = 0; x < f.degree(); ++x) {
      if (f.defined_at(static_cast<PartialBijection::point_type>(x))) {
        out[x] = static_cast<int>(f[static_cast<PartialBijection::point_type>(x)]);
      }
    }
    return out;
  }

  // (f o g)(x) = f(g(x))
  inline Img after(Img const& f, Img const& g) {
    Img out(g.size(), -1);
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (g[x] >= 0) {
        out[x] = f[static_cast<std::size_t>(g[x])];
      }
    }
    return out;
  }

  inline Img inv(Img const& f) {
    Img out(f.size(), -1);
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (f[x] >= 0) {
        out[static_cast<std::size_t>(f[x])] = static_cast<int>(x);
      }
    }
    return out;
  }

  inline std::set<Img> closure(std::vector<PartialBijection> const& gens) {
    std::set<Img>    seen;
    std::vector<Img> todo;
    for (auto const& g : gens) {
      for (auto const& h : {img(g), inv(img(g))}) {
        if (seen.insert(h).second) {
          todo.push_back(h);
        }
      }
    }
    while (!todo.empty()) {
      Img f = todo.back();
      todo.pop_back();
      std::vector<Img> snapshot(seen.begin(), seen.end());
      for (auto const& g : snapshot) {
        for (auto const& h : {after(f, g), after(g, f)}) {
          if (seen.insert(h).second) {
            todo.push_back(h);
          }
        }
      }
    }
    return seen;
  }

  inline std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  inline std::size_t symmetric_inverse_monoid_size(std::size_t n) {
    std::size_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t fact = 1;
      for (std::size_t i = 2; i <= k; ++i) {
        fact *= i;
      }
      total += binom(n, k) * binom(n, k) * fact;
    }
    return total;
  }

  // Generators of the symmetric inverse monoid: transposition, n-cycle,
  // restriction to all but the last point.
  inline std::vector<PartialBijection> sim_generators(std::size_t n) {
    std::vector<PartialBijection::point_type> cycle(n), swap(n), restrict(n);
    for (std::size_t x = 0; x < n; ++x) {
      cycle[x]    = static_cast<PartialBijection::point_type>((x + 1) % n);
      swap[x]     = static_cast<PartialBijection::point_type>(x);
      restrict[x] = static_cast<PartialBijection::point_type>(x);
    }
    if (n > 1) {
      std::swap(swap[0], swap[1]);
    }
    restrict[n - 1] = PartialBijection::undefined;
    return {PartialBijection::from_images(swap), PartialBijection::from_images(cycle),
            PartialBijection::from_images(restrict)};
  }

  // Number of x with t x t = t and x t x = x is one for every t, and the
  // idempotents commute.
  inline bool inverse_axioms_hold(InvSemigroup const& S) {
    for (Index t = 0; t < S.size(); ++t) {
      std::size_t count = 0;
      for (Index x = 0; x < S.size(); ++x) {
        if (S.product(S.product(t, x), t) == t && S.product(S.product(x, t), x) == x) {
          ++count;
          if (S.star(t) != x) {
            return false;
          }
        }
      }
      if (count != 1) {
        return false;
      }
    }
    auto E = S.idempotents();
    for (auto e : E) {
      for (auto f : E) {
        if (S.product(e, f) != S.product(f, e)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace oracles

#endif  // CROSSED_TESTS_ORACLES_HPP_
