#ifndef CROSSED_CONVOLUTION_HPP_
#define CROSSED_CONVOLUTION_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "crossed/action.hpp"

namespace crossed {

  // A finitely supported section t -> f(t) in I_t, i.e. an element of
  // ell^1(alpha). Values are stored densely over S as vectors of the
  // algebra.
  class Ell1Element {
   public:
    explicit Ell1Element(ActionPtr action);

    // a delta_t. Throws Error(NotInIdeal) unless a lies in I_t.
    static Ell1Element monomial(ActionPtr action, Index t, Vector a, double tol = kDefaultTol);

    Action const& action() const noexcept {
      return *_action;
    }
    ActionPtr const& action_ptr() const noexcept {
      return _action;
    }

    Vector const& operator[](Index t) const {
      return _values[t];
    }
    // Throws Error(NotInIdeal).
    void set(Index t, Vector a, double tol = kDefaultTol);
    // Adds a to f(t) without a membership check.
    void accumulate(Index t, Vector const& a);

    std::vector<Index> support(double tol = 0.0) const;
    bool               is_zero(double tol = 0.0) const;

    Ell1Element& operator+=(Ell1Element const& g);
    Ell1Element& operator-=(Ell1Element const& g);
    Ell1Element& operator*=(Scalar c);

    friend Ell1Element operator+(Ell1Element f, Ell1Element const& g) {
      return f += g;
    }
    friend Ell1Element operator-(Ell1Element f, Ell1Element const& g) {
      return f -= g;
    }
    friend Ell1Element operator*(Scalar c, Ell1Element f) {
      return f *= c;
    }

    // Largest coefficient difference over all t.
    double distance(Ell1Element const& g) const;

   private:
    void require_same_action(Ell1Element const& g) const;

    ActionPtr           _action;
    std::vector<Vector> _values;
  };

  // (f * g)(r) = sum over st = r of alpha_s(alpha_{s*}(f(s)) g(t)). Each
  // summand is checked to lie in I_{st}. Throws Error(ActionMismatch).
  Ell1Element convolve(Ell1Element const& f, Ell1Element const& g, double tol = kDefaultTol);

  // sum over t of ||f(t)||.
  double ell1_norm(Ell1Element const& f);

  // f*(t) = alpha_t(f(t*)^*). Throws Error(NoStarOnAlgebra).
  Ell1Element involution(Ell1Element const& f);

  // Coordinates of ell^1(alpha): the blocks of coefficients of f(t) in the
  // basis of I_t, concatenated in the order of S. The monomials
  // (basis vector of I_t) delta_t are the coordinate vectors.
  class Ell1Space {
   public:
    explicit Ell1Space(ActionPtr action, double tol = kDefaultTol);

    std::size_t dim() const noexcept {
      return _dim;
    }
    Action const& action() const noexcept {
      return *_action;
    }
    ActionPtr const& action_ptr() const noexcept {
      return _action;
    }
    std::size_t offset(Index t) const noexcept {
      return _offsets[t];
    }
    // (t, k): the k-th basis vector of I_t.
    std::pair<Index, std::size_t> monomial_index(std::size_t coord) const {
      return _monomials[coord];
    }
    std::string coordinate_label(std::size_t coord) const;

    Vector      coordinates(Ell1Element const& f) const;
    Ell1Element element(Vector const& coords) const;
    Ell1Element monomial(std::size_t coord) const;

    // Convolution of coordinate vectors via the precomputed structure
    // constants (each entry computed with `convolve`).
    Vector multiply(Vector const& x, Vector const& y) const;
    Vector const& basis_product(std::size_t i, std::size_t j) const {
      return _products[i * _dim + j];
    }

   private:
    ActionPtr                                  _action;
    std::size_t                                _dim = 0;
    std::vector<std::size_t>                   _offsets;
    std::vector<std::pair<Index, std::size_t>> _monomials;
    std::vector<Vector>                        _products;
  };

  struct NullIdeal {
    // Orthonormal basis (columns, ell^1 coordinates) of the ideal generated
    // by the differences a delta_s - a delta_t, s <= t, differences included.
    Matrix basis;
    // Orthonormal basis of clsp{f (a delta_s - a delta_t) g}, products only.
    Matrix products_basis;
    // The differences themselves, one column per (s, t, basis vector of I_s).
    Matrix generators;
    std::size_t saturation_rounds = 0;

    std::size_t dim() const noexcept {
      return static_cast<std::size_t>(basis.cols());
    }
  };

  // Saturates the differences under left and right convolution by all
  // monomials until the dimension stabilises.
  NullIdeal null_ideal(Ell1Space const& space, double tol = kDefaultTol);

  // Whether span(columns of N) is closed under convolution by monomials on
  // both sides.
  bool is_two_sided_ideal(Ell1Space const& space, Matrix const& N, double tol = kDefaultTol);

  struct QuotientAlgebra {
    std::size_t dim = 0;
    // ell^1 coordinates whose monomials form the complement basis, chosen by
    // greedy pivoting in coordinate order.
    std::vector<std::size_t> pivots;
    // dim x D: quotient coordinates of an ell^1 coordinate vector.
    Matrix projection;
    // structure[i * dim + j]: product of quotient basis elements i and j.
    std::vector<Vector> structure;

    Vector multiply(Vector const& x, Vector const& y) const;
  };

  // Throws Error(NotAnIdeal) if N is not a two-sided ideal.
  QuotientAlgebra quotient_algebra(Ell1Space const& space,
                                   Matrix const&    N,
                                   double           tol = kDefaultTol);

  struct QuotientNorm {
    // ||f + n||_1 at the computed minimiser n.
    double value = 0.0;
    // The linear-programming optimum, a lower bound for the infimum.
    double      lower_bound = 0.0;
    Ell1Element representative;
  };

  // Number of facets of the polygon that approximates complex moduli.
  inline constexpr int kModulusFacets = 64;

  // inf over n in span(N) of ||f + n||_1. Complex moduli are replaced by
  // the inscribed 64-gon, so value <= lower_bound / cos(pi / 64) (0.121%
  // relative error). p = 2 matrix blocks are handled by cutting planes from
  // top singular vectors.
  QuotientNorm quotient_ell1_norm(Ell1Element const& f,
                                  Ell1Space const&   space,
                                  Matrix const&      N,
                                  double             tol = kDefaultTol);

}  // namespace crossed

#endif  // CROSSED_CONVOLUTION_HPP_
