#ifndef CROSSED_REPRESENTATION_HPP_
#define CROSSED_REPRESENTATION_HPP_

#include <cstdint>
#include <vector>

#include "crossed/convolution.hpp"

namespace crossed {

  // C^dim with the p-norm.
  struct ReprSpace {
    std::size_t dim = 0;
    PNorm       p   = PNorm::two;
  };

  // A pair (pi, v): pi is given by its values on the algebra basis, v by one
  // matrix per semigroup element. The constructor only checks shapes.
  class CovariantRep {
   public:
    CovariantRep(ActionPtr action, ReprSpace space, std::vector<Matrix> pi, std::vector<Matrix> v);

    Action const& action() const noexcept {
      return *_action;
    }
    ActionPtr const& action_ptr() const noexcept {
      return _action;
    }
    ReprSpace const& space() const noexcept {
      return _space;
    }
    std::vector<Matrix> const& pi_basis() const noexcept {
      return _pi;
    }
    std::vector<Matrix> const& v() const noexcept {
      return _v;
    }
    Matrix const& v(Index t) const {
      return _v[t];
    }
    Matrix pi(Vector const& a) const;
    double norm(Matrix const& m) const {
      return operator_norm(m, _space.p);
    }

   private:
    ActionPtr           _action;
    ReprSpace           _space;
    std::vector<Matrix> _pi;
    std::vector<Matrix> _v;
  };

  // pi multiplicative on basis pairs, pi contractive, every ||v_t|| <= 1.
  // Contractivity is exact over the 2^|X| real sign patterns of a function
  // algebra with |X| <= 16, otherwise sampled on 2000 unit vectors of A with
  // random complex phases; the note says which.
  Report rep_invariants(CovariantRep const& r, double tol = kDefaultTol, std::uint64_t seed = 0);

  // Invariants, semigroup homomorphism, SCR1 on ideal bases, SCR2 as
  // range(v_t) = span pi(I_t)E, and v_t v_{t*} v_t = v_t.
  Report check_spatial(CovariantRep const& r, double tol = kDefaultTol, std::uint64_t seed = 0);

  // Invariants, CR1-CR3 on ideal bases, v_t pi(a) v_{t*} = pi(alpha_t(a)),
  // v_e pi(a) = pi(a) (a in I_e) and pi(a) v_{t*} v_t = pi(a) (a in I_{t*}).
  // Non-degeneracy is recorded as a note.
  Report check_algebraic(CovariantRep const& r, double tol = kDefaultTol, std::uint64_t seed = 0);

  // span pi(A)E = E.
  bool is_nondegenerate(CovariantRep const& r, double tol = kDefaultTol);

  // v_t -> pi(1_t) v_t. Throws the first failing code of check_algebraic,
  // and Error(NormalizationViolation) if a consequence listed in
  // `normalization_check` fails.
  CovariantRep normalize(CovariantRep const& r, double tol = kDefaultTol);

  // Consequences relating r and its normalization n.
  Report normalization_check(CovariantRep const& r, CovariantRep const& n, double tol = kDefaultTol);

  // Whether normalize(r) has the same v (both one-sided forms).
  bool is_normalized(CovariantRep const& r, double tol = kDefaultTol);

  // pi x v (f) = sum_t pi(f(t)) v_t.
  Matrix integrate(CovariantRep const& r, Ell1Element const& f);

  // Columns: vec(pi x v (monomial_i)) for the coordinates of `space`.
  Matrix integration_matrix(CovariantRep const& r, Ell1Space const& space);

  // Multiplicativity and ||pi x v (f)|| <= ||f||_1 on `samples` random
  // pairs, and pi x v (n) = 0 for every column n of `null_basis`.
  Report integration_check(CovariantRep const& r,
                           Ell1Space const&    space,
                           Matrix const&       null_basis,
                           std::size_t         samples = 500,
                           double              tol     = kDefaultTol,
                           std::uint64_t       seed    = 0);

  // A_s A_t in A_st and s <= t implies A_s in A_t, with A_t = pi(I_t) v_t.
  Report grading_check(CovariantRep const& r, double tol = kDefaultTol);

  // The multiplication representation on functions X -> C with the p-norm:
  // pi(a) = diag(a), (v_t xi)(x) = xi(theta_{t*}(x)) on the image of
  // theta_t, 0 elsewhere. `action` must be induced from `theta`. Asserts
  // check_spatial.
  CovariantRep regular_rep(ActionPtr action, PartialSetAction const& theta, PNorm p = PNorm::two);

  // max over the family of ||pi x v (f)||. Throws Error(EmptyFamily).
  double seminorm_family(Ell1Element const& f, std::vector<CovariantRep> const& family);

  struct SeminormKernel {
    Matrix basis;
    bool   is_ideal      = false;
    bool   contains_null = false;

    std::size_t dim() const noexcept {
      return static_cast<std::size_t>(basis.cols());
    }
  };

  // Intersection of the kernels of the integration maps, in ell^1
  // coordinates. Members must pass check_algebraic and be non-degenerate.
  // Throws Error(EmptyFamily), the first failing code, or
  // Error(DegenerateRepresentation); Error(InternalError) if the kernel is
  // not an ideal containing `null_basis`.
  SeminormKernel seminorm_kernel(std::vector<CovariantRep> const& family,
                                 Ell1Space const&                 space,
                                 Matrix const&                    null_basis,
                                 double                           tol = kDefaultTol);

  // p = 2 and a star on A: (pi(a)v_t)^H = pi(alpha_{t*}(a^*)) v_{t*} on
  // ideal bases, A_t^H = A_{t*}, and pi x v (f^*) = (pi x v (f))^H on
  // `samples` random elements.
  Report adjoint_check(CovariantRep const& r,
                       std::size_t         samples = 100,
                       double              tol     = kDefaultTol,
                       std::uint64_t       seed    = 0);

  // For S a group: the convolution agrees with
  // (a * b)(g) = sum_h a(h) alpha_h(b(h^-1 g)) on all basis pairs, and if r
  // is given, non-degenerate and normalized, every v_g is invertible with
  // ||v_g||, ||v_g^-1|| <= 1. Throws Error(NotAGroup).
  Report group_case_check(Ell1Space const&    space,
                          CovariantRep const* r   = nullptr,
                          double              tol = kDefaultTol);

}  // namespace crossed

#endif  // CROSSED_REPRESENTATION_HPP_
