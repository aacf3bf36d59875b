#ifndef CROSSED_ACTION_HPP_
#define CROSSED_ACTION_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "crossed/errors.hpp"
#include "crossed/inverse_semigroup.hpp"
#include "crossed/normed_algebra.hpp"

namespace crossed {

  using SemigroupPtr = std::shared_ptr<InvSemigroup const>;

  // An inverse semigroup action by partial automorphisms: alpha_t maps
  // I_{t*} onto I_t. Construction only checks shapes; validate_action checks
  // the axioms.
  class Action {
   public:
    Action(SemigroupPtr semigroup, AlgebraPtr algebra, std::vector<PartialAut> maps);

    InvSemigroup const& semigroup() const noexcept {
      return *_semigroup;
    }
    SemigroupPtr const& semigroup_ptr() const noexcept {
      return _semigroup;
    }
    FinAlgebra const& algebra() const noexcept {
      return *_algebra;
    }
    AlgebraPtr const& algebra_ptr() const noexcept {
      return _algebra;
    }
    PartialAut const& alpha(Index t) const {
      return _maps[t];
    }
    // I_t, the range of alpha_t.
    Ideal const& ideal(Index t) const {
      return _maps[t].target();
    }
    Vector const& unit(Index t) const {
      return _maps[t].target().unit();
    }
    std::vector<PartialAut> const& maps() const noexcept {
      return _maps;
    }

   private:
    SemigroupPtr            _semigroup;
    AlgebraPtr              _algebra;
    std::vector<PartialAut> _maps;
  };

  using ActionPtr = std::shared_ptr<Action const>;

  // Checks, in order: every I_t is a unital ideal and every alpha_t a valid
  // partial automorphism with source I_{t*}; idempotent ideals span A; the
  // zero (if any) carries {0}; alpha_s o alpha_t = alpha_{st} as partial
  // maps for all |S|^2 pairs.
  Report validate_action(Action const& alpha,
                         double        tol  = kDefaultTol,
                         std::uint64_t seed = 0);

  // The consequences of the homomorphism property, checked exhaustively:
  // alpha_s(I_{s*} cap I_t) = I_{st}, I_t = I_{tt*}, alpha_e = id on I_e,
  // alpha_{t*} = alpha_t^{-1}, and s <= t implies I_s inside I_t.
  Report derived_identities_check(Action const& alpha, double tol = kDefaultTol);

  // theta_s o theta_t = theta_{st} on the carrier {0, ..., carrier - 1}.
  struct PartialSetAction {
    SemigroupPtr                  semigroup;
    std::size_t                   carrier = 0;
    std::vector<PartialBijection> theta;

    // The tautological action of a semigroup generated by partial bijections.
    static PartialSetAction tautological(SemigroupPtr S);

    Report validate() const;
  };

  // A = C(X), I_t = span{delta_x : x in im theta_t}, alpha_t(a) = a o theta_{t*},
  // i.e. alpha_t(delta_x) = delta_{theta_t(x)}. Point labels default to
  // "1", "2", ...
  ActionPtr induce_from_partial_action(PartialSetAction const&  theta,
                                       std::vector<std::string> point_labels = {});

}  // namespace crossed

#endif  // CROSSED_ACTION_HPP_
