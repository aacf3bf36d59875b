#ifndef CROSSED_TESTS_FIXTURES_HPP_
#define CROSSED_TESTS_FIXTURES_HPP_

#include <random>
#include <string>
#include <vector>

#include "crossed/representation.hpp"

namespace fixtures {

  using namespace crossed;

  // Partial bijection on {1..n} from 1-based pairs.
  inline PartialBijection pb(std::size_t n, std::vector<std::pair<int, int>> pairs) {
    std::vector<std::pair<PartialBijection::point_type, PartialBijection::point_type>> g;
    for (auto [x, y] : pairs) {
      g.emplace_back(x - 1, y - 1);
    }
    return PartialBijection(n, g);
  }

  struct Fixture {
    std::string      name;
    PartialSetAction theta;
    ActionPtr        action;
  };

  inline Fixture induced(std::string                          name,
                         std::size_t                          n,
                         std::vector<PartialBijection> const& gens,
                         std::vector<std::string> const&      gen_names) {
    auto S = std::make_shared<InvSemigroup const>(generate_semigroup(gens, gen_names));
    auto theta = PartialSetAction::tautological(S);
    std::vector<std::string> labels;
    for (std::size_t x = 1; x <= n; ++x) {
      labels.push_back(std::to_string(x));
    }
    return {name, theta, induce_from_partial_action(theta, labels)};
  }

  // t: 1 -> 2. Elements t, t*, t.t (zero), t.t* (id on {2}), t*.t (id on {1}).
  inline Fixture flip() {
    return induced("FLIP", 2, {pb(2, {{1, 2}})}, {"t"});
  }

  // e = id_X, "1" = id on {1}.
  inline Fixture semi() {
    return induced("SEMI", 2, {pb(2, {{1, 1}, {2, 2}}), pb(2, {{1, 1}})}, {"e", "1"});
  }

  // Full symmetric inverse monoid on two points.
  inline Fixture sim2() {
    return induced("SIM2", 2, {pb(2, {{1, 2}, {2, 1}}), pb(2, {{1, 1}})}, {"tau", "p"});
  }

  // Z/2 acting on C({1, 2}) by the swap.
  inline Fixture z2() {
    return induced("Z2", 2, {pb(2, {{1, 2}, {2, 1}})}, {"g"});
  }

  inline std::vector<Fixture> all() {
    return {flip(), semi(), sim2(), z2()};
  }

  inline Index element(Action const& alpha, std::string const& name) {
    auto t = alpha.semigroup().find(name);
    if (!t) {
      throw Error(Errc::InternalError, "fixture has no element " + name);
    }
    return *t;
  }

  // delta_x for 1-based x.
  inline Vector delta(std::size_t n, std::size_t x, Scalar c = 1.0) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
    v(static_cast<Eigen::Index>(x - 1)) = c;
    return v;
  }

  inline Ell1Element random_element(ActionPtr const& action, std::mt19937_64& rng) {
    Ell1Element f(action);
    for (Index t = 0; t < action->semigroup().size(); ++t) {
      Matrix const& B = action->ideal(t).basis();
      if (B.cols() > 0) {
        f.accumulate(t, B * random_vector(rng, B.cols()));
      }
    }
    return f;
  }

  inline CovariantRep regular(Fixture const& F, PNorm p = PNorm::two) {
    return regular_rep(F.action, F.theta, p);
  }

  // Oracle for the regular representation: v_t has a 1 at (theta_t(y), y).
  inline std::vector<Matrix> regular_v(Fixture const& F) {
    std::size_t         n = F.theta.carrier;
    std::vector<Matrix> v;
    for (auto const& th : F.theta.theta) {
      Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (std::size_t y = 0; y < n; ++y) {
        auto py = static_cast<PartialBijection::point_type>(y);
        if (th.defined_at(py)) {
          m(th[py], static_cast<Eigen::Index>(y)) = 1.0;
        }
      }
      v.push_back(m);
    }
    return v;
  }

  inline Matrix unit_projection(CovariantRep const& r, Index t) {
    return r.pi(r.action().ideal(t).unit());
  }

  // v_t + (I - P_t) X_t (I - P_{t*}) with P_t = pi(1_t) and ||X_t||_2 <= 1.
  // Keeps CR1-CR3 and contractivity of a normalized p = 2 representation.
  inline CovariantRep perturb(CovariantRep const& r, std::mt19937_64& rng) {
    auto const&         S = r.action().semigroup();
    auto const          n = static_cast<Eigen::Index>(r.space().dim);
    Matrix const        I = Matrix::Identity(n, n);
    std::vector<Matrix> v;
    for (Index t = 0; t < S.size(); ++t) {
      Matrix X = random_matrix(rng, n, n);
      X /= operator_norm(X, PNorm::two);
      v.push_back(r.v(t) + (I - unit_projection(r, t)) * X * (I - unit_projection(r, S.star(t))));
    }
    return CovariantRep(r.action_ptr(), r.space(), r.pi_basis(), std::move(v));
  }

  inline CovariantRep with_v(CovariantRep const& r, Index t, Matrix m) {
    std::vector<Matrix> v = r.v();
    v[t]                  = std::move(m);
    return CovariantRep(r.action_ptr(), r.space(), r.pi_basis(), std::move(v));
  }

  inline double max_abs(Matrix const& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  }

}  // namespace fixtures

#endif  // CROSSED_TESTS_FIXTURES_HPP_
