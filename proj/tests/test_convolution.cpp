#include <doctest.h>

#include <cmath>
#include <bit>
#include <limits>
#include <numbers>
#include <random>

#include "crossed/simplex.hpp"
#include "fixtures.hpp"

using namespace crossed;
using fixtures::delta;
using fixtures::element;

namespace {

  using Pt = PartialBijection::point_type;

  // Oracle for induced actions, pointwise on X:
  // (f * g)(st)(x) += f(s)(x) g(t)(theta_{s*}(x)) for x in im theta_s with
  // theta_{s*}(x) in im theta_t.
  std::vector<Vector> oracle_convolve(fixtures::Fixture const& F,
                                      Ell1Element const&       f,
                                      Ell1Element const&       g) {
    auto const&         S = F.action->semigroup();
    std::size_t         n = F.theta.carrier;
    std::vector<Vector> out(S.size(), Vector::Zero(static_cast<Eigen::Index>(n)));
    for (Index s = 0; s < S.size(); ++s) {
      auto const& ts_star = F.theta.theta[S.star(s)];
      for (Index t = 0; t < S.size(); ++t) {
        auto const& th_t = F.theta.theta[t];
        for (std::size_t x = 0; x < n; ++x) {
          auto px = static_cast<Pt>(x);
          if (!ts_star.defined_at(px)) {
            continue;
          }
          Pt y = ts_star[px];
          if (!inverse(th_t).defined_at(y)) {
            continue;
          }
          out[S.product(s, t)](static_cast<Eigen::Index>(x))
              += f[s](static_cast<Eigen::Index>(x)) * g[t](static_cast<Eigen::Index>(y));
        }
      }
    }
    return out;
  }

  // f*(t)(x) = conj(f(t*)(theta_{t*}(x))) for x in im theta_t.
  std::vector<Vector> oracle_star(fixtures::Fixture const& F, Ell1Element const& f) {
    auto const&         S = F.action->semigroup();
    std::size_t         n = F.theta.carrier;
    std::vector<Vector> out(S.size(), Vector::Zero(static_cast<Eigen::Index>(n)));
    for (Index t = 0; t < S.size(); ++t) {
      auto const& back = F.theta.theta[S.star(t)];
      for (std::size_t x = 0; x < n; ++x) {
        auto px = static_cast<Pt>(x);
        if (back.defined_at(px)) {
          out[t](static_cast<Eigen::Index>(x))
              = std::conj(f[S.star(t)](static_cast<Eigen::Index>(back[px])));
        }
      }
    }
    return out;
  }

  double diff(Ell1Element const& f, std::vector<Vector> const& g) {
    double d = 0.0;
    for (std::size_t t = 0; t < g.size(); ++t) {
      d = std::max(d, fixtures::max_abs(f[t] - g[t]));
    }
    return d;
  }

}  // namespace

TEST_CASE("FLIP convolution examples") {
  auto F = fixtures::flip();
  auto A = F.action;
  Index t = element(*A, "t"), ts = element(*A, "t*");
  auto a  = Ell1Element::monomial(A, t, delta(2, 2));
  auto b  = Ell1Element::monomial(A, ts, delta(2, 1));
  auto ab = convolve(a, b);
  CHECK(ab.support() == std::vector<Index>{element(*A, "t.t*")});
  CHECK(ab[element(*A, "t.t*")].isApprox(delta(2, 2)));
  auto ba = convolve(b, a);
  CHECK(ba[element(*A, "t*.t")].isApprox(delta(2, 1)));
  CHECK(convolve(a, a).is_zero());
  CHECK(involution(a).distance(b) < 1e-12);
  CHECK(ell1_norm(a + 3.0 * b) == doctest::Approx(4.0));

  CHECK_THROWS_AS(Ell1Element::monomial(A, t, delta(2, 1)), Error);
  auto other = fixtures::flip();
  CHECK_THROWS_AS(convolve(a, Ell1Element::monomial(other.action, t, delta(2, 2))), Error);
}

TEST_CASE("convolution and involution agree with the pointwise oracle") {
  std::mt19937_64 rng(21);
  for (auto const& F : fixtures::all()) {
    for (int k = 0; k < 100; ++k) {
      auto f = fixtures::random_element(F.action, rng);
      auto g = fixtures::random_element(F.action, rng);
      CHECK(diff(convolve(f, g), oracle_convolve(F, f, g)) < 1e-12);
      CHECK(diff(involution(f), oracle_star(F, f)) < 1e-12);
    }
  }
}

TEST_CASE("Banach star-algebra laws on random elements") {
  std::mt19937_64 rng(22);
  for (auto const& F : fixtures::all()) {
    Ell1Space space(F.action);
    for (int k = 0; k < 100; ++k) {
      auto f = fixtures::random_element(F.action, rng);
      auto g = fixtures::random_element(F.action, rng);
      auto h = fixtures::random_element(F.action, rng);
      CHECK(convolve(convolve(f, g), h).distance(convolve(f, convolve(g, h))) < 1e-10);
      CHECK(ell1_norm(convolve(f, g)) <= ell1_norm(f) * ell1_norm(g) * (1 + 1e-12));
      CHECK(involution(involution(f)).distance(f) < 1e-12);
      CHECK(involution(convolve(f, g)).distance(convolve(involution(g), involution(f))) < 1e-10);
      CHECK(ell1_norm(involution(f)) == doctest::Approx(ell1_norm(f)));
      Vector x = space.coordinates(f), y = space.coordinates(g);
      CHECK((space.multiply(x, y) - space.coordinates(convolve(f, g))).norm() < 1e-10);
      CHECK(space.element(x).distance(f) < 1e-12);
    }
  }
}

TEST_CASE("coordinates and labels") {
  auto      F = fixtures::flip();
  Ell1Space space(F.action);
  CHECK(space.dim() == 4);
  CHECK(space.coordinate_label(0) == "2@t");
  CHECK(space.coordinate_label(1) == "1@t*");
  for (std::size_t k = 0; k < space.dim(); ++k) {
    Vector e = Vector::Zero(static_cast<Eigen::Index>(space.dim()));
    e(static_cast<Eigen::Index>(k)) = 1.0;
    CHECK((space.coordinates(space.monomial(k)) - e).norm() < 1e-12);
  }
}

TEST_CASE("null ideal dimensions") {
  std::vector<std::pair<std::size_t, std::size_t>> expected = {{4, 0}, {3, 1}, {8, 4}, {4, 0}};
  auto                                             all      = fixtures::all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    Ell1Space space(all[i].action);
    NullIdeal N = null_ideal(space);
    CHECK_MESSAGE(space.dim() == expected[i].first, all[i].name);
    CHECK_MESSAGE(N.dim() == expected[i].second, all[i].name);
    CHECK(is_two_sided_ideal(space, N.basis));
    CHECK(span_contains(N.basis, N.generators));
    CHECK(span_contains(N.basis, N.products_basis));
    auto Q = quotient_algebra(space, N.basis);
    CHECK(Q.dim == space.dim() - N.dim());
  }
}

TEST_CASE("SEMI null ideal is spanned by delta_1 delta_e - delta_1 delta_1") {
  auto      F = fixtures::semi();
  Ell1Space space(F.action);
  NullIdeal N = null_ideal(space);
  Ell1Element n(F.action);
  n.set(element(*F.action, "e"), delta(2, 1));
  n.set(element(*F.action, "1"), -delta(2, 1));
  REQUIRE(N.dim() == 1);
  CHECK(in_span(N.basis, space.coordinates(n)));
}

TEST_CASE("null ideal absorbs convolution") {
  std::mt19937_64 rng(23);
  for (auto const& F : fixtures::all()) {
    Ell1Space space(F.action);
    NullIdeal N = null_ideal(space);
    for (Eigen::Index c = 0; c < N.basis.cols(); ++c) {
      Ell1Element n = space.element(N.basis.col(c));
      for (int k = 0; k < 20; ++k) {
        auto f = fixtures::random_element(F.action, rng);
        CHECK(in_span(N.basis, space.coordinates(convolve(f, n))));
        CHECK(in_span(N.basis, space.coordinates(convolve(n, f))));
      }
    }
  }
}

TEST_CASE("a non-ideal is rejected by the quotient") {
  auto      F = fixtures::flip();
  Ell1Space space(F.action);
  Matrix    N = space.coordinates(space.monomial(0));
  CHECK_FALSE(is_two_sided_ideal(space, N));
  CHECK_THROWS_AS(quotient_algebra(space, N), Error);
}

TEST_CASE("quotient algebra multiplication matches the projection") {
  std::mt19937_64 rng(24);
  for (auto const& F : fixtures::all()) {
    Ell1Space space(F.action);
    NullIdeal N = null_ideal(space);
    auto      Q = quotient_algebra(space, N.basis);
    for (int k = 0; k < 30; ++k) {
      Vector x = space.coordinates(fixtures::random_element(F.action, rng));
      Vector y = space.coordinates(fixtures::random_element(F.action, rng));
      Vector lhs = Q.multiply(Q.projection * x, Q.projection * y);
      Vector rhs = Q.projection * space.multiply(x, y);
      CHECK((lhs - rhs).norm() < 1e-9);
    }
    for (Eigen::Index c = 0; c < N.basis.cols(); ++c) {
      CHECK((Q.projection * N.basis.col(c)).norm() < 1e-9);
    }
  }
}

TEST_CASE("quotient norm on SEMI matches the closed form") {
  // f = (x delta_1 + y delta_2) delta_e + z delta_1 delta_1 has
  // ||f + N|| = max(|x + z|, |y|).
  auto            F = fixtures::semi();
  Ell1Space       space(F.action);
  NullIdeal       N  = null_ideal(space);
  Index           e  = element(*F.action, "e"), one = element(*F.action, "1");
  double const    slack = 1.0 / std::cos(std::numbers::pi / kModulusFacets);
  std::mt19937_64 rng(25);
  for (int k = 0; k < 100; ++k) {
    Vector      v = random_vector(rng, 3);
    Ell1Element f(F.action);
    f.set(e, v(0) * delta(2, 1) + v(1) * delta(2, 2));
    f.set(one, v(2) * delta(2, 1));
    double exact = std::max(std::abs(v(0) + v(2)), std::abs(v(1)));
    auto   q     = quotient_ell1_norm(f, space, N.basis);
    CHECK(q.value >= exact - 1e-9);
    CHECK(q.value <= exact * slack + 1e-9);
    CHECK(q.lower_bound <= exact + 1e-9);
    CHECK(q.value == doctest::Approx(ell1_norm(q.representative)));
    CHECK(in_span(N.basis, space.coordinates(q.representative - f)));
  }
  Ell1Element a = Ell1Element::monomial(F.action, one, delta(2, 1));
  CHECK(quotient_ell1_norm(a, space, N.basis).value == doctest::Approx(1.0));
}

TEST_CASE("quotient norm with a trivial null ideal is the ell1 norm") {
  std::mt19937_64 rng(26);
  for (auto const& F : {fixtures::flip(), fixtures::z2()}) {
    Ell1Space space(F.action);
    NullIdeal N = null_ideal(space);
    REQUIRE(N.dim() == 0);
    for (int k = 0; k < 20; ++k) {
      auto f = fixtures::random_element(F.action, rng);
      CHECK(quotient_ell1_norm(f, space, N.basis).value == doctest::Approx(ell1_norm(f)));
    }
  }
}

TEST_CASE("quotient norm on SIM2 is a seminorm bounded by the ell1 norm") {
  auto            F = fixtures::sim2();
  Ell1Space       space(F.action);
  NullIdeal       N     = null_ideal(space);
  double const    slack = 1.0 / std::cos(std::numbers::pi / kModulusFacets);
  std::mt19937_64 rng(27);
  for (int k = 0; k < 20; ++k) {
    auto f = fixtures::random_element(F.action, rng);
    auto q = quotient_ell1_norm(f, space, N.basis);
    CHECK(q.value <= ell1_norm(f) + 1e-9);
    CHECK(q.lower_bound <= q.value + 1e-9);
    CHECK(q.value <= q.lower_bound * slack + 1e-9);
    Ell1Element shifted = f + space.element(N.basis * random_vector(rng, N.basis.cols()));
    auto        q2      = quotient_ell1_norm(shifted, space, N.basis);
    CHECK(q2.value <= q.lower_bound * slack + 1e-9);
    CHECK(q.value <= q2.lower_bound * slack + 1e-9);
  }
}

TEST_CASE("simplex agrees with vertex enumeration") {
  // Oracle: every vertex of {A x <= b, x >= 0} in two or three variables,
  // found by solving each square subsystem of active constraints.
  std::mt19937_64                        rng(28);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    int const   n = 2 + trial % 2, m = 3 + trial % 4;
    lp::Problem p;
    p.c = Eigen::VectorXd::NullaryExpr(n, [&] { return U(rng); });
    p.A = Eigen::MatrixXd::NullaryExpr(m, n, [&] { return U(rng); });
    p.b = Eigen::VectorXd::NullaryExpr(m, [&] { return U(rng) + 0.3; });
    // box keeps the problem bounded
    p.A.conservativeResize(m + n, n);
    p.b.conservativeResize(m + n);
    p.A.bottomRows(n) = Eigen::MatrixXd::Identity(n, n);
    p.b.tail(n).setConstant(5.0);

    Eigen::MatrixXd G(m + 2 * n, n);
    Eigen::VectorXd h(m + 2 * n);
    G << p.A, -Eigen::MatrixXd::Identity(n, n);
    h << p.b, Eigen::VectorXd::Zero(n);
    double best = std::numeric_limits<double>::infinity();
    int    rows = static_cast<int>(G.rows());
    for (unsigned mask = 0; mask < (1u << rows); ++mask) {
      if (std::popcount(mask) != n) {
        continue;
      }
      Eigen::MatrixXd M(n, n);
      Eigen::VectorXd r(n);
      for (int i = 0, k = 0; i < rows; ++i) {
        if (mask >> i & 1) {
          M.row(k) = G.row(i);
          r(k++)   = h(i);
        }
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
      if (lu.rank() < n) {
        continue;
      }
      Eigen::VectorXd x = lu.solve(r);
      if (((G * x - h).array() <= 1e-9).all()) {
        best = std::min(best, p.c.dot(x));
      }
    }
    auto sol = lp::solve(p);
    if (std::isinf(best)) {
      CHECK(sol.status == lp::Status::infeasible);
    } else {
      REQUIRE(sol.status == lp::Status::optimal);
      CHECK(sol.value == doctest::Approx(best).epsilon(1e-9));
    }
  }
}
