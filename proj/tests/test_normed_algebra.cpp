#include <doctest.h>

#include <bit>
#include <random>

#include "fixtures.hpp"

using namespace crossed;
using fixtures::delta;

namespace {

  AlgebraPtr share(FinAlgebra A) {
    return std::make_shared<FinAlgebra const>(std::move(A));
  }

  Vector mat_vec(std::size_t n, Matrix const& m) {
    Vector v(static_cast<Eigen::Index>(n * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        v(static_cast<Eigen::Index>(i * n + j)) = m(i, j);
      }
    }
    return v;
  }

  // Oracles for the p-norms of a square matrix.
  double oracle_norm(Matrix const& m, PNorm p) {
    double best = 0.0;
    for (Eigen::Index k = 0; k < m.rows(); ++k) {
      double s = 0.0;
      for (Eigen::Index l = 0; l < m.cols(); ++l) {
        s += std::abs(p == PNorm::one ? m(l, k) : m(k, l));
      }
      best = std::max(best, s);
    }
    if (p == PNorm::two) {
      Eigen::JacobiSVD<Matrix> svd(m);
      return svd.singularValues()(0);
    }
    return best;
  }

  bool has_code(Report const& r, Errc c) {
    return r.has(c);
  }

}  // namespace

TEST_CASE("function algebra products and norms") {
  auto A = FinAlgebra::functions(2);
  CHECK(A.multiply(delta(2, 1), delta(2, 2)).isZero());
  Vector x = 2.0 * delta(2, 1) + delta(2, 2);
  CHECK(A.multiply(x, delta(2, 1)).isApprox(2.0 * delta(2, 1)));
  CHECK(A.norm(3.0 * delta(2, 1) - 4.0 * delta(2, 2)) == doctest::Approx(4.0));
  CHECK(A.has_star());
  CHECK(A.is_function_algebra());
  CHECK(A.basis_labels() == std::vector<std::string>{"1", "2"});
  CHECK_THROWS_AS(A.multiply(delta(3, 1), delta(2, 1)), Error);
}

TEST_CASE("matrix blocks") {
  auto   M2 = FinAlgebra::matrices({2}, PNorm::two);
  Matrix e12 = Matrix::Zero(2, 2), e21 = Matrix::Zero(2, 2), e11 = Matrix::Zero(2, 2);
  e12(0, 1) = 1.0;
  e21(1, 0) = 1.0;
  e11(0, 0) = 1.0;
  CHECK(M2.multiply(mat_vec(2, e12), mat_vec(2, e21)).isApprox(mat_vec(2, e11)));
  CHECK(M2.norm(mat_vec(2, e21)) == doctest::Approx(1.0));

  auto   M2one = FinAlgebra::matrices({2}, PNorm::one);
  Matrix col   = Matrix::Zero(2, 2);
  col(0, 0) = col(1, 0) = 1.0;
  CHECK(M2one.norm(mat_vec(2, col)) == doctest::Approx(2.0));
  CHECK_FALSE(M2one.has_star());
  CHECK_THROWS_AS(M2one.star(mat_vec(2, col)), Error);

  std::mt19937_64 rng(3);
  for (PNorm p : {PNorm::one, PNorm::two, PNorm::inf}) {
    auto A = FinAlgebra::matrices({3}, p);
    for (int k = 0; k < 50; ++k) {
      Matrix m = random_matrix(rng, 3, 3);
      CHECK(A.norm(mat_vec(3, m)) == doctest::Approx(oracle_norm(m, p)).epsilon(1e-10));
      // product agrees with matrix multiplication
      Matrix n = random_matrix(rng, 3, 3);
      CHECK((A.multiply(mat_vec(3, m), mat_vec(3, n)) - mat_vec(3, m * n)).norm() < 1e-12);
    }
  }
}

TEST_CASE("algebra validation") {
  std::vector<FinAlgebra> parts = {FinAlgebra::functions(2), FinAlgebra::matrices({2}, PNorm::two)};
  std::vector<FinAlgebra> all   = {FinAlgebra::functions(3), FinAlgebra::matrices({2, 1}, PNorm::one),
                                   FinAlgebra::matrices({2}, PNorm::inf),
                                   FinAlgebra::matrices({2, 2}, PNorm::two),
                                   FinAlgebra::direct_sum(parts)};
  for (auto const& A : all) {
    Report r = validate_algebra(A);
    CHECK_MESSAGE(r.ok(), r.to_string());
  }
  CHECK(all.back().dim() == 6);
  CHECK(all.back().has_star());
  CHECK(all.back().basis_labels().front() == "S0.1");
}

TEST_CASE("ideals") {
  auto A = share(FinAlgebra::functions(2));
  Ideal I(A, delta(2, 1), delta(2, 1));
  CHECK(ideal_validate(I).ok());

  Ideal diag(A, delta(2, 1) + delta(2, 2), delta(2, 1) + delta(2, 2));
  CHECK(has_code(ideal_validate(diag), Errc::NotAnIdeal));

  Ideal no_unit(A, delta(2, 1), Vector::Zero(2));
  CHECK(has_code(ideal_validate(no_unit), Errc::NoUnit));

  auto   M2 = share(FinAlgebra::matrices({2}, PNorm::two));
  Matrix e11 = Matrix::Zero(2, 2);
  e11(0, 0) = 1.0;
  Ideal corner(M2, mat_vec(2, e11), mat_vec(2, e11));
  CHECK(has_code(ideal_validate(corner), Errc::NotAnIdeal));

  CHECK(ideal_validate(Ideal::whole(M2)).ok());
  CHECK(ideal_validate(Ideal::zero(M2)).ok());
}

TEST_CASE("ideals of C(X) are the block spans") {
  auto A = share(FinAlgebra::functions(4));
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::size_t> U;
    for (std::size_t x = 0; x < 4; ++x) {
      if (mask >> x & 1) {
        U.push_back(x);
      }
    }
    Ideal I = Ideal::from_blocks(A, U);
    CHECK(ideal_validate(I).ok());
    CHECK(I.block_support() == U);
    for (unsigned other = 0; other < 16; ++other) {
      std::vector<std::size_t> V;
      for (std::size_t x = 0; x < 4; ++x) {
        if (other >> x & 1) {
          V.push_back(x);
        }
      }
      Ideal J = Ideal::from_blocks(A, V);
      Ideal K = intersect(I, J);
      // I J = I cap J
      Matrix prods(4, I.dim() * J.dim());
      Eigen::Index c = 0;
      for (Eigen::Index i = 0; i < I.basis().cols(); ++i) {
        for (Eigen::Index j = 0; j < J.basis().cols(); ++j) {
          prods.col(c++) = A->multiply(I.basis().col(i), J.basis().col(j));
        }
      }
      CHECK(same_span(prods, K.basis()));
      CHECK(K.dim() == std::popcount(mask & other));
    }
  }
}

TEST_CASE("partial automorphisms") {
  auto  A  = share(FinAlgebra::functions(2));
  Ideal I1 = Ideal::from_blocks(A, {0});
  Ideal I2 = Ideal::from_blocks(A, {1});

  PartialAut alpha(I1, I2, delta(2, 2));
  CHECK(paut_validate(alpha).ok());

  PartialAut doubled(I1, I2, 2.0 * delta(2, 2));
  CHECK(paut_validate(doubled).has(Errc::NotIsometric));

  CHECK(paut_validate(PartialAut::identity(Ideal::whole(A))).ok());

  PartialAut alpha_star = inverse(alpha);
  CHECK(alpha_star(delta(2, 2)).isApprox(delta(2, 1)));

  PartialAut tt = compose(alpha, alpha);
  CHECK(tt.source().is_zero());
  CHECK(tt.target().is_zero());

  PartialAut ttstar = compose(alpha, alpha_star);
  CHECK(same_partial_map(ttstar, PartialAut::identity(I2)));
  CHECK(same_partial_map(compose(alpha, PartialAut::identity(I1)), alpha));
  CHECK_FALSE(same_partial_map(compose(alpha_star, alpha), PartialAut::identity(I2)));
}

TEST_CASE("isometry certification on matrix blocks") {
  auto  A = share(FinAlgebra::matrices({2, 2}, PNorm::two));
  Ideal B0 = Ideal::from_blocks(A, {0});
  Ideal B1 = Ideal::from_blocks(A, {1});

  // copy block 0 to block 1: exact
  Matrix copy = Matrix::Zero(8, 4);
  for (int k = 0; k < 4; ++k) {
    copy(4 + k, k) = 1.0;
  }
  Report r = paut_validate(PartialAut(B0, B1, copy));
  CHECK(r.ok());
  CHECK(r.find("isometric")->note == "exact");

  // conjugation by a unitary inside block 0: sampled
  Matrix u(2, 2);
  u << 0.6, -0.8, 0.8, 0.6;
  Matrix conj = Matrix::Zero(8, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Matrix e = Matrix::Zero(2, 2);
      e(i, j)  = 1.0;
      conj.col(i * 2 + j).head(4) = mat_vec(2, u * e * u.adjoint());
    }
  }
  Report s = paut_validate(PartialAut(B0, B0, conj));
  CHECK_MESSAGE(s.ok(), s.to_string());
  CHECK(s.find("isometric")->note == "sampled, 2000 unit vectors");

  // transpose is isometric and bijective but anti-multiplicative
  Matrix tr = Matrix::Zero(8, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      tr(j * 2 + i, i * 2 + j) = 1.0;
    }
  }
  CHECK(paut_validate(PartialAut(B0, B0, tr)).has(Errc::NotMultiplicative));
}

TEST_CASE("submultiplicativity on random samples") {
  std::mt19937_64 rng(11);
  std::vector<FinAlgebra> all = {FinAlgebra::functions(3), FinAlgebra::matrices({2, 3}, PNorm::one),
                                 FinAlgebra::matrices({3}, PNorm::two),
                                 FinAlgebra::matrices({2, 1}, PNorm::inf)};
  for (auto const& A : all) {
    for (int k = 0; k < 1000; ++k) {
      Vector x = random_vector(rng, static_cast<Eigen::Index>(A.dim()));
      Vector y = random_vector(rng, static_cast<Eigen::Index>(A.dim()));
      CHECK(A.norm(A.multiply(x, y)) <= A.norm(x) * A.norm(y) * (1 + 1e-9));
    }
  }
}
