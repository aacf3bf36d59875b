#ifndef CROSSED_LINALG_HPP_
#define CROSSED_LINALG_HPP_

// Dense complex linear algebra helpers shared by every module. Subspaces
// are represented by matrices whose columns span them; the helpers below
// return orthonormal bases so containment tests reduce to projections.

#include <complex>
#include <cstddef>
#include <random>
#include <string>

#include <Eigen/Dense>

namespace crossed {

  using Scalar = std::complex<double>;
  using Vector = Eigen::VectorXcd;
  using Matrix = Eigen::MatrixXcd;

  inline constexpr double kDefaultTol = 1e-9;

  // Which p-norm a block or a representation space carries.
  enum class PNorm { one, two, inf };

  std::string pnorm_name(PNorm p);
  PNorm       pnorm_from_string(std::string const& s);

  double vector_norm(Vector const& x, PNorm p);

  // p = 1: max column sum, p = inf: max row sum, p = 2: largest singular
  // value from the Gram matrix eigenvalues.
  double operator_norm(Matrix const& m, PNorm p);

  // Singular values below tol * max(1, sigma_max) count as zero.
  std::size_t rank(Matrix const& m, double tol = kDefaultTol);

  // Orthonormal basis of the column space.
  Matrix orthonormal_basis(Matrix const& m, double tol = kDefaultTol);

  // Orthonormal basis of {x : m x = 0}.
  Matrix null_space(Matrix const& m, double tol = kDefaultTol);

  // `orth` must have orthonormal columns.
  double distance_to_span(Matrix const& orth, Vector const& x);
  bool   in_span(Matrix const& orth, Vector const& x, double tol = kDefaultTol);

  // col(inner) is contained in col(outer); neither needs to be orthonormal.
  bool span_contains(Matrix const& outer,
                     Matrix const& inner,
                     double        tol = kDefaultTol);
  bool same_span(Matrix const& a, Matrix const& b, double tol = kDefaultTol);

  // Orthonormal basis of col(a) intersected with col(b).
  Matrix span_intersection(Matrix const& a,
                           Matrix const& b,
                           double        tol = kDefaultTol);

  // Least-squares coordinates of x in the columns of `basis`.
  Vector coordinates_in(Matrix const& basis, Vector const& x);

  // Stacks the columns of m into one vector.
  Vector vectorize(Matrix const& m);

  Matrix empty_basis(Eigen::Index rows);

  Vector random_vector(std::mt19937_64& rng, Eigen::Index n);
  Matrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols);

  std::string format_scalar(Scalar z);
  std::string format_vector(Vector const& x);

}  // namespace crossed

#endif  // CROSSED_LINALG_HPP_
