#include "crossed/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crossed/errors.hpp"

namespace crossed {

  std::string pnorm_name(PNorm p) {
    switch (p) {
      case PNorm::one: return "1";
      case PNorm::two: return "2";
      case PNorm::inf: return "inf";
    }
    return "?";
  }

  PNorm pnorm_from_string(std::string const& s) {
    if (s == "1") {
      return PNorm::one;
    } else if (s == "2") {
      return PNorm::two;
    } else if (s == "inf" || s == "infinity") {
      return PNorm::inf;
    }
    throw Error(Errc::ParseError, "p must be one of 1, 2, inf, got " + s);
  }

  double vector_norm(Vector const& x, PNorm p) {
    switch (p) {
      case PNorm::one: return x.cwiseAbs().sum();
      case PNorm::two: return x.norm();
      case PNorm::inf: return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
    }
    return 0.0;
  }

  double operator_norm(Matrix const& m, PNorm p) {
    if (m.size() == 0) {
      return 0.0;
    }
    switch (p) {
      case PNorm::one: return m.cwiseAbs().colwise().sum().maxCoeff();
      case PNorm::inf: return m.cwiseAbs().rowwise().sum().maxCoeff();
      case PNorm::two: {
        Matrix gram = m.cols() <= m.rows() ? Matrix(m.adjoint() * m)
                                           : Matrix(m * m.adjoint());
        Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
        double top = es.eigenvalues().maxCoeff();
        return std::sqrt(std::max(top, 0.0));
      }
    }
    return 0.0;
  }

  namespace {
    double rank_threshold(Eigen::VectorXd const& sv, double tol) {
      double top = sv.size() == 0 ? 0.0 : sv.maxCoeff();
      return tol * std::max(1.0, top);
    }
  }  // namespace

  std::size_t rank(Matrix const& m, double tol) {
    if (m.size() == 0) {
      return 0;
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    auto const&              sv  = svd.singularValues();
    double const             thr = rank_threshold(sv, tol);
    return static_cast<std::size_t>((sv.array() > thr).count());
  }

  Matrix orthonormal_basis(Matrix const& m, double tol) {
    if (m.size() == 0) {
      return empty_basis(m.rows());
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
    auto const&              sv  = svd.singularValues();
    double const             thr = rank_threshold(sv, tol);
    Eigen::Index             r   = (sv.array() > thr).count();
    return svd.matrixU().leftCols(r);
  }

  Matrix null_space(Matrix const& m, double tol) {
    Eigen::Index const n = m.cols();
    if (m.rows() == 0) {
      return Matrix::Identity(n, n);
    }
    if (n == 0) {
      return Matrix(0, 0);
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    auto const&              sv  = svd.singularValues();
    double const             thr = rank_threshold(sv, tol);
    Eigen::Index             r   = (sv.array() > thr).count();
    return svd.matrixV().rightCols(n - r);
  }

  double distance_to_span(Matrix const& orth, Vector const& x) {
    if (orth.cols() == 0) {
      return x.norm();
    }
    return (x - orth * (orth.adjoint() * x)).norm();
  }

  bool in_span(Matrix const& orth, Vector const& x, double tol) {
    return distance_to_span(orth, x) <= tol * std::max(1.0, x.norm());
  }

  bool span_contains(Matrix const& outer, Matrix const& inner, double tol) {
    Matrix q = orthonormal_basis(outer, tol);
    for (Eigen::Index j = 0; j < inner.cols(); ++j) {
      if (!in_span(q, inner.col(j), tol)) {
        return false;
      }
    }
    return true;
  }

  bool same_span(Matrix const& a, Matrix const& b, double tol) {
    return span_contains(a, b, tol) && span_contains(b, a, tol);
  }

  Matrix span_intersection(Matrix const& a, Matrix const& b, double tol) {
    Matrix qa = orthonormal_basis(a, tol);
    Matrix qb = orthonormal_basis(b, tol);
    if (qa.cols() == 0 || qb.cols() == 0) {
      return empty_basis(a.rows());
    }
    Matrix stacked(qa.rows(), qa.cols() + qb.cols());
    stacked << qa, -qb;
    Matrix ns = null_space(stacked, tol);
    if (ns.cols() == 0) {
      return empty_basis(a.rows());
    }
    return orthonormal_basis(qa * ns.topRows(qa.cols()), tol);
  }

  Vector coordinates_in(Matrix const& basis, Vector const& x) {
    if (basis.cols() == 0) {
      return Vector(0);
    }
    return basis.completeOrthogonalDecomposition().solve(x);
  }

  Vector vectorize(Matrix const& m) {
    return m.reshaped();
  }

  Matrix empty_basis(Eigen::Index rows) {
    return Matrix(rows, 0);
  }

  Vector random_vector(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> g;
    Vector                           v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      v(i) = Scalar(g(rng), g(rng));
    }
    return v;
  }

  Matrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> g;
    Matrix                           m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
      for (Eigen::Index i = 0; i < rows; ++i) {
        m(i, j) = Scalar(g(rng), g(rng));
      }
    }
    return m;
  }

  std::string format_scalar(Scalar z) {
    std::ostringstream os;
    os.precision(12);
    double re = std::abs(z.real()) < 1e-15 ? 0.0 : z.real();
    double im = std::abs(z.imag()) < 1e-15 ? 0.0 : z.imag();
    if (im == 0.0) {
      os << re;
    } else if (re == 0.0) {
      os << im << "i";
    } else {
      os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
    }
    return os.str();
  }

  std::string format_vector(Vector const& x) {
    std::string s = "[";
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      s += (i ? ", " : "") + format_scalar(x(i));
    }
    return s + "]";
  }

}  // namespace crossed
