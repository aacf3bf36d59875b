#include "crossed/normed_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace crossed {

  ////////////////////////////////////////////////////////////////////////
  // FinAlgebra
  ////////////////////////////////////////////////////////////////////////

  FinAlgebra FinAlgebra::functions(std::vector<std::string> point_labels) {
    FinAlgebra A;
    for (std::size_t x = 0; x < point_labels.size(); ++x) {
      A._blocks.push_back(Block{1, PNorm::inf, true, x});
    }
    A._labels = std::move(point_labels);
    A.init();
    return A;
  }

  FinAlgebra FinAlgebra::functions(std::size_t points) {
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < points; ++x) {
      labels.push_back(std::to_string(x + 1));
    }
    return functions(std::move(labels));
  }

  FinAlgebra FinAlgebra::matrices(std::vector<std::size_t> const& sizes, PNorm p) {
    FinAlgebra  A;
    std::size_t offset = 0;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
      if (sizes[b] == 0) {
        throw Error(Errc::DimensionMismatch, "matrix block of size 0");
      }
      A._blocks.push_back(Block{sizes[b], p, false, offset});
      for (std::size_t i = 0; i < sizes[b]; ++i) {
        for (std::size_t j = 0; j < sizes[b]; ++j) {
          A._labels.push_back("M" + std::to_string(b) + ".E"
                              + std::to_string(i + 1) + "_"
                              + std::to_string(j + 1));
        }
      }
      offset += sizes[b] * sizes[b];
    }
    A.init();
    return A;
  }

  FinAlgebra FinAlgebra::direct_sum(std::span<FinAlgebra const> summands) {
    FinAlgebra  A;
    std::size_t offset = 0;
    for (std::size_t k = 0; k < summands.size(); ++k) {
      for (auto blk : summands[k]._blocks) {
        blk.offset = offset;
        offset += blk.dim();
        A._blocks.push_back(blk);
      }
      for (auto const& l : summands[k]._labels) {
        A._labels.push_back("S" + std::to_string(k) + "." + l);
      }
    }
    A.init();
    return A;
  }

  void FinAlgebra::init() {
    _dim = 0;
    for (auto const& b : _blocks) {
      _dim += b.dim();
    }
    if (_labels.size() != _dim) {
      throw Error(Errc::DimensionMismatch, "one label per basis element required");
    }
    if (std::set<std::string>(_labels.begin(), _labels.end()).size() != _dim) {
      throw Error(Errc::ParseError, "duplicate basis labels");
    }
    _block_of.assign(_dim, 0);
    _products.assign(_dim * _dim, {});
    for (std::size_t b = 0; b < _blocks.size(); ++b) {
      auto const& blk = _blocks[b];
      std::size_t n   = blk.size;
      for (std::size_t k = 0; k < blk.dim(); ++k) {
        _block_of[blk.offset + k] = b;
      }
      // E_ij E_jl = E_il
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t l = 0; l < n; ++l) {
            _products[(blk.offset + i * n + j) * _dim + blk.offset + j * n + l]
                .emplace_back(blk.offset + i * n + l, Scalar(1.0));
          }
        }
      }
    }
  }

  bool FinAlgebra::is_function_algebra() const noexcept {
    return std::all_of(_blocks.begin(), _blocks.end(), [](Block const& b) {
      return b.function_point;
    });
  }

  Vector FinAlgebra::multiply(Vector const& x, Vector const& y) const {
    auto const n = static_cast<Eigen::Index>(_dim);
    if (x.size() != n || y.size() != n) {
      throw Error(Errc::DimensionMismatch,
                  "vectors of length " + std::to_string(x.size()) + " and "
                      + std::to_string(y.size()) + " in an algebra of dimension "
                      + std::to_string(_dim));
    }
    Vector result = Vector::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (x(i) == 0.0) {
        continue;
      }
      for (Eigen::Index j = 0; j < n; ++j) {
        if (y(j) == 0.0) {
          continue;
        }
        for (auto const& [k, c] : _products[i * n + j]) {
          result(k) += c * x(i) * y(j);
        }
      }
    }
    return result;
  }

  double FinAlgebra::norm(Vector const& x) const {
    double result = 0.0;
    for (std::size_t b = 0; b < _blocks.size(); ++b) {
      auto const& blk = _blocks[b];
      double      nb  = blk.size == 1 ? std::abs(x(blk.offset))
                                      : operator_norm(block_matrix(x, b), blk.p);
      result = std::max(result, nb);
    }
    return result;
  }

  bool FinAlgebra::has_star() const noexcept {
    return std::all_of(_blocks.begin(), _blocks.end(), [](Block const& b) {
      return b.size == 1 || b.p == PNorm::two;
    });
  }

  Vector FinAlgebra::star(Vector const& x) const {
    if (!has_star()) {
      throw Error(Errc::NoStarOnAlgebra,
                  "the adjoint is not isometric for p != 2 matrix blocks");
    }
    Vector result(x.size());
    for (auto const& blk : _blocks) {
      std::size_t n = blk.size;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          result(blk.offset + i * n + j) = std::conj(x(blk.offset + j * n + i));
        }
      }
    }
    return result;
  }

  Vector FinAlgebra::basis_vector(std::size_t k) const {
    Vector v = zero();
    v(k)     = 1.0;
    return v;
  }

  Vector FinAlgebra::unit() const {
    std::vector<std::size_t> all(_blocks.size());
    for (std::size_t b = 0; b < all.size(); ++b) {
      all[b] = b;
    }
    return unit_of_blocks(all);
  }

  Vector FinAlgebra::unit_of_blocks(std::span<std::size_t const> blocks) const {
    Vector u = zero();
    for (auto b : blocks) {
      auto const& blk = _blocks.at(b);
      for (std::size_t i = 0; i < blk.size; ++i) {
        u(blk.offset + i * blk.size + i) = 1.0;
      }
    }
    return u;
  }

  Matrix FinAlgebra::span_of_blocks(std::span<std::size_t const> blocks) const {
    std::vector<std::size_t> coords;
    for (auto b : blocks) {
      auto const& blk = _blocks.at(b);
      for (std::size_t k = 0; k < blk.dim(); ++k) {
        coords.push_back(blk.offset + k);
      }
    }
    std::sort(coords.begin(), coords.end());
    Matrix m = Matrix::Zero(_dim, coords.size());
    for (std::size_t c = 0; c < coords.size(); ++c) {
      m(coords[c], c) = 1.0;
    }
    return m;
  }

  Matrix FinAlgebra::block_matrix(Vector const& x, std::size_t b) const {
    auto const& blk = _blocks[b];
    auto const  n   = static_cast<Eigen::Index>(blk.size);
    Matrix      m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        m(i, j) = x(blk.offset + i * n + j);
      }
    }
    return m;
  }

  std::string FinAlgebra::describe() const {
    if (is_function_algebra()) {
      return "C(X), |X| = " + std::to_string(_blocks.size());
    }
    std::string s;
    for (auto const& blk : _blocks) {
      s += (s.empty() ? "" : " + ");
      s += blk.function_point ? std::string("C")
                              : "M" + std::to_string(blk.size) + "[p="
                                    + pnorm_name(blk.p) + "]";
    }
    return s;
  }

  Report validate_algebra(FinAlgebra const& A, double tol, std::uint64_t seed) {
    Report      report;
    std::size_t n = A.dim();

    auto& assoc = report.check("associativity", Errc::NotAssociative);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          Vector lhs = A.multiply(A.multiply(A.basis_vector(i), A.basis_vector(j)),
                                  A.basis_vector(k));
          Vector rhs = A.multiply(A.basis_vector(i),
                                  A.multiply(A.basis_vector(j), A.basis_vector(k)));
          assoc.expect((lhs - rhs).norm() <= tol,
                       A.basis_labels()[i] + "," + A.basis_labels()[j] + ","
                           + A.basis_labels()[k]);
        }
      }
    }

    if (A.has_star()) {
      auto& star = report.check("star laws", Errc::StarLawViolation);
      for (std::size_t i = 0; i < n; ++i) {
        Vector x = A.basis_vector(i);
        star.expect((A.star(A.star(x)) - x).norm() <= tol, A.basis_labels()[i]);
        for (std::size_t j = 0; j < n; ++j) {
          Vector y = A.basis_vector(j);
          star.expect((A.star(A.multiply(x, y)) - A.multiply(A.star(y), A.star(x)))
                              .norm()
                          <= tol,
                      A.basis_labels()[i] + "," + A.basis_labels()[j]);
        }
      }
    }

    std::mt19937_64 rng(seed);
    auto& sub = report.check("submultiplicativity", Errc::NotSubmultiplicative);
    sub.note  = "sampled, 1000 pairs";
    for (int k = 0; k < 1000; ++k) {
      Vector x = random_vector(rng, n);
      Vector y = random_vector(rng, n);
      sub.expect(A.norm(A.multiply(x, y)) <= A.norm(x) * A.norm(y) + tol,
                 format_vector(x) + " * " + format_vector(y));
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideal
  ////////////////////////////////////////////////////////////////////////

  Ideal::Ideal(AlgebraPtr algebra, Matrix basis, Vector unit)
      : _algebra(std::move(algebra)), _basis(std::move(basis)), _unit(std::move(unit)) {
    auto const n = static_cast<Eigen::Index>(_algebra->dim());
    if (_basis.rows() != n || _unit.size() != n) {
      throw Error(Errc::DimensionMismatch, "ideal data does not match the algebra");
    }
    _orth = orthonormal_basis(_basis);
    if (_orth.cols() != _basis.cols()) {
      throw Error(Errc::DimensionMismatch, "ideal basis is linearly dependent");
    }
  }

  Ideal Ideal::from_blocks(AlgebraPtr algebra, std::vector<std::size_t> blocks) {
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    for (auto b : blocks) {
      if (b >= algebra->blocks().size()) {
        throw Error(Errc::DimensionMismatch, "block index out of range");
      }
    }
    Matrix basis = algebra->span_of_blocks(blocks);
    Vector unit  = algebra->unit_of_blocks(blocks);
    return Ideal(std::move(algebra), std::move(basis), std::move(unit));
  }

  Ideal Ideal::zero(AlgebraPtr algebra) {
    return from_blocks(std::move(algebra), {});
  }

  Ideal Ideal::whole(AlgebraPtr algebra) {
    std::vector<std::size_t> all(algebra->blocks().size());
    for (std::size_t b = 0; b < all.size(); ++b) {
      all[b] = b;
    }
    return from_blocks(std::move(algebra), std::move(all));
  }

  namespace {
    std::vector<std::size_t> support_of(FinAlgebra const& A, Matrix const& span, double tol) {
      std::vector<std::size_t> result;
      for (std::size_t b = 0; b < A.blocks().size(); ++b) {
        auto const& blk = A.blocks()[b];
        if (span.cols() > 0
            && span.middleRows(blk.offset, blk.dim()).cwiseAbs().maxCoeff() > tol) {
          result.push_back(b);
        }
      }
      return result;
    }
  }  // namespace

  Ideal Ideal::canonical(AlgebraPtr algebra, Matrix const& span, Vector unit, double tol) {
    auto   support = support_of(*algebra, span, tol);
    Matrix blocks  = algebra->span_of_blocks(support);
    if (same_span(blocks, span, tol)) {
      return Ideal(std::move(algebra), std::move(blocks), std::move(unit));
    }
    return Ideal(std::move(algebra), orthonormal_basis(span, tol), std::move(unit));
  }

  bool Ideal::contains(Vector const& x, double tol) const {
    return in_span(_orth, x, tol);
  }

  bool Ideal::contains(Ideal const& other, double tol) const {
    for (Eigen::Index j = 0; j < other._orth.cols(); ++j) {
      if (!contains(Vector(other._orth.col(j)), tol)) {
        return false;
      }
    }
    return true;
  }

  bool Ideal::same_subspace(Ideal const& other, double tol) const {
    return dim() == other.dim() && contains(other, tol);
  }

  Vector Ideal::coordinates(Vector const& x) const {
    return coordinates_in(_basis, x);
  }

  std::vector<std::size_t> Ideal::block_support(double tol) const {
    return support_of(*_algebra, _orth, tol);
  }

  Report ideal_validate(Ideal const& I, double tol) {
    Report            report;
    FinAlgebra const& A     = I.algebra();
    auto&             ideal = report.check("two-sided ideal", Errc::NotAnIdeal);
    for (Eigen::Index k = 0; k < I.basis().cols(); ++k) {
      Vector x = I.basis().col(k);
      for (std::size_t b = 0; b < A.dim(); ++b) {
        Vector e = A.basis_vector(b);
        std::string w = "basis vector " + format_vector(x) + " with "
                        + A.basis_labels()[b];
        ideal.expect(I.contains(A.multiply(x, e), tol), w + " (right)");
        ideal.expect(I.contains(A.multiply(e, x), tol), w + " (left)");
      }
    }
    auto& unit = report.check("unit", Errc::NoUnit);
    unit.expect(I.contains(I.unit(), tol), "unit " + format_vector(I.unit())
                                               + " outside the ideal");
    for (Eigen::Index k = 0; k < I.basis().cols(); ++k) {
      Vector x = I.basis().col(k);
      unit.expect((A.multiply(I.unit(), x) - x).norm() <= tol
                      && (A.multiply(x, I.unit()) - x).norm() <= tol,
                  format_vector(x));
    }
    return report;
  }

  Ideal intersect(Ideal const& I, Ideal const& J, double tol) {
    FinAlgebra const& A    = I.algebra();
    Matrix            span = span_intersection(I.basis(), J.basis(), tol);
    Vector            unit = A.multiply(I.unit(), J.unit());
    Ideal             K    = Ideal::canonical(I.algebra_ptr(), span, unit, tol);
    if (!K.is_zero() && !K.contains(unit, tol)) {
      throw Error(Errc::IntersectionNotUnital, "u_I u_J lies outside I cap J");
    }
    for (Eigen::Index k = 0; k < K.basis().cols(); ++k) {
      Vector x = K.basis().col(k);
      if ((A.multiply(unit, x) - x).norm() > tol
          || (A.multiply(x, unit) - x).norm() > tol) {
        throw Error(Errc::IntersectionNotUnital,
                    "u_I u_J does not act as a unit on " + format_vector(x));
      }
    }
    if (K.is_zero()) {
      return Ideal::zero(I.algebra_ptr());
    }
    return K;
  }

  ////////////////////////////////////////////////////////////////////////
  // PartialAut
  ////////////////////////////////////////////////////////////////////////

  PartialAut::PartialAut(Ideal source, Ideal target, Matrix images)
      : _source(std::move(source)), _target(std::move(target)), _images(std::move(images)) {
    auto const n = static_cast<Eigen::Index>(_source.algebra().dim());
    if (_source.algebra_ptr() != _target.algebra_ptr()
        && _source.algebra().dim() != _target.algebra().dim()) {
      throw Error(Errc::DimensionMismatch, "source and target in different algebras");
    }
    if (_images.rows() != n || _images.cols() != _source.basis().cols()) {
      throw Error(Errc::DimensionMismatch,
                  "expected one image per source basis vector");
    }
    if (_images.cols() == 0) {
      _matrix = Matrix::Zero(n, n);
    } else {
      Matrix pinv = _source.basis().completeOrthogonalDecomposition().pseudoInverse();
      _matrix     = _images * pinv;
    }
  }

  PartialAut PartialAut::identity(Ideal const& I) {
    return PartialAut(I, I, I.basis());
  }

  namespace {
    // Exact isometry test when both ideals are sums of blocks and the map
    // sends each source block onto a single target block, either by a
    // unimodular scalar (one-point blocks) or by copying coordinates.
    // Returns nullopt when the map does not have that shape.
    std::optional<std::string> exact_isometry_failure(PartialAut const& phi,
                                                      double            tol,
                                                      bool&             certified) {
      FinAlgebra const& A = phi.source().algebra();
      certified           = false;
      auto src_blocks     = phi.source().block_support(tol);
      if (!same_span(A.span_of_blocks(src_blocks), phi.source().basis(), tol)) {
        return std::nullopt;
      }
      std::optional<std::string> failure;
      for (auto b : src_blocks) {
        auto const& blk = A.blocks()[b];
        Matrix      img = phi.matrix().middleCols(blk.offset, blk.dim());
        // Which target blocks does the image touch?
        std::vector<std::size_t> hit;
        for (std::size_t c = 0; c < A.blocks().size(); ++c) {
          auto const& tb = A.blocks()[c];
          if (img.middleRows(tb.offset, tb.dim()).cwiseAbs().maxCoeff() > tol) {
            hit.push_back(c);
          }
        }
        if (blk.size == 1) {
          // One-point blocks of a function algebra: ell-infinity isometries
          // are phased permutations, so anything else is a genuine failure.
          if (hit.size() != 1 || A.blocks()[hit[0]].size != 1) {
            if (A.is_function_algebra()) {
              failure = failure ? failure
                                : A.basis_labels()[blk.offset]
                                      + " is not sent to a multiple of a point mass";
              continue;
            }
            return std::nullopt;
          }
          double modulus = std::abs(img(A.blocks()[hit[0]].offset, 0));
          if (std::abs(modulus - 1.0) > tol) {
            failure = failure ? failure
                              : A.basis_labels()[blk.offset] + " scaled by "
                                    + std::to_string(modulus);
          }
          continue;
        }
        if (hit.size() != 1 || A.blocks()[hit[0]].size != blk.size
            || A.blocks()[hit[0]].p != blk.p) {
          return std::nullopt;
        }
        auto const& tb = A.blocks()[hit[0]];
        if ((img.middleRows(tb.offset, tb.dim())
             - Matrix::Identity(blk.dim(), blk.dim()))
                .cwiseAbs()
                .maxCoeff()
            > tol) {
          return std::nullopt;
        }
      }
      certified = true;
      return failure;
    }
  }  // namespace

  Report paut_validate(PartialAut const& phi, double tol, std::uint64_t seed) {
    Report            report;
    FinAlgebra const& A   = phi.source().algebra();
    Matrix const&     src = phi.source().basis();
    Matrix const&     img = phi.images();

    auto& bij = report.check("bijective", Errc::NotBijective);
    bij.expect(phi.source().dim() == phi.target().dim(), "dimension of source and target differ");
    bij.expect(rank(img, tol) == phi.source().dim(), "map has a kernel");
    bij.expect(span_contains(phi.target().basis(), img, tol), "image leaves the target");

    auto& iso = report.check("isometric", Errc::NotIsometric);
    bool  certified = false;
    auto  failure   = exact_isometry_failure(phi, tol, certified);
    if (certified) {
      iso.note = "exact";
      iso.expect(!failure.has_value(), failure.value_or(""));
    } else {
      iso.note = "sampled, 2000 unit vectors";
      std::mt19937_64 rng(seed);
      for (int k = 0; k < 2000; ++k) {
        Vector x  = src * random_vector(rng, src.cols());
        double nx = A.norm(x);
        if (nx == 0.0) {
          continue;
        }
        x /= nx;
        iso.expect(std::abs(A.norm(phi(x)) - 1.0) <= tol, format_vector(x));
      }
    }

    auto& mult = report.check("multiplicative", Errc::NotMultiplicative);
    for (Eigen::Index i = 0; i < src.cols(); ++i) {
      for (Eigen::Index j = 0; j < src.cols(); ++j) {
        Vector lhs = phi(A.multiply(src.col(i), src.col(j)));
        Vector rhs = A.multiply(img.col(i), img.col(j));
        mult.expect((lhs - rhs).norm() <= tol,
                    format_vector(src.col(i)) + " * " + format_vector(src.col(j)));
      }
    }

    auto& unit = report.check("unit preserved", Errc::NotMultiplicative);
    unit.expect((phi(phi.source().unit()) - phi.target().unit()).norm() <= tol,
                "phi(1_source) = " + format_vector(phi(phi.source().unit())));
    return report;
  }

  PartialAut compose(PartialAut const& phi, PartialAut const& psi, double tol) {
    if (phi.source().algebra_ptr() != psi.source().algebra_ptr()) {
      throw Error(Errc::DimensionMismatch, "partial automorphisms of different algebras");
    }
    AlgebraPtr const& A = phi.source().algebra_ptr();
    Ideal             K = intersect(phi.source(), psi.target(), tol);
    if (K.is_zero()) {
      Ideal z = Ideal::zero(A);
      return PartialAut(z, z, z.basis());
    }
    PartialAut psi_inv = inverse(psi);
    Ideal      domain  = Ideal::canonical(A, psi_inv.matrix() * K.basis(),
                                    psi_inv(K.unit()), tol);
    Ideal      range   = Ideal::canonical(A, phi.matrix() * K.basis(), phi(K.unit()), tol);
    Matrix     images  = phi.matrix() * psi.matrix() * domain.basis();
    return PartialAut(std::move(domain), std::move(range), std::move(images));
  }

  PartialAut inverse(PartialAut const& phi) {
    Ideal const& tgt = phi.target();
    if (tgt.is_zero()) {
      return PartialAut(tgt, phi.source(), Matrix(tgt.algebra().dim(), 0));
    }
    // images of the target basis under phi^{-1}
    Matrix pinv   = phi.images().completeOrthogonalDecomposition().pseudoInverse();
    Matrix images = phi.source().basis() * (pinv * tgt.basis());
    return PartialAut(tgt, phi.source(), images);
  }

  bool same_partial_map(PartialAut const& a, PartialAut const& b, double tol) {
    if (!a.source().same_subspace(b.source(), tol)) {
      return false;
    }
    Matrix const& basis = a.source().orthonormal();
    return basis.cols() == 0
           || ((a.matrix() - b.matrix()) * basis).cwiseAbs().maxCoeff() <= tol;
  }

}  // namespace crossed
