#ifndef CROSSED_NORMED_ALGEBRA_HPP_
#define CROSSED_NORMED_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crossed/errors.hpp"
#include "crossed/linalg.hpp"

namespace crossed {

  // One direct summand: either a single point of a function algebra C(X)
  // or a full matrix block M_n carrying the p-operator norm.
  struct Block {
    std::size_t size;
    PNorm       p;
    bool        function_point;
    std::size_t offset;

    std::size_t dim() const noexcept {
      return size * size;
    }
  };

  // A finite-dimensional complex algebra given as a direct sum of blocks,
  // normed by the max over blocks. A function algebra C(X) is the sum of
  // |X| one-point blocks with the sup norm. Within a matrix block the basis
  // is E_ij at offset + i * size + j.
  class FinAlgebra {
   public:
    using Term = std::pair<std::size_t, Scalar>;

    static FinAlgebra functions(std::vector<std::string> point_labels);
    static FinAlgebra functions(std::size_t points);
    static FinAlgebra matrices(std::vector<std::size_t> const& sizes, PNorm p);
    static FinAlgebra direct_sum(std::span<FinAlgebra const> summands);

    std::size_t dim() const noexcept {
      return _dim;
    }
    std::vector<Block> const& blocks() const noexcept {
      return _blocks;
    }
    std::size_t block_of(std::size_t basis_index) const noexcept {
      return _block_of[basis_index];
    }
    std::vector<std::string> const& basis_labels() const noexcept {
      return _labels;
    }
    bool is_function_algebra() const noexcept;

    // Structure constants: e_i e_j = sum of the returned terms.
    std::vector<Term> const& basis_product(std::size_t i, std::size_t j) const {
      return _products[i * _dim + j];
    }

    // Throws Error(DimensionMismatch).
    Vector multiply(Vector const& x, Vector const& y) const;
    double norm(Vector const& x) const;

    bool has_star() const noexcept;
    // Throws Error(NoStarOnAlgebra).
    Vector star(Vector const& x) const;

    Vector basis_vector(std::size_t k) const;
    Vector zero() const {
      return Vector::Zero(static_cast<Eigen::Index>(_dim));
    }
    Vector unit() const;
    // Identity of the sum of the given blocks.
    Vector unit_of_blocks(std::span<std::size_t const> blocks) const;
    // Columns: the standard basis vectors of the given blocks.
    Matrix span_of_blocks(std::span<std::size_t const> blocks) const;

    // The block-b component of x as a size x size matrix.
    Matrix block_matrix(Vector const& x, std::size_t b) const;

    std::string describe() const;

   private:
    FinAlgebra() = default;
    void init();

    std::size_t                    _dim = 0;
    std::vector<Block>             _blocks;
    std::vector<std::size_t>       _block_of;
    std::vector<std::string>       _labels;
    std::vector<std::vector<Term>> _products;
  };

  // Associativity on basis triples, star laws and sampled
  // submultiplicativity (1000 random pairs).
  Report validate_algebra(FinAlgebra const& A,
                          double            tol  = kDefaultTol,
                          std::uint64_t     seed = 0);

  using AlgebraPtr = std::shared_ptr<FinAlgebra const>;

  // A two-sided ideal given by a spanning basis (columns, coordinates in
  // the parent algebra) and a unit element.
  class Ideal {
   public:
    Ideal(AlgebraPtr algebra, Matrix basis, Vector unit);

    static Ideal from_blocks(AlgebraPtr algebra, std::vector<std::size_t> blocks);
    static Ideal zero(AlgebraPtr algebra);
    static Ideal whole(AlgebraPtr algebra);

    // Uses the standard basis of the supporting blocks when the span is a
    // sum of blocks, otherwise an orthonormal basis of `span`.
    static Ideal canonical(AlgebraPtr    algebra,
                           Matrix const& span,
                           Vector        unit,
                           double        tol = kDefaultTol);

    FinAlgebra const& algebra() const noexcept {
      return *_algebra;
    }
    AlgebraPtr const& algebra_ptr() const noexcept {
      return _algebra;
    }
    Matrix const& basis() const noexcept {
      return _basis;
    }
    Matrix const& orthonormal() const noexcept {
      return _orth;
    }
    Vector const& unit() const noexcept {
      return _unit;
    }
    std::size_t dim() const noexcept {
      return static_cast<std::size_t>(_orth.cols());
    }
    bool is_zero() const noexcept {
      return dim() == 0;
    }

    bool contains(Vector const& x, double tol = kDefaultTol) const;
    bool contains(Ideal const& other, double tol = kDefaultTol) const;
    bool same_subspace(Ideal const& other, double tol = kDefaultTol) const;

    // Coordinates of x in `basis()`.
    Vector coordinates(Vector const& x) const;

    // Blocks on which the ideal has a nonzero component.
    std::vector<std::size_t> block_support(double tol = kDefaultTol) const;

   private:
    AlgebraPtr _algebra;
    Matrix     _basis;
    Matrix     _orth;
    Vector     _unit;
  };

  // Errors: NotAnIdeal (witness basis pair), NoUnit (witness vector).
  Report ideal_validate(Ideal const& I, double tol = kDefaultTol);

  // I intersect J with unit u_I u_J (verified; throws IntersectionNotUnital).
  Ideal intersect(Ideal const& I, Ideal const& J, double tol = kDefaultTol);

  // A linear bijection between two ideals of the same algebra, given by the
  // images of the source basis vectors.
  class PartialAut {
   public:
    PartialAut(Ideal source, Ideal target, Matrix images);

    static PartialAut identity(Ideal const& I);

    Ideal const& source() const noexcept {
      return _source;
    }
    Ideal const& target() const noexcept {
      return _target;
    }
    Matrix const& images() const noexcept {
      return _images;
    }
    // dim x dim matrix agreeing with the map on the source and vanishing on
    // its orthogonal complement.
    Matrix const& matrix() const noexcept {
      return _matrix;
    }
    Vector operator()(Vector const& x) const {
      return _matrix * x;
    }

   private:
    Ideal  _source;
    Ideal  _target;
    Matrix _images;
    Matrix _matrix;
  };

  enum class IsometryCertificate { exact, sampled };

  // Asserts bijectivity, isometry, multiplicativity and unit preservation.
  // Isometry is certified exactly for function algebras and block-copy maps
  // and by 2000 random samples otherwise; the check's note records which.
  Report paut_validate(PartialAut const& phi,
                       double            tol  = kDefaultTol,
                       std::uint64_t     seed = 0);

  // phi o psi on psi^{-1}(source(phi) intersect target(psi)).
  PartialAut compose(PartialAut const& phi,
                     PartialAut const& psi,
                     double            tol = kDefaultTol);

  PartialAut inverse(PartialAut const& phi);

  // Equal source subspaces and equal maps on a basis of the source.
  bool same_partial_map(PartialAut const& a,
                        PartialAut const& b,
                        double            tol = kDefaultTol);

}  // namespace crossed

#endif  // CROSSED_NORMED_ALGEBRA_HPP_
