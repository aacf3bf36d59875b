#include "crossed/convolution.hpp"

#include <cmath>
#include <numbers>

#include "crossed/simplex.hpp"

namespace crossed {

  ////////////////////////////////////////////////////////////////////////
  // Ell1Element
  ////////////////////////////////////////////////////////////////////////

  Ell1Element::Ell1Element(ActionPtr action)
      : _action(std::move(action)),
        _values(_action->semigroup().size(), _action->algebra().zero()) {}

  Ell1Element Ell1Element::monomial(ActionPtr action, Index t, Vector a, double tol) {
    Ell1Element f(std::move(action));
    f.set(t, std::move(a), tol);
    return f;
  }

  void Ell1Element::set(Index t, Vector a, double tol) {
    if (a.size() != static_cast<Eigen::Index>(_action->algebra().dim())) {
      throw Error(Errc::DimensionMismatch, "coefficient vector has the wrong length");
    }
    if (!_action->ideal(t).contains(a, tol)) {
      throw Error(Errc::NotInIdeal,
                  format_vector(a) + " is not in I_" + _action->semigroup().name(t));
    }
    _values[t] = std::move(a);
  }

  void Ell1Element::accumulate(Index t, Vector const& a) {
    _values[t] += a;
  }

  std::vector<Index> Ell1Element::support(double tol) const {
    std::vector<Index> result;
    for (Index t = 0; t < _values.size(); ++t) {
      if (_values[t].size() > 0 && _values[t].cwiseAbs().maxCoeff() > tol) {
        result.push_back(t);
      }
    }
    return result;
  }

  bool Ell1Element::is_zero(double tol) const {
    return support(tol).empty();
  }

  void Ell1Element::require_same_action(Ell1Element const& g) const {
    if (_action != g._action) {
      throw Error(Errc::ActionMismatch, "elements of different crossed products");
    }
  }

  Ell1Element& Ell1Element::operator+=(Ell1Element const& g) {
    require_same_action(g);
    for (Index t = 0; t < _values.size(); ++t) {
      _values[t] += g._values[t];
    }
    return *this;
  }

  Ell1Element& Ell1Element::operator-=(Ell1Element const& g) {
    require_same_action(g);
    for (Index t = 0; t < _values.size(); ++t) {
      _values[t] -= g._values[t];
    }
    return *this;
  }

  Ell1Element& Ell1Element::operator*=(Scalar c) {
    for (auto& v : _values) {
      v *= c;
    }
    return *this;
  }

  double Ell1Element::distance(Ell1Element const& g) const {
    require_same_action(g);
    double d = 0.0;
    for (Index t = 0; t < _values.size(); ++t) {
      if (_values[t].size() > 0) {
        d = std::max(d, (_values[t] - g._values[t]).cwiseAbs().maxCoeff());
      }
    }
    return d;
  }

  Ell1Element convolve(Ell1Element const& f, Ell1Element const& g, double tol) {
    if (f.action_ptr() != g.action_ptr()) {
      throw Error(Errc::ActionMismatch, "elements of different crossed products");
    }
    Action const&       alpha = f.action();
    InvSemigroup const& S     = alpha.semigroup();
    FinAlgebra const&   A     = alpha.algebra();
    Ell1Element         result(f.action_ptr());
    auto const          sf = f.support();
    auto const          sg = g.support();
    for (auto s : sf) {
      Vector pulled = alpha.alpha(S.star(s))(f[s]);
      for (auto t : sg) {
        Index  r    = S.product(s, t);
        Vector term = alpha.alpha(s)(A.multiply(pulled, g[t]));
        if (!alpha.ideal(r).contains(term, tol)) {
          throw Error(Errc::InternalError,
                      "convolution summand for (" + S.name(s) + ", " + S.name(t)
                          + ") leaves I_" + S.name(r));
        }
        result.accumulate(r, term);
      }
    }
    return result;
  }

  double ell1_norm(Ell1Element const& f) {
    double total = 0.0;
    for (auto t : f.support()) {
      total += f.action().algebra().norm(f[t]);
    }
    return total;
  }

  Ell1Element involution(Ell1Element const& f) {
    Action const&       alpha = f.action();
    InvSemigroup const& S     = alpha.semigroup();
    FinAlgebra const&   A     = alpha.algebra();
    if (!A.has_star()) {
      throw Error(Errc::NoStarOnAlgebra, A.describe());
    }
    Ell1Element result(f.action_ptr());
    for (auto u : f.support()) {
      // f(u) contributes at t = u*: alpha_{u*}(f(u)^*)
      Index t = S.star(u);
      result.accumulate(t, alpha.alpha(t)(A.star(f[u])));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ell1Space
  ////////////////////////////////////////////////////////////////////////

  Ell1Space::Ell1Space(ActionPtr action, double tol) : _action(std::move(action)) {
    InvSemigroup const& S = _action->semigroup();
    for (Index t = 0; t < S.size(); ++t) {
      _offsets.push_back(_dim);
      for (std::size_t k = 0; k < _action->ideal(t).dim(); ++k) {
        _monomials.emplace_back(t, k);
      }
      _dim += _action->ideal(t).dim();
    }
    _products.reserve(_dim * _dim);
    std::vector<Ell1Element> monos;
    for (std::size_t i = 0; i < _dim; ++i) {
      monos.push_back(monomial(i));
    }
    for (std::size_t i = 0; i < _dim; ++i) {
      for (std::size_t j = 0; j < _dim; ++j) {
        _products.push_back(coordinates(convolve(monos[i], monos[j], tol)));
      }
    }
  }

  std::string Ell1Space::coordinate_label(std::size_t coord) const {
    auto [t, k]        = _monomials[coord];
    Ideal const&  I    = _action->ideal(t);
    Vector const  b    = I.basis().col(k);
    std::string   name = "b" + std::to_string(k);
    Eigen::Index  idx  = 0;
    if ((b.array() != 0.0).count() == 1 && (b.cwiseAbs().maxCoeff(&idx), b(idx) == 1.0)) {
      name = _action->algebra().basis_labels()[idx];
    }
    return name + "@" + _action->semigroup().name(t);
  }

  Vector Ell1Space::coordinates(Ell1Element const& f) const {
    if (f.action_ptr() != _action) {
      throw Error(Errc::ActionMismatch, "element of a different crossed product");
    }
    Vector x = Vector::Zero(_dim);
    for (Index t = 0; t < _offsets.size(); ++t) {
      std::size_t d = _action->ideal(t).dim();
      if (d > 0) {
        x.segment(_offsets[t], d) = _action->ideal(t).coordinates(f[t]);
      }
    }
    return x;
  }

  Ell1Element Ell1Space::element(Vector const& coords) const {
    if (static_cast<std::size_t>(coords.size()) != _dim) {
      throw Error(Errc::DimensionMismatch, "coordinate vector has the wrong length");
    }
    Ell1Element f(_action);
    for (Index t = 0; t < _offsets.size(); ++t) {
      std::size_t d = _action->ideal(t).dim();
      if (d > 0) {
        f.accumulate(t, _action->ideal(t).basis() * coords.segment(_offsets[t], d));
      }
    }
    return f;
  }

  Ell1Element Ell1Space::monomial(std::size_t coord) const {
    Vector x  = Vector::Zero(_dim);
    x(coord) = 1.0;
    return element(x);
  }

  Vector Ell1Space::multiply(Vector const& x, Vector const& y) const {
    Vector r = Vector::Zero(_dim);
    for (std::size_t i = 0; i < _dim; ++i) {
      if (x(i) == 0.0) {
        continue;
      }
      for (std::size_t j = 0; j < _dim; ++j) {
        if (y(j) != 0.0) {
          r += (x(i) * y(j)) * _products[i * _dim + j];
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Null ideal and quotients
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Matrix hcat(Matrix const& a, Matrix const& b) {
      Matrix m(a.rows(), a.cols() + b.cols());
      m << a, b;
      return m;
    }

    // Columns: m * b and b * m for every monomial m and column b of B.
    Matrix monomial_products(Ell1Space const& space, Matrix const& B) {
      std::size_t const D = space.dim();
      Matrix            out(D, 2 * D * B.cols());
      Eigen::Index      c = 0;
      for (Eigen::Index k = 0; k < B.cols(); ++k) {
        Vector b = B.col(k);
        for (std::size_t i = 0; i < D; ++i) {
          Vector left  = Vector::Zero(D);
          Vector right = Vector::Zero(D);
          for (std::size_t j = 0; j < D; ++j) {
            if (b(j) != 0.0) {
              left += b(j) * space.basis_product(i, j);
              right += b(j) * space.basis_product(j, i);
            }
          }
          out.col(c++) = left;
          out.col(c++) = right;
        }
      }
      return out;
    }
  }  // namespace

  NullIdeal null_ideal(Ell1Space const& space, double tol) {
    Action const&       alpha = space.action();
    InvSemigroup const& S     = alpha.semigroup();
    std::size_t const   D     = space.dim();

    std::vector<Vector> gens;
    for (auto [s, t] : natural_order(S)) {
      if (s == t) {
        continue;
      }
      Ideal const& Is = alpha.ideal(s);
      for (Eigen::Index k = 0; k < Is.basis().cols(); ++k) {
        Vector      a = Is.basis().col(k);
        Ell1Element d = Ell1Element::monomial(space.action_ptr(), s, a, tol);
        d -= Ell1Element::monomial(space.action_ptr(), t, a, tol);
        gens.push_back(space.coordinates(d));
      }
    }

    NullIdeal result;
    result.generators = Matrix(D, gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      result.generators.col(k) = gens[k];
    }

    // products only: span{m (d) m'} is already a two-sided ideal
    Matrix one_sided = monomial_products(space, result.generators);
    Matrix two_sided(D, 0);
    for (Eigen::Index k = 0; k < one_sided.cols(); k += 2) {
      // left products m * d, then multiply those on the right
      two_sided = hcat(two_sided, monomial_products(space, one_sided.col(k)));
    }
    result.products_basis = orthonormal_basis(two_sided, tol);

    Matrix basis = orthonormal_basis(result.generators, tol);
    while (true) {
      ++result.saturation_rounds;
      Matrix next = orthonormal_basis(hcat(basis, monomial_products(space, basis)), tol);
      if (next.cols() == basis.cols()) {
        break;
      }
      basis = std::move(next);
    }
    result.basis = std::move(basis);
    return result;
  }

  bool is_two_sided_ideal(Ell1Space const& space, Matrix const& N, double tol) {
    return span_contains(N, monomial_products(space, N), tol);
  }

  Vector QuotientAlgebra::multiply(Vector const& x, Vector const& y) const {
    Vector r = Vector::Zero(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        r += x(i) * y(j) * structure[i * dim + j];
      }
    }
    return r;
  }

  QuotientAlgebra quotient_algebra(Ell1Space const& space, Matrix const& N, double tol) {
    if (!is_two_sided_ideal(space, N, tol)) {
      throw Error(Errc::NotAnIdeal, "subspace is not closed under convolution by monomials");
    }
    std::size_t const D = space.dim();
    QuotientAlgebra   q;
    Matrix            current = orthonormal_basis(N, tol);
    std::size_t const n_dim   = static_cast<std::size_t>(current.cols());
    for (std::size_t i = 0; i < D; ++i) {
      Vector e = Vector::Zero(D);
      e(i)     = 1.0;
      if (!in_span(current, e, tol)) {
        q.pivots.push_back(i);
        current = orthonormal_basis(hcat(current, e), tol);
      }
    }
    q.dim = q.pivots.size();
    if (q.dim + n_dim != D) {
      throw Error(Errc::InternalError, "complement basis has the wrong size");
    }
    Matrix frame = Matrix::Zero(D, D);
    for (std::size_t k = 0; k < q.dim; ++k) {
      frame(q.pivots[k], k) = 1.0;
    }
    if (n_dim > 0) {
      frame.rightCols(n_dim) = orthonormal_basis(N, tol);
    }
    q.projection = frame.inverse().topRows(q.dim);
    for (std::size_t i = 0; i < q.dim; ++i) {
      for (std::size_t j = 0; j < q.dim; ++j) {
        q.structure.push_back(q.projection * space.basis_product(q.pivots[i], q.pivots[j]));
      }
    }
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotient norm
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Variables: Re(lambda) (m, free), Im(lambda) (m, free), one bound s_t
    // per semigroup element with nonzero ideal, then auxiliary entry bounds.
    // Each block norm of f(t) + sum lambda_j n_j(t) is bounded by s_t.
    class NormLp {
     public:
      NormLp(Ell1Element const& f, Ell1Space const& space, Matrix const& N)
          : _space(space), _m(N.cols()) {
        Action const&     alpha = space.action();
        FinAlgebra const& A     = alpha.algebra();
        for (Index t = 0; t < alpha.semigroup().size(); ++t) {
          Ideal const& I = alpha.ideal(t);
          if (I.is_zero()) {
            continue;
          }
          Term term;
          term.t     = t;
          term.var   = next_var(false);
          term.value = f[t];
          term.slope = Matrix::Zero(A.dim(), _m);
          for (Eigen::Index j = 0; j < _m; ++j) {
            term.slope.col(j) = space.element(N.col(j))[t];
          }
          _terms.push_back(std::move(term));
        }
        for (auto& term : _terms) {
          add_term_constraints(term);
        }
      }

      std::size_t m() const {
        return static_cast<std::size_t>(_m);
      }

      lp::Solution solve() const {
        lp::Problem p;
        p.c = Eigen::VectorXd::Zero(_n_vars);
        for (auto const& term : _terms) {
          p.c(term.var) = 1.0;
        }
        p.A = Eigen::MatrixXd::Zero(_rows.size(), _n_vars);
        p.b = Eigen::VectorXd(_rows.size());
        for (std::size_t i = 0; i < _rows.size(); ++i) {
          for (auto const& [j, v] : _rows[i].coeffs) {
            p.A(i, j) += v;
          }
          p.b(i) = _rows[i].rhs;
        }
        p.free_vars = _free;
        return lp::solve(p);
      }

      Vector lambda(Eigen::VectorXd const& x) const {
        Vector l(_m);
        for (Eigen::Index j = 0; j < _m; ++j) {
          l(j) = Scalar(x(j), x(_m + j));
        }
        return l;
      }

      // Adds the violated polygon facets and a cut for every p = 2 block whose
      // norm exceeds its bound.
      // Returns the number of cuts added.
      std::size_t add_cuts(Eigen::VectorXd const& x, double tol) {
        FinAlgebra const& A     = _space.action().algebra();
        Vector            l     = lambda(x);
        std::size_t       added = 0;
        for (auto& mod : _moduli) {
          Term const& term = _terms[mod.term];
          Scalar      z    = (term.value + term.slope * l)(static_cast<Eigen::Index>(mod.coord));
          double      arg  = std::arg(z) / (2.0 * std::numbers::pi) * kModulusFacets;
          int         j    = static_cast<int>(std::lround(arg));
          j                = ((j % kModulusFacets) + kModulusFacets) % kModulusFacets;
          double face = (z * std::polar(1.0, -2.0 * std::numbers::pi * j / kModulusFacets)).real();
          if (!mod.used[static_cast<std::size_t>(j)] && face > x(mod.bound) + tol * (1.0 + face)) {
            add_facet(mod, j);
            ++added;
          }
        }
        for (auto const& term : _terms) {
          Vector z = term.value + term.slope * l;
          for (auto b : term.spectral_blocks) {
            Matrix M  = A.block_matrix(z, b);
            double nm = operator_norm(M, PNorm::two);
            if (nm <= x(term.var) + tol * (1.0 + nm)) {
              continue;
            }
            Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
            Vector u = svd.matrixU().col(0);
            Vector v = svd.matrixV().col(0);
            // Re(u^H M v) <= ||M||_2 for unit u, v; equality at the current
            // point.
            auto const& blk = A.blocks()[b];
            Vector      w   = Vector::Zero(A.dim());
            for (std::size_t i = 0; i < blk.size; ++i) {
              for (std::size_t k = 0; k < blk.size; ++k) {
                w(blk.offset + i * blk.size + k) = std::conj(u(i)) * v(k);
              }
            }
            add_functional_row(term, w, {{term.var, -1.0}});
            ++added;
          }
        }
        return added;
      }

     private:
      struct Term {
        Index                    t = 0;
        std::size_t              var = 0;
        Vector                   value;
        Matrix                   slope;
        std::vector<std::size_t> spectral_blocks;
      };
      struct Row {
        std::vector<std::pair<std::size_t, double>> coeffs;
        double                                      rhs = 0.0;
      };

      std::size_t next_var(bool is_free) {
        if (_n_vars == 0) {
          // lambda comes first
          for (Eigen::Index j = 0; j < 2 * _m; ++j) {
            _free.push_back(true);
          }
          _n_vars = static_cast<std::size_t>(2 * _m);
        }
        _free.push_back(is_free);
        return _n_vars++;
      }

      // Re(w . z(lambda)) + sum extra <= 0, with w a complex functional on
      // the algebra coordinates.
      void add_functional_row(Term const&                                        term,
                              Vector const&                                      w,
                              std::vector<std::pair<std::size_t, double>> const& extra) {
        Row    row;
        Scalar constant = (w.transpose() * term.value)(0);
        for (Eigen::Index j = 0; j < _m; ++j) {
          Scalar g = (w.transpose() * term.slope.col(j))(0);
          // Re(g (x + iy)) = Re(g) x - Im(g) y
          row.coeffs.emplace_back(j, g.real());
          row.coeffs.emplace_back(_m + j, -g.imag());
        }
        row.coeffs.insert(row.coeffs.end(), extra.begin(), extra.end());
        row.rhs = -constant.real();
        _rows.push_back(std::move(row));
      }

      // |z_k| <= bound via the polygon facets Re(e^{-i theta_j} z_k) <= bound.
      // Starts with every kInitialStride-th facet; the rest enter as cuts.
      void add_modulus_rows(Term const& term, std::size_t coord, std::size_t bound_var) {
        Modulus mod{static_cast<std::size_t>(&term - _terms.data()), coord, bound_var, {}};
        mod.used.assign(kModulusFacets, false);
        for (int j = 0; j < kModulusFacets; j += kInitialStride) {
          add_facet(mod, j);
        }
        _moduli.push_back(std::move(mod));
      }

      struct Modulus {
        std::size_t       term = 0;
        std::size_t       coord = 0;
        std::size_t       bound = 0;
        std::vector<bool> used;
      };

      void add_facet(Modulus& mod, int j) {
        double theta = 2.0 * std::numbers::pi * j / kModulusFacets;
        Vector w     = Vector::Zero(_terms[mod.term].value.size());
        w(static_cast<Eigen::Index>(mod.coord)) = std::polar(1.0, -theta);
        add_functional_row(_terms[mod.term], w, {{mod.bound, -1.0}});
        mod.used[static_cast<std::size_t>(j)] = true;
      }

      bool coord_active(Term const& term, std::size_t coord) const {
        return term.value(coord) != 0.0
               || (_m > 0 && term.slope.row(coord).cwiseAbs().maxCoeff() > 0.0);
      }

      void add_term_constraints(Term& term) {
        FinAlgebra const& A = _space.action().algebra();
        for (std::size_t b = 0; b < A.blocks().size(); ++b) {
          auto const& blk    = A.blocks()[b];
          bool        active = false;
          for (std::size_t k = 0; k < blk.dim(); ++k) {
            active = active || coord_active(term, blk.offset + k);
          }
          if (!active) {
            continue;
          }
          if (blk.size == 1) {
            add_modulus_rows(term, blk.offset, term.var);
            continue;
          }
          if (blk.p == PNorm::two) {
            term.spectral_blocks.push_back(b);
            continue;
          }
          // p = 1: column sums, p = inf: row sums of entry bounds.
          std::size_t              n = blk.size;
          std::vector<std::size_t> entry(n * n);
          for (std::size_t k = 0; k < n * n; ++k) {
            entry[k] = next_var(false);
            add_modulus_rows(term, blk.offset + k, entry[k]);
          }
          for (std::size_t outer = 0; outer < n; ++outer) {
            Row row;
            for (std::size_t inner = 0; inner < n; ++inner) {
              std::size_t k = blk.p == PNorm::one ? inner * n + outer : outer * n + inner;
              row.coeffs.emplace_back(entry[k], 1.0);
            }
            row.coeffs.emplace_back(term.var, -1.0);
            _rows.push_back(std::move(row));
          }
        }
      }

      static constexpr int kInitialStride = 8;

      Ell1Space const&     _space;
      Eigen::Index         _m;
      std::vector<Modulus> _moduli;
      std::size_t       _n_vars = 0;
      std::vector<bool> _free;
      std::vector<Term> _terms;
      std::vector<Row>  _rows;
    };

  }  // namespace

  QuotientNorm quotient_ell1_norm(Ell1Element const& f,
                                  Ell1Space const&   space,
                                  Matrix const&      N,
                                  double             tol) {
    if (f.action_ptr() != space.action_ptr()) {
      throw Error(Errc::ActionMismatch, "element of a different crossed product");
    }
    QuotientNorm result{0.0, 0.0, Ell1Element(space.action_ptr())};
    NormLp       lp(f, space, N);
    lp::Solution sol;
    for (int round = 0; round < 200; ++round) {
      sol = lp.solve();
      if (sol.status != lp::Status::optimal) {
        throw Error(Errc::InternalError, "quotient norm linear program did not solve");
      }
      if (lp.add_cuts(sol.x, tol) == 0) {
        break;
      }
    }
    Vector l = lp.lambda(sol.x);
    Vector shift = Vector::Zero(space.dim());
    if (lp.m() > 0) {
      shift = N * l;
    }
    result.representative = f + space.element(shift);
    result.value          = ell1_norm(result.representative);
    result.lower_bound    = sol.value;
    return result;
  }

}  // namespace crossed
