#include "crossed/representation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace crossed {

  namespace {

    bool close(Matrix const& a, Matrix const& b, double tol) {
      if (a.size() == 0) {
        return true;
      }
      double scale = std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
      return (a - b).cwiseAbs().maxCoeff() <= tol * scale;
    }

    Matrix hcat(std::vector<Vector> const& cols, Eigen::Index rows) {
      Matrix m(rows, static_cast<Eigen::Index>(cols.size()));
      for (std::size_t k = 0; k < cols.size(); ++k) {
        m.col(static_cast<Eigen::Index>(k)) = cols[k];
      }
      return m;
    }

    std::string pair_name(InvSemigroup const& S, Index s, Index t) {
      return "(" + S.name(s) + ", " + S.name(t) + ")";
    }

    std::string at(InvSemigroup const& S, Index t, Eigen::Index k) {
      return S.name(t) + ", basis vector " + std::to_string(k) + " of I_" + S.name(t);
    }

    // Spanning set of A_t = pi(I_t) v_t as vectorized matrices.
    Matrix grade(CovariantRep const& r, Index t) {
      Matrix const&       B = r.action().ideal(t).basis();
      std::vector<Vector> cols;
      for (Eigen::Index k = 0; k < B.cols(); ++k) {
        cols.push_back(vectorize(r.pi(B.col(k)) * r.v(t)));
      }
      auto n = static_cast<Eigen::Index>(r.space().dim);
      return hcat(cols, n * n);
    }

    Ell1Element random_element(ActionPtr const& action, std::mt19937_64& rng) {
      Ell1Element f(action);
      for (Index t = 0; t < action->semigroup().size(); ++t) {
        Matrix const& B = action->ideal(t).basis();
        if (B.cols() > 0) {
          f.accumulate(t, B * random_vector(rng, B.cols()));
        }
      }
      return f;
    }

    void throw_first(Report const& report) {
      if (auto code = report.first_error()) {
        throw Error(*code, report.to_string());
      }
    }

  }  // namespace

  CovariantRep::CovariantRep(ActionPtr           action,
                             ReprSpace           space,
                             std::vector<Matrix> pi,
                             std::vector<Matrix> v)
      : _action(std::move(action)), _space(space), _pi(std::move(pi)), _v(std::move(v)) {
    auto const n = static_cast<Eigen::Index>(_space.dim);
    if (_pi.size() != _action->algebra().dim()) {
      throw Error(Errc::DimensionMismatch, "one pi matrix per algebra basis vector required");
    }
    if (_v.size() != _action->semigroup().size()) {
      throw Error(Errc::DimensionMismatch, "one v matrix per semigroup element required");
    }
    for (auto const* list : {&_pi, &_v}) {
      for (auto const& m : *list) {
        if (m.rows() != n || m.cols() != n) {
          throw Error(Errc::DimensionMismatch,
                      "representation matrices must be " + std::to_string(n) + "x"
                          + std::to_string(n));
        }
      }
    }
  }

  Matrix CovariantRep::pi(Vector const& a) const {
    auto   n = static_cast<Eigen::Index>(_space.dim);
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t k = 0; k < _pi.size(); ++k) {
      if (a(k) != 0.0) {
        m += a(k) * _pi[k];
      }
    }
    return m;
  }

  Report rep_invariants(CovariantRep const& r, double tol, std::uint64_t seed) {
    Report              report;
    FinAlgebra const&   A = r.action().algebra();
    InvSemigroup const& S = r.action().semigroup();

    auto& hom = report.check("pi multiplicative", Errc::NotAHomomorphism);
    for (std::size_t i = 0; i < A.dim(); ++i) {
      for (std::size_t j = 0; j < A.dim(); ++j) {
        Matrix lhs = r.pi(A.multiply(A.basis_vector(i), A.basis_vector(j)));
        hom.expect(close(lhs, r.pi_basis()[i] * r.pi_basis()[j], tol),
                   "(" + A.basis_labels()[i] + ", " + A.basis_labels()[j] + ")");
      }
    }

    auto& con = report.check("pi contractive", Errc::NotContractive);
    if (A.is_function_algebra() && A.dim() <= 16) {
      con.note = "exact, " + std::to_string(std::size_t{1} << A.dim()) + " sign patterns";
      for (std::size_t mask = 0; mask < (std::size_t{1} << A.dim()); ++mask) {
        Vector a(A.dim());
        for (std::size_t k = 0; k < A.dim(); ++k) {
          a(k) = (mask >> k) & 1 ? -1.0 : 1.0;
        }
        double nm = r.norm(r.pi(a));
        con.expect(nm <= 1.0 + tol, "sign pattern " + format_vector(a) + " has image norm "
                                        + std::to_string(nm));
      }
    } else {
      con.note = "sampled, 2000 complex-phase unit vectors";
      std::mt19937_64                        rng(seed);
      std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
      for (int k = 0; k < 2000; ++k) {
        Vector a = random_vector(rng, static_cast<Eigen::Index>(A.dim()));
        if (A.is_function_algebra()) {
          for (Eigen::Index i = 0; i < a.size(); ++i) {
            a(i) = std::polar(1.0, phase(rng));
          }
        }
        a /= A.norm(a);
        double nm = r.norm(r.pi(a));
        con.expect(nm <= 1.0 + tol, format_vector(a) + " has image norm " + std::to_string(nm));
      }
    }

    auto& vc = report.check("||v_t|| <= 1", Errc::NotContractive);
    for (Index t = 0; t < S.size(); ++t) {
      double nm = r.norm(r.v(t));
      vc.expect(nm <= 1.0 + tol, "||v_" + S.name(t) + "|| = " + std::to_string(nm));
    }
    return report;
  }

  bool is_nondegenerate(CovariantRep const& r, double tol) {
    auto const n = static_cast<Eigen::Index>(r.space().dim);
    Matrix     all(n, n * static_cast<Eigen::Index>(r.pi_basis().size()));
    for (std::size_t k = 0; k < r.pi_basis().size(); ++k) {
      all.middleCols(static_cast<Eigen::Index>(k) * n, n) = r.pi_basis()[k];
    }
    return rank(all, tol) == r.space().dim;
  }

  Report check_spatial(CovariantRep const& r, double tol, std::uint64_t seed) {
    Report              report = rep_invariants(r, tol, seed);
    Action const&       alpha  = r.action();
    InvSemigroup const& S      = alpha.semigroup();

    auto& hom = report.check("v semigroup homomorphism", Errc::NotSemigroupHom);
    for (Index s = 0; s < S.size(); ++s) {
      for (Index t = 0; t < S.size(); ++t) {
        hom.expect(close(r.v(s) * r.v(t), r.v(S.product(s, t)), tol), pair_name(S, s, t));
      }
    }

    auto& scr1 = report.check("SCR1", Errc::SCR1Violation);
    for (Index t = 0; t < S.size(); ++t) {
      Matrix const& B = alpha.ideal(S.star(t)).basis();
      for (Eigen::Index k = 0; k < B.cols(); ++k) {
        Vector a = B.col(k);
        scr1.expect(close(r.v(t) * r.pi(a), r.pi(alpha.alpha(t)(a)) * r.v(t), tol),
                    at(S, S.star(t), k) + " under v_" + S.name(t));
      }
    }

    auto& scr2 = report.check("SCR2", Errc::SCR2RangeMismatch);
    auto const n = static_cast<Eigen::Index>(r.space().dim);
    for (Index t = 0; t < S.size(); ++t) {
      Matrix const& B = alpha.ideal(t).basis();
      Matrix        ess(n, n * B.cols());
      for (Eigen::Index k = 0; k < B.cols(); ++k) {
        ess.middleCols(k * n, n) = r.pi(B.col(k));
      }
      scr2.expect(same_span(r.v(t), ess, tol), S.name(t));
    }

    auto& pis = report.check("v_t v_{t*} v_t = v_t", Errc::PartialIsometryViolation);
    for (Index t = 0; t < S.size(); ++t) {
      pis.expect(close(r.v(t) * r.v(S.star(t)) * r.v(t), r.v(t), tol), S.name(t));
    }
    return report;
  }

  Report check_algebraic(CovariantRep const& r, double tol, std::uint64_t seed) {
    Report              report = rep_invariants(r, tol, seed);
    Action const&       alpha  = r.action();
    InvSemigroup const& S      = alpha.semigroup();

    auto& cr1 = report.check("CR1", Errc::CR1Violation);
    cr1.note  = "products lie in B automatically at finite dimension";
    auto& alt = report.check("v_t pi(a) v_{t*} = pi(alpha_t(a))",
                             Errc::CovarianceAlternateViolation);
    for (Index t = 0; t < S.size(); ++t) {
      Matrix const& B = alpha.ideal(S.star(t)).basis();
      for (Eigen::Index k = 0; k < B.cols(); ++k) {
        Vector a  = B.col(k);
        Matrix pa = r.pi(alpha.alpha(t)(a));
        cr1.expect(close(r.v(t) * r.pi(a), pa * r.v(t), tol),
                   at(S, S.star(t), k) + " under v_" + S.name(t));
        alt.expect(close(r.v(t) * r.pi(a) * r.v(S.star(t)), pa, tol),
                   at(S, S.star(t), k) + " under v_" + S.name(t));
      }
    }

    auto& cr2 = report.check("CR2", Errc::CR2Violation);
    for (Index s = 0; s < S.size(); ++s) {
      for (Index t = 0; t < S.size(); ++t) {
        Index         st = S.product(s, t);
        Matrix const& B  = alpha.ideal(st).basis();
        for (Eigen::Index k = 0; k < B.cols(); ++k) {
          Matrix pa = r.pi(B.col(k));
          cr2.expect(close(pa * r.v(s) * r.v(t), pa * r.v(st), tol),
                     pair_name(S, s, t) + ", basis vector " + std::to_string(k) + " of I_"
                         + S.name(st));
        }
      }
    }

    auto& cr3  = report.check("CR3", Errc::CR3Violation);
    auto& left = report.check("v_e pi(a) = pi(a)", Errc::CR3Violation);
    for (auto e : S.idempotents()) {
      Matrix const& B = alpha.ideal(e).basis();
      for (Eigen::Index k = 0; k < B.cols(); ++k) {
        Matrix pa = r.pi(B.col(k));
        cr3.expect(close(pa * r.v(e), pa, tol), at(S, e, k));
        left.expect(close(r.v(e) * pa, pa, tol), at(S, e, k));
      }
    }

    auto& back = report.check("pi(a) v_{t*} v_t = pi(a)", Errc::CR2Violation);
    for (Index t = 0; t < S.size(); ++t) {
      Matrix const& B = alpha.ideal(S.star(t)).basis();
      for (Eigen::Index k = 0; k < B.cols(); ++k) {
        Matrix pa = r.pi(B.col(k));
        back.expect(close(pa * r.v(S.star(t)) * r.v(t), pa, tol), at(S, S.star(t), k));
      }
    }

    report.note(std::string("non-degenerate: ") + (is_nondegenerate(r, tol) ? "yes" : "no"));
    return report;
  }

  Report normalization_check(CovariantRep const& r, CovariantRep const& n, double tol) {
    Report              report;
    Action const&       alpha = r.action();
    InvSemigroup const& S     = alpha.semigroup();

    auto& hom = report.check("normalized: semigroup homomorphism", Errc::NormalizationViolation);
    for (Index s = 0; s < S.size(); ++s) {
      for (Index t = 0; t < S.size(); ++t) {
        hom.expect(close(n.v(s) * n.v(t), n.v(S.product(s, t)), tol), pair_name(S, s, t));
      }
    }

    auto& idem = report.check("normalized: v_e = pi(1_e)", Errc::NormalizationViolation);
    for (auto e : S.idempotents()) {
      idem.expect(close(n.v(e), r.pi(alpha.unit(e)), tol), S.name(e));
    }

    auto& same = report.check("pi(a) v_t = pi(a) normalized v_t", Errc::NormalizationViolation);
    auto& right = report.check("normalized v_t = v_t pi(1_{t*})", Errc::NormalizationViolation);
    auto& fixed = report.check("normalize idempotent", Errc::NormalizationViolation);
    for (Index t = 0; t < S.size(); ++t) {
      Matrix const& B = alpha.ideal(t).basis();
      for (Eigen::Index k = 0; k < B.cols(); ++k) {
        Matrix pa = r.pi(B.col(k));
        same.expect(close(pa * r.v(t), pa * n.v(t), tol), at(S, t, k));
      }
      right.expect(close(n.v(t), n.v(t) * r.pi(alpha.unit(S.star(t))), tol), S.name(t));
      fixed.expect(close(r.pi(alpha.unit(t)) * n.v(t), n.v(t), tol), S.name(t));
    }

    auto& range = report.check("B(pi, v) = B(pi, normalized v)", Errc::NormalizationViolation);
    std::vector<Vector> a_cols, b_cols;
    for (Index t = 0; t < S.size(); ++t) {
      Matrix ga = grade(r, t), gb = grade(n, t);
      for (Eigen::Index k = 0; k < ga.cols(); ++k) {
        a_cols.push_back(ga.col(k));
        b_cols.push_back(gb.col(k));
      }
    }
    auto const rows = static_cast<Eigen::Index>(r.space().dim * r.space().dim);
    range.expect(same_span(hcat(a_cols, rows), hcat(b_cols, rows), tol), "ranges differ");
    return report;
  }

  CovariantRep normalize(CovariantRep const& r, double tol) {
    throw_first(check_algebraic(r, tol));
    Action const&       alpha = r.action();
    std::vector<Matrix> v;
    for (Index t = 0; t < alpha.semigroup().size(); ++t) {
      v.push_back(r.pi(alpha.unit(t)) * r.v(t));
    }
    CovariantRep n(r.action_ptr(), r.space(), r.pi_basis(), std::move(v));
    Report       report = normalization_check(r, n, tol);
    if (!report.ok()) {
      throw Error(Errc::NormalizationViolation, report.to_string());
    }
    return n;
  }

  bool is_normalized(CovariantRep const& r, double tol) {
    Action const&       alpha = r.action();
    InvSemigroup const& S     = alpha.semigroup();
    for (Index t = 0; t < S.size(); ++t) {
      if (!close(r.pi(alpha.unit(t)) * r.v(t), r.v(t), tol)
          || !close(r.v(t) * r.pi(alpha.unit(S.star(t))), r.v(t), tol)) {
        return false;
      }
    }
    return true;
  }

  Matrix integrate(CovariantRep const& r, Ell1Element const& f) {
    if (f.action_ptr() != r.action_ptr()) {
      throw Error(Errc::ActionMismatch, "element of a different crossed product");
    }
    auto   n = static_cast<Eigen::Index>(r.space().dim);
    Matrix m = Matrix::Zero(n, n);
    for (auto t : f.support()) {
      m += r.pi(f[t]) * r.v(t);
    }
    return m;
  }

  Matrix integration_matrix(CovariantRep const& r, Ell1Space const& space) {
    auto   n = static_cast<Eigen::Index>(r.space().dim);
    Matrix m(n * n, static_cast<Eigen::Index>(space.dim()));
    for (std::size_t i = 0; i < space.dim(); ++i) {
      m.col(static_cast<Eigen::Index>(i)) = vectorize(integrate(r, space.monomial(i)));
    }
    return m;
  }

  Report integration_check(CovariantRep const& r,
                           Ell1Space const&    space,
                           Matrix const&       null_basis,
                           std::size_t         samples,
                           double              tol,
                           std::uint64_t       seed) {
    Report          report;
    std::mt19937_64 rng(seed);

    auto& mult = report.check("integrated map multiplicative", Errc::IntegrationViolation);
    auto& con  = report.check("||pi x v (f)|| <= ||f||_1", Errc::IntegrationViolation);
    for (std::size_t k = 0; k < samples; ++k) {
      Ell1Element f  = random_element(r.action_ptr(), rng);
      Ell1Element g  = random_element(r.action_ptr(), rng);
      Matrix      fg = integrate(r, convolve(f, g, 1e-8));
      mult.expect(close(fg, integrate(r, f) * integrate(r, g), tol),
                  "sample " + std::to_string(k));
      double nf = ell1_norm(f);
      con.expect(r.norm(integrate(r, f)) <= nf * (1.0 + tol) + tol,
                 "sample " + std::to_string(k));
    }

    auto& null = report.check("Null in kernel", Errc::IntegrationViolation);
    for (Eigen::Index k = 0; k < null_basis.cols(); ++k) {
      Matrix m = integrate(r, space.element(null_basis.col(k)));
      null.expect(m.size() == 0 || m.cwiseAbs().maxCoeff() <= tol,
                  "Null basis vector " + std::to_string(k));
    }
    return report;
  }

  Report grading_check(CovariantRep const& r, double tol) {
    Report              report;
    InvSemigroup const& S = r.action().semigroup();
    std::vector<Matrix> grades;
    for (Index t = 0; t < S.size(); ++t) {
      grades.push_back(grade(r, t));
    }
    auto const n = static_cast<Eigen::Index>(r.space().dim);

    auto& prod = report.check("A_s A_t in A_st", Errc::GradingViolation);
    for (Index s = 0; s < S.size(); ++s) {
      for (Index t = 0; t < S.size(); ++t) {
        std::vector<Vector> cols;
        for (Eigen::Index i = 0; i < grades[s].cols(); ++i) {
          Matrix a = grades[s].col(i).reshaped(n, n);
          for (Eigen::Index j = 0; j < grades[t].cols(); ++j) {
            Matrix b = grades[t].col(j).reshaped(n, n);
            cols.push_back(vectorize(a * b));
          }
        }
        prod.expect(span_contains(grades[S.product(s, t)], hcat(cols, n * n), tol),
                    pair_name(S, s, t));
      }
    }

    auto& order = report.check("s <= t implies A_s in A_t", Errc::GradingViolation);
    for (auto [s, t] : natural_order(S)) {
      order.expect(span_contains(grades[t], grades[s], tol), pair_name(S, s, t));
    }
    return report;
  }

  CovariantRep regular_rep(ActionPtr action, PartialSetAction const& theta, PNorm p) {
    FinAlgebra const& A = action->algebra();
    if (!A.is_function_algebra() || A.dim() != theta.carrier
        || action->semigroup_ptr() != theta.semigroup) {
      throw Error(Errc::ActionMismatch, "the action is not induced from this partial action");
    }
    auto const          n = static_cast<Eigen::Index>(theta.carrier);
    std::vector<Matrix> pi, v;
    for (Eigen::Index k = 0; k < n; ++k) {
      Matrix m = Matrix::Zero(n, n);
      m(k, k)  = 1.0;
      pi.push_back(std::move(m));
    }
    for (auto const& f : theta.theta) {
      Matrix m = Matrix::Zero(n, n);
      for (auto y : f.domain()) {
        m(f[y], y) = 1.0;
      }
      v.push_back(std::move(m));
    }
    CovariantRep r(std::move(action), ReprSpace{theta.carrier, p}, std::move(pi), std::move(v));
    Report report = check_spatial(r);
    if (!report.ok()) {
      throw Error(Errc::InternalError, "regular representation is not spatial:\n" + report.to_string());
    }
    return r;
  }

  double seminorm_family(Ell1Element const& f, std::vector<CovariantRep> const& family) {
    if (family.empty()) {
      throw Error(Errc::EmptyFamily, "the representation family is empty");
    }
    double best = 0.0;
    for (auto const& r : family) {
      best = std::max(best, r.norm(integrate(r, f)));
    }
    return best;
  }

  SeminormKernel seminorm_kernel(std::vector<CovariantRep> const& family,
                                 Ell1Space const&                 space,
                                 Matrix const&                    null_basis,
                                 double                           tol) {
    if (family.empty()) {
      throw Error(Errc::EmptyFamily, "the representation family is empty");
    }
    Eigen::Index rows = 0;
    for (auto const& r : family) {
      throw_first(check_algebraic(r, tol));
      if (!is_nondegenerate(r, tol)) {
        throw Error(Errc::DegenerateRepresentation, "span pi(A)E is a proper subspace");
      }
      rows += static_cast<Eigen::Index>(r.space().dim * r.space().dim);
    }
    Matrix       stacked(rows, static_cast<Eigen::Index>(space.dim()));
    Eigen::Index row = 0;
    for (auto const& r : family) {
      Matrix m = integration_matrix(r, space);
      stacked.middleRows(row, m.rows()) = m;
      row += m.rows();
    }
    SeminormKernel result;
    result.basis         = null_space(stacked, tol);
    result.is_ideal      = is_two_sided_ideal(space, result.basis, tol);
    result.contains_null = span_contains(result.basis, null_basis, tol);
    if (!result.is_ideal || !result.contains_null) {
      throw Error(Errc::InternalError, "seminorm kernel is not an ideal containing Null");
    }
    return result;
  }

  Report adjoint_check(CovariantRep const& r, std::size_t samples, double tol, std::uint64_t seed) {
    Action const&       alpha = r.action();
    InvSemigroup const& S     = alpha.semigroup();
    FinAlgebra const&   A     = alpha.algebra();
    if (r.space().p != PNorm::two) {
      throw Error(Errc::AdjointViolation, "adjoints need p = 2");
    }
    if (!A.has_star()) {
      throw Error(Errc::NoStarOnAlgebra, A.describe());
    }
    Report report;

    auto& star = report.check("pi(a^*) = pi(a)^H", Errc::AdjointViolation);
    for (std::size_t k = 0; k < A.dim(); ++k) {
      Vector e = A.basis_vector(k);
      star.expect(close(r.pi(A.star(e)), r.pi(e).adjoint(), tol), A.basis_labels()[k]);
    }

    auto& adj = report.check("(pi(a)v_t)^H = pi(alpha_{t*}(a^*)) v_{t*}", Errc::AdjointViolation);
    auto& sat = report.check("A_t^H = A_{t*}", Errc::AdjointViolation);
    auto const n = static_cast<Eigen::Index>(r.space().dim);
    for (Index t = 0; t < S.size(); ++t) {
      Matrix const&       B  = alpha.ideal(t).basis();
      Index const         ts = S.star(t);
      std::vector<Vector> cols;
      for (Eigen::Index k = 0; k < B.cols(); ++k) {
        Vector a   = B.col(k);
        Matrix lhs = (r.pi(a) * r.v(t)).adjoint();
        adj.expect(close(lhs, r.pi(alpha.alpha(ts)(A.star(a))) * r.v(ts), tol), at(S, t, k));
        cols.push_back(vectorize(lhs));
      }
      sat.expect(same_span(hcat(cols, n * n), grade(r, ts), tol), S.name(t));
    }

    auto&           integ = report.check("pi x v (f^*) = (pi x v (f))^H", Errc::AdjointViolation);
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
      Ell1Element f = random_element(r.action_ptr(), rng);
      integ.expect(close(integrate(r, involution(f)), integrate(r, f).adjoint(), tol),
                   "sample " + std::to_string(k));
    }
    return report;
  }

  Report group_case_check(Ell1Space const& space, CovariantRep const* r, double tol) {
    Action const&       alpha = space.action();
    InvSemigroup const& S     = alpha.semigroup();
    FinAlgebra const&   A     = alpha.algebra();
    if (!S.is_group()) {
      throw Error(Errc::NotAGroup, std::to_string(S.idempotents().size()) + " idempotents");
    }
    Report report;

    auto&  conv  = report.check("group convolution formula", Errc::NotAnAction);
    double worst = 0.0;
    for (std::size_t i = 0; i < space.dim(); ++i) {
      for (std::size_t j = 0; j < space.dim(); ++j) {
        Ell1Element a = space.monomial(i);
        Ell1Element b = space.monomial(j);
        Ell1Element c(space.action_ptr());
        for (Index g = 0; g < S.size(); ++g) {
          for (Index h = 0; h < S.size(); ++h) {
            Index hinv_g = S.product(S.star(h), g);
            c.accumulate(g, A.multiply(a[h], alpha.alpha(h)(b[hinv_g])));
          }
        }
        double d = c.distance(convolve(a, b, tol));
        worst    = std::max(worst, d);
        conv.expect(d <= tol, "(" + space.coordinate_label(i) + ", "
                                  + space.coordinate_label(j) + ")");
      }
    }
    conv.note = "largest difference " + std::to_string(worst);

    if (r != nullptr) {
      auto& unitary = report.check("v_g invertible isometries", Errc::NotContractive);
      if (!is_nondegenerate(*r, tol) || !is_normalized(*r, tol)) {
        unitary.note = "skipped: representation is not non-degenerate and normalized";
      } else {
        for (Index g = 0; g < S.size(); ++g) {
          Eigen::FullPivLU<Matrix> lu(r->v(g));
          if (!lu.isInvertible()) {
            unitary.fail(S.name(g) + " is singular");
            continue;
          }
          double a = r->norm(r->v(g));
          double b = r->norm(lu.inverse());
          unitary.expect(a <= 1.0 + tol && b <= 1.0 + tol,
                         S.name(g) + ": norms " + std::to_string(a) + ", " + std::to_string(b));
        }
      }
    }
    return report;
  }

}  // namespace crossed
