#include "crossed/action.hpp"

#include <algorithm>

namespace crossed {

  Action::Action(SemigroupPtr semigroup, AlgebraPtr algebra, std::vector<PartialAut> maps)
      : _semigroup(std::move(semigroup)),
        _algebra(std::move(algebra)),
        _maps(std::move(maps)) {
    if (_maps.size() != _semigroup->size()) {
      throw Error(Errc::DimensionMismatch,
                  "one partial automorphism per semigroup element required");
    }
    for (auto const& m : _maps) {
      if (m.source().algebra_ptr() != _algebra || m.target().algebra_ptr() != _algebra) {
        throw Error(Errc::DimensionMismatch,
                    "partial automorphism of a different algebra");
      }
    }
  }

  namespace {
    void merge_prefixed(Report&            into,
                        Report const&      from,
                        std::string const& prefix,
                        std::string const& where) {
      for (auto const& c : from.checks()) {
        Check& mine = into.check(prefix + c.name, c.code);
        if (mine.failed == 0 && c.failed > 0) {
          mine.witness = where + ": " + c.witness;
        }
        mine.checked += c.checked;
        mine.failed += c.failed;
        if (mine.note.empty() || (c.note != mine.note && c.note == "sampled, 2000 unit vectors")) {
          mine.note = c.note;
        }
      }
    }
  }  // namespace

  Report validate_action(Action const& alpha, double tol, std::uint64_t seed) {
    Report              report;
    InvSemigroup const& S = alpha.semigroup();
    FinAlgebra const&   A = alpha.algebra();

    for (Index t = 0; t < S.size(); ++t) {
      merge_prefixed(report, ideal_validate(alpha.ideal(t), tol), "PA2: ", "I_" + S.name(t));
    }

    auto& dom = report.check("alpha_t: I_{t*} -> I_t", Errc::NotAnAction);
    for (Index t = 0; t < S.size(); ++t) {
      dom.expect(alpha.alpha(t).source().same_subspace(alpha.ideal(S.star(t)), tol),
                 "source of alpha_" + S.name(t) + " is not I_" + S.name(S.star(t)));
    }
    for (Index t = 0; t < S.size(); ++t) {
      merge_prefixed(report,
                     paut_validate(alpha.alpha(t), tol, seed + t),
                     "alpha_t: ",
                     "alpha_" + S.name(t));
    }

    auto&  span = report.check("PA2: idempotent ideals span A", Errc::PA2SpanDeficit);
    Matrix all(A.dim(), 0);
    for (auto e : S.idempotents()) {
      Matrix next(A.dim(), all.cols() + alpha.ideal(e).basis().cols());
      next << all, alpha.ideal(e).basis();
      all = std::move(next);
    }
    std::size_t r = rank(all, tol);
    span.expect(r == A.dim(), "dimension gap " + std::to_string(A.dim() - r));

    if (auto z = S.zero()) {
      auto& zero = report.check("I_0 = {0}", Errc::NonzeroIdealAtZero);
      zero.expect(alpha.ideal(*z).is_zero(),
                  "I_" + S.name(*z) + " has dimension "
                      + std::to_string(alpha.ideal(*z).dim()));
    }

    auto& pa1 = report.check("PA1", Errc::PA1Violation);
    for (Index s = 0; s < S.size(); ++s) {
      for (Index t = 0; t < S.size(); ++t) {
        std::string w = "(" + S.name(s) + ", " + S.name(t) + ")";
        try {
          pa1.expect(same_partial_map(compose(alpha.alpha(s), alpha.alpha(t), tol),
                                      alpha.alpha(S.product(s, t)),
                                      tol),
                     w);
        } catch (Error const& e) {
          pa1.fail(w + " " + e.what());
        }
      }
    }
    return report;
  }

  Report derived_identities_check(Action const& alpha, double tol) {
    Report              report;
    InvSemigroup const& S = alpha.semigroup();

    auto& image = report.check("alpha_s(I_{s*} cap I_t) = I_{st}", Errc::NotAnAction);
    for (Index s = 0; s < S.size(); ++s) {
      for (Index t = 0; t < S.size(); ++t) {
        Ideal  K   = intersect(alpha.ideal(S.star(s)), alpha.ideal(t), tol);
        Matrix img = alpha.alpha(s).matrix() * K.basis();
        Matrix st  = alpha.ideal(S.product(s, t)).basis();
        image.expect(rank(img, tol) == static_cast<std::size_t>(st.cols())
                         && span_contains(st, img, tol),
                     "(" + S.name(s) + ", " + S.name(t) + ")");
      }
    }

    auto& tt = report.check("I_t = I_{tt*}", Errc::NotAnAction);
    for (Index t = 0; t < S.size(); ++t) {
      tt.expect(alpha.ideal(t).same_subspace(alpha.ideal(S.product(t, S.star(t))), tol),
                S.name(t));
    }

    auto& idem = report.check("alpha_e = id on I_e", Errc::NotAnAction);
    for (auto e : S.idempotents()) {
      idem.expect(same_partial_map(alpha.alpha(e), PartialAut::identity(alpha.ideal(e)), tol),
                  S.name(e));
    }

    auto& inv = report.check("alpha_{t*} = alpha_t^{-1}", Errc::NotAnAction);
    for (Index t = 0; t < S.size(); ++t) {
      inv.expect(same_partial_map(alpha.alpha(S.star(t)), inverse(alpha.alpha(t)), tol),
                 S.name(t));
    }

    auto& order = report.check("s <= t implies I_s in I_t", Errc::NotAnAction);
    for (auto [s, t] : natural_order(S)) {
      order.expect(alpha.ideal(t).contains(alpha.ideal(s), tol),
                   "(" + S.name(s) + ", " + S.name(t) + ")");
    }
    return report;
  }

  PartialSetAction PartialSetAction::tautological(SemigroupPtr S) {
    if (!S->is_concrete()) {
      throw Error(Errc::NotAnAction,
                  "the tautological action needs a semigroup of partial bijections");
    }
    PartialSetAction result;
    result.carrier   = S->elements().front().degree();
    result.theta     = S->elements();
    result.semigroup = std::move(S);
    return result;
  }

  Report PartialSetAction::validate() const {
    Report report;
    auto&  shape = report.check("theta_t on X", Errc::NotAnAction);
    shape.expect(theta.size() == semigroup->size(), "one map per element required");
    for (auto const& f : theta) {
      shape.expect(f.degree() == carrier, "carrier mismatch");
    }
    if (!shape.ok()) {
      return report;
    }
    auto& hom = report.check("theta_s o theta_t = theta_{st}", Errc::NotAnAction);
    for (Index s = 0; s < semigroup->size(); ++s) {
      for (Index t = 0; t < semigroup->size(); ++t) {
        hom.expect(compose(theta[s], theta[t]) == theta[semigroup->product(s, t)],
                   "(" + semigroup->name(s) + ", " + semigroup->name(t) + ")");
      }
    }
    return report;
  }

  ActionPtr induce_from_partial_action(PartialSetAction const&  theta,
                                       std::vector<std::string> point_labels) {
    theta.validate().throw_if_failed();
    if (point_labels.empty()) {
      for (std::size_t x = 0; x < theta.carrier; ++x) {
        point_labels.push_back(std::to_string(x + 1));
      }
    }
    if (point_labels.size() != theta.carrier) {
      throw Error(Errc::DimensionMismatch, "one label per carrier point required");
    }
    auto A = std::make_shared<FinAlgebra const>(FinAlgebra::functions(std::move(point_labels)));

    std::vector<PartialAut> maps;
    for (auto const& f : theta.theta) {
      auto  dom    = f.domain();
      auto  img    = f.image();
      Ideal source = Ideal::from_blocks(A, {dom.begin(), dom.end()});
      Ideal target = Ideal::from_blocks(A, {img.begin(), img.end()});
      // from_blocks orders the basis by point, matching `dom`.
      Matrix images = Matrix::Zero(A->dim(), dom.size());
      for (std::size_t k = 0; k < dom.size(); ++k) {
        images(f[dom[k]], k) = 1.0;
      }
      maps.emplace_back(std::move(source), std::move(target), std::move(images));
    }
    return std::make_shared<Action const>(theta.semigroup, A, std::move(maps));
  }

}  // namespace crossed
