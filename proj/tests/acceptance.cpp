#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace crossed;
using fixtures::delta;
using fixtures::element;

namespace {

  // Collects failed conditions; the criterion passes when none failed.
  struct Verdict {
    std::vector<std::string> failures;
    std::ostringstream       detail;

    void require(bool ok, std::string const& what) {
      if (!ok) {
        failures.push_back(what);
      }
    }
  };

  double vdiff(CovariantRep const& a, CovariantRep const& b) {
    double d = 0.0;
    for (std::size_t t = 0; t < a.v().size(); ++t) {
      d = std::max(d, fixtures::max_abs(a.v(t) - b.v(t)));
    }
    return d;
  }

  void semigroups(Verdict& v) {
    v.require(fixtures::flip().action->semigroup().size() == 5, "FLIP has 5 elements");
    v.require(fixtures::sim2().action->semigroup().size() == 7, "transposition and id_{1} give 7");
    v.require(oracles::symmetric_inverse_monoid_size(2) == 7, "counting formula at n = 2");
    std::size_t instances = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto gens = oracles::sim_generators(n);
      auto S    = generate_semigroup(gens);
      v.require(S.size() == oracles::symmetric_inverse_monoid_size(n), "counting formula");
      v.require(S.size() == oracles::closure(gens).size(), "closure oracle");
      v.require(oracles::inverse_axioms_hold(S), "star uniqueness and commuting idempotents");
      ++instances;
    }
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t                   n = 1 + rng() % 4;
      std::vector<PartialBijection> gens;
      for (std::size_t g = 0; g < 1 + rng() % 3; ++g) {
        std::vector<PartialBijection::point_type> perm(n);
        for (std::size_t x = 0; x < n; ++x) {
          perm[x] = static_cast<PartialBijection::point_type>(x);
        }
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto& x : perm) {
          if (rng() % 3 == 0) {
            x = PartialBijection::undefined;
          }
        }
        gens.push_back(PartialBijection::from_images(perm));
      }
      auto S = generate_semigroup(gens);
      v.require(S.size() == oracles::closure(gens).size(), "closure oracle on random generators");
      v.require(oracles::inverse_axioms_hold(S), "inverse axioms on random generators");
      ++instances;
    }
    v.detail << instances << " generated instances, sizes 2, 7, 34, 209 for the full monoids";
  }

  void actions(Verdict& v) {
    for (auto const& F : {fixtures::flip(), fixtures::semi()}) {
      v.require(validate_action(*F.action).ok(), F.name + " passes validate_action");
    }
    for (auto const& F : fixtures::all()) {
      Report d = derived_identities_check(*F.action);
      v.require(d.ok() && d.checks().size() == 5, F.name + " derived identities");
    }
    auto                    F    = fixtures::flip();
    Index                   t    = element(*F.action, "t");
    Index                   e1   = element(*F.action, "t*.t");
    std::vector<PartialAut> maps = F.action->maps();
    maps[t] = PartialAut(maps[t].source(), maps[t].target(), 2.0 * delta(2, 2));
    Action scaled(F.action->semigroup_ptr(), F.action->algebra_ptr(), maps);
    v.require(validate_action(scaled).has(Errc::NotIsometric), "scaled map gives NotIsometric");

    maps        = F.action->maps();
    Ideal zero  = Ideal::zero(F.action->algebra_ptr());
    maps[e1]    = PartialAut(zero, zero, Matrix::Zero(2, 0));
    Action deleted(F.action->semigroup_ptr(), F.action->algebra_ptr(), maps);
    v.require(validate_action(deleted).has(Errc::PA2SpanDeficit), "deleted ideal gives PA2SpanDeficit");
    v.detail << "FLIP and SEMI valid, 4 fixtures x 5 identities, NotIsometric and PA2SpanDeficit on mutations";
  }

  void convolution_laws(Verdict& v) {
    std::mt19937_64 rng(2);
    double          worst = 0.0;
    for (auto const& F : fixtures::all()) {
      for (int k = 0; k < 500; ++k) {
        auto f = fixtures::random_element(F.action, rng);
        auto g = fixtures::random_element(F.action, rng);
        auto h = fixtures::random_element(F.action, rng);
        double assoc = convolve(convolve(f, g), h).distance(convolve(f, convolve(g, h)));
        double sub   = ell1_norm(convolve(f, g)) - ell1_norm(f) * ell1_norm(g);
        double star2 = involution(involution(f)).distance(f);
        double anti  = involution(convolve(f, g)).distance(convolve(involution(g), involution(f)));
        double iso   = std::abs(ell1_norm(involution(f)) - ell1_norm(f));
        worst        = std::max({worst, assoc, sub, star2, anti, iso});
        v.require(assoc <= 1e-9, F.name + " associativity");
        v.require(sub <= 1e-9, F.name + " submultiplicativity");
        v.require(star2 <= 1e-9 && anti <= 1e-9 && iso <= 1e-9, F.name + " star laws");
      }
    }
    v.detail << "4 x 500 triples, largest deviation " << worst;
  }

  void null_quotient(Verdict& v) {
    std::vector<fixtures::Fixture> fx        = {fixtures::flip(), fixtures::semi(), fixtures::sim2()};
    std::vector<std::size_t>       null_dims = {0, 1, 4}, quotient_dims = {4, 2, 4};
    for (std::size_t i = 0; i < fx.size(); ++i) {
      Ell1Space space(fx[i].action);
      NullIdeal N = null_ideal(space);
      auto      Q = quotient_algebra(space, N.basis);
      v.require(N.dim() == null_dims[i], fx[i].name + " dim Null");
      v.require(Q.dim == quotient_dims[i], fx[i].name + " quotient dimension");
      if (i == 2) {
        auto K = seminorm_kernel({fixtures::regular(fx[i])}, space, N.basis, 1e-9);
        v.require(same_span(K.basis, N.basis, 1e-9), "SIM2 regular kernel equals Null");
      }
    }
    v.detail << "Null 0, 1, 4; quotients 4, 2, 4; SIM2 kernel = Null";
  }

  void representations(Verdict& v) {
    std::mt19937_64 rng(3);
    std::size_t     perturbed = 0;
    for (auto const& F : fixtures::all()) {
      auto r = fixtures::regular(F);
      v.require(check_spatial(r).ok(), F.name + " REG is spatial");
      v.require(check_algebraic(r).ok(), F.name + " REG is algebraic");
      auto const& S = F.action->semigroup();
      auto        n = normalize(r);
      v.require(vdiff(normalize(n), n) < 1e-12, F.name + " normalize idempotent");
      for (Index s = 0; s < S.size(); ++s) {
        for (Index t = 0; t < S.size(); ++t) {
          v.require(fixtures::max_abs(n.v(s) * n.v(t) - n.v(S.product(s, t))) < 1e-9,
                    F.name + " normalized v is a semigroup homomorphism");
        }
      }
      for (Index e : S.idempotents()) {
        v.require(fixtures::max_abs(n.v(e) - fixtures::unit_projection(r, e)) < 1e-9,
                  F.name + " normalized v_e = pi(1_e)");
      }
      for (int k = 0; k < 100; ++k) {
        auto w = fixtures::perturb(r, rng);
        v.require(check_algebraic(w).ok(), F.name + " perturbation keeps CR1-CR3");
        bool spatial = check_spatial(w).ok();
        v.require(!spatial || check_algebraic(w).ok(), F.name + " spatial implies algebraic");
        v.require(spatial == is_normalized(w), F.name + " spatial iff algebraic and normalized");
        auto m = normalize(w);
        v.require(vdiff(m, n) < 1e-9, F.name + " uniqueness of the normalization");
        for (Index t = 0; t < S.size(); ++t) {
          Matrix const& B = F.action->ideal(t).basis();
          for (Eigen::Index c = 0; c < B.cols(); ++c) {
            Matrix pa = r.pi(B.col(c));
            v.require(fixtures::max_abs(pa * w.v(t) - pa * m.v(t)) < 1e-9,
                      F.name + " pi(a)v_t = pi(a)normalized v_t");
          }
        }
        ++perturbed;
      }
    }
    v.detail << "4 regular reps, " << perturbed << " perturbations";
  }

  void integration(Verdict& v) {
    for (auto const& F : fixtures::all()) {
      auto      r = fixtures::regular(F);
      Ell1Space space(F.action);
      NullIdeal N = null_ideal(space);
      Report    c = integration_check(r, space, N.basis, 500, 1e-9, 4);
      v.require(c.ok(), F.name + " integration\n" + c.to_string());
    }
    v.detail << "4 x 500 pairs, Null basis in every kernel";
  }

  void adjoints(Verdict& v) {
    std::size_t bases = 0;
    for (auto const& F : fixtures::all()) {
      Report a = adjoint_check(fixtures::regular(F), 100, 1e-9, 5);
      v.require(a.ok(), F.name + " adjoint\n" + a.to_string());
      for (Index t = 0; t < F.action->semigroup().size(); ++t) {
        bases += F.action->ideal(t).dim();
      }
    }
    v.detail << bases << " ideal basis vectors, 4 x 100 random elements";
  }

  void group_case(Verdict& v) {
    auto      Z = fixtures::z2();
    Ell1Space space(Z.action);
    auto      r = fixtures::regular(Z);
    Report    g = group_case_check(space, &r, 1e-9);
    v.require(g.ok(), "Z/2 group case\n" + g.to_string());
    Check const* conv = g.find("group convolution formula");
    v.require(conv != nullptr && conv->checked == 16, "16 basis pairs");
    v.detail << "16 basis pairs (" << (conv ? conv->note : "") << "), v_g invertible isometries";
  }

  void quotient_norm(Verdict& v) {
    auto      F = fixtures::semi();
    Ell1Space space(F.action);
    NullIdeal N = null_ideal(space);
    auto      a = Ell1Element::monomial(F.action, element(*F.action, "1"), delta(2, 1));
    auto      q = quotient_ell1_norm(a, space, N.basis);
    v.require(std::abs(q.value - 1.0) <= 0.002, "SEMI coset of delta_1 delta_1 has norm 1");
    v.require(q.lower_bound <= q.value + 1e-12, "LP value is a lower bound");
    v.detail.precision(12);
    v.detail << "value " << q.value << ", LP bound " << q.lower_bound << ", polygon bound "
             << (1.0 / std::cos(std::numbers::pi / kModulusFacets) - 1.0) * 100.0 << "%";
  }

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  struct Criterion {
    int                           number;
    char const*                   title;
    std::function<void(Verdict&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "semigroup generation", semigroups},
      {2, "action axioms", actions},
      {3, "convolution laws", convolution_laws},
      {4, "Null and quotient", null_quotient},
      {5, "representation suite", representations},
      {6, "integration", integration},
      {7, "C*-checks", adjoints},
      {8, "group case", group_case},
      {9, "quotient norm", quotient_norm},
  };
  auto start  = clock::now();
  int  failed = 0;
  for (auto const& c : criteria) {
    Verdict v;
    auto    t0 = clock::now();
    try {
      c.run(v);
    } catch (std::exception const& e) {
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    bool   ok   = v.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s criterion %d: %s (%s; %.2f s)\n", ok ? "PASS" : "FAIL", c.number, c.title,
                v.detail.str().c_str(), secs);
    for (std::size_t k = 0; k < v.failures.size() && k < 5; ++k) {
      std::printf("  failed: %s\n", v.failures[k].c_str());
    }
  }
  double total = std::chrono::duration<double>(clock::now() - start).count();
  bool   fast  = total < 60.0;
  std::printf("%s total time %.2f s (limit 60 s)\n", fast ? "PASS" : "FAIL", total);
  return failed == 0 && fast ? 0 : 1;
}
