// crossed: validate instance files and build crossed-product data.
//
//   crossed validate FILE
//   crossed build FILE [--null] [--quotient] [--seminorm ID...]
//   crossed eval FILE EXPRESSION
//   crossed report FILE
//
// Exit codes: 0 ok, 1 axiom failure, 2 parse or schema error.

#include <CLI11.hpp>
#include <iostream>

#include "crossed/expression.hpp"

using namespace crossed;
using nlohmann::json;

namespace {

  struct Options {
    std::string              file;
    std::string              expression;
    std::uint64_t            seed = 0;
    double                   tol  = kDefaultTol;
    std::size_t              cap  = kDefaultSizeCap;
    bool                     json = false;
    bool                     null = false;
    bool                     quotient = false;
    std::vector<std::string> seminorm;
  };

  json report_json(Report const& r) {
    json checks = json::array();
    for (auto const& c : r.checks()) {
      json j = {{"name", c.name}, {"code", errc_name(c.code)}, {"checked", c.checked},
                {"failed", c.failed}, {"ok", c.ok()}};
      if (!c.ok()) {
        j["witness"] = c.witness;
      }
      if (!c.note.empty()) {
        j["note"] = c.note;
      }
      checks.push_back(j);
    }
    return {{"ok", r.ok()}, {"checks", checks}, {"notes", r.notes()}};
  }

  std::string vector_text(Vector const& x, Ell1Space const& space, double tol) {
    std::string out;
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      if (std::abs(x(k)) > tol) {
        out += (out.empty() ? "" : " + ") + format_scalar(x(k)) + " "
               + space.coordinate_label(static_cast<std::size_t>(k));
      }
    }
    return out.empty() ? "0" : out;
  }

  // Semigroup summary, validate_inverse, validate_action, derived identities.
  Report validation(Instance const& inst, Options const& o, json& out) {
    InvSemigroup const& S = *inst.semigroup;
    validate_inverse(S.table());
    Report report = validate_action(*inst.action, o.tol, o.seed);
    report.merge(derived_identities_check(*inst.action, o.tol));

    std::string zero = S.zero() ? S.name(*S.zero()) : "none";
    out["semigroup"] = {{"size", S.size()},
                        {"idempotents", S.idempotents().size()},
                        {"zero", zero},
                        {"group", S.is_group()},
                        {"star_reconstructed", S.star_reconstructed()}};
    out["algebra"] = inst.action->algebra().describe();
    out["validation"] = report_json(report);
    if (!o.json) {
      std::cout << "semigroup: " << S.size() << " elements, " << S.idempotents().size()
                << " idempotents, zero " << zero << (S.is_group() ? ", group" : "") << "\n";
      std::cout << "inverse semigroup axioms: pass"
                << (S.star_reconstructed() ? " (star reconstructed from the table)" : "") << "\n";
      std::cout << "algebra: " << inst.action->algebra().describe() << "\n";
      std::cout << report.to_string();
    }
    return report;
  }

  int cmd_validate(Instance const& inst, Options const& o) {
    json   out;
    Report r = validation(inst, o, out);
    if (o.json) {
      std::cout << out.dump(2) << "\n";
    }
    return r.ok() ? 0 : 1;
  }

  // Returns false if a construction check failed.
  bool construction(Instance const& inst, Options const& o, bool all, json& out) {
    Ell1Space       space(inst.action, o.tol);
    NullIdeal       null = null_ideal(space, o.tol);
    QuotientAlgebra q    = quotient_algebra(space, null.basis, o.tol);
    bool            ok   = true;

    out["dim_l1"]       = space.dim();
    out["dim_null"]     = null.dim();
    out["dim_null_products_only"] = null.products_basis.cols();
    out["dim_quotient"] = q.dim;
    if (!o.json) {
      std::cout << "dim ℓ¹(α)=" << space.dim() << ", dim Null=" << null.dim()
                << ", dim quotient=" << q.dim << "\n";
    }

    if (o.null || all) {
      json basis = json::array();
      for (Eigen::Index k = 0; k < null.basis.cols(); ++k) {
        basis.push_back(vector_to_json(null.basis.col(k)));
      }
      out["null_basis"] = basis;
      out["null_saturation_rounds"] = null.saturation_rounds;
      if (!o.json) {
        std::cout << "Null: " << null.generators.cols() << " generating differences, "
                  << null.saturation_rounds << " saturation rounds, products-only span has dimension "
                  << null.products_basis.cols() << "\n";
        for (Eigen::Index k = 0; k < null.basis.cols(); ++k) {
          std::cout << "  n" << k << " = " << vector_text(null.basis.col(k), space, o.tol) << "\n";
        }
      }
    }

    if (o.quotient || all) {
      json pivots = json::array(), structure = json::array();
      for (auto p : q.pivots) {
        pivots.push_back(space.coordinate_label(p));
      }
      for (auto const& c : q.structure) {
        structure.push_back(vector_to_json(c));
      }
      out["quotient_basis"]     = pivots;
      out["quotient_structure"] = structure;
      if (!o.json) {
        std::cout << "quotient basis (cosets of):";
        for (auto p : q.pivots) {
          std::cout << " " << space.coordinate_label(p);
        }
        std::cout << "\n";
        for (std::size_t i = 0; i < q.dim; ++i) {
          for (std::size_t j = 0; j < q.dim; ++j) {
            Vector const& c = q.structure[i * q.dim + j];
            if (c.cwiseAbs().maxCoeff() <= o.tol) {
              continue;
            }
            std::cout << "  q" << i << " * q" << j << " =";
            for (std::size_t k = 0; k < q.dim; ++k) {
              if (std::abs(c(static_cast<Eigen::Index>(k))) > o.tol) {
                std::cout << " " << format_scalar(c(static_cast<Eigen::Index>(k))) << " q" << k;
              }
            }
            std::cout << "\n";
          }
        }
      }
    }

    std::vector<std::string> ids = o.seminorm;
    if (all && ids.empty()) {
      for (auto const& entry : inst.representations) {
        ids.push_back(entry.first);
      }
    }
    if (!ids.empty()) {
      std::vector<CovariantRep> family;
      for (auto const& id : ids) {
        auto const* r = inst.representation(id);
        if (r == nullptr) {
          throw Error(Errc::ParseError, "unknown representation \"" + id + "\"");
        }
        family.push_back(*r);
      }
      SeminormKernel k = seminorm_kernel(family, space, null.basis, o.tol);
      bool equal = k.dim() == null.dim() && span_contains(null.basis, k.basis, o.tol);
      out["seminorm"] = {{"family", ids},
                         {"dim_kernel", k.dim()},
                         {"dim_crossed_product", space.dim() - k.dim()},
                         {"null_in_kernel", k.contains_null},
                         {"kernel_equals_null", equal}};
      if (!o.json) {
        std::cout << "kernel=" << k.dim() << ", ℛ-crossed product dim=" << space.dim() - k.dim()
                  << "\n";
        std::cout << "Null ⊆ kernel: " << (k.contains_null ? "yes" : "no")
                  << ", kernel = Null: " << (equal ? "yes" : "no") << "\n";
      }
    }

    if (inst.semigroup->is_group()) {
      CovariantRep const* r = inst.representations.empty() ? nullptr
                                                           : &inst.representations.front().second;
      Report g = group_case_check(space, r, o.tol);
      out["group_case"] = report_json(g);
      ok = ok && g.ok();
      if (!o.json) {
        std::cout << "group case:\n" << g.to_string();
      }
    }
    return ok;
  }

  int cmd_build(Instance const& inst, Options const& o) {
    json out;
    bool ok = construction(inst, o, false, out);
    if (o.json) {
      std::cout << out.dump(2) << "\n";
    }
    return ok ? 0 : 1;
  }

  int cmd_eval(Instance const& inst, Options const& o) {
    EvalContext ctx(inst, o.tol);
    Value       v    = evaluate(o.expression, ctx);
    std::string text = format_value(v, ctx);
    if (o.json) {
      json out = {{"expression", o.expression}, {"value", text}};
      if (auto const* z = std::get_if<Scalar>(&v)) {
        out["scalar"] = scalar_to_json(*z);
      } else {
        out["coordinates"] = vector_to_json(ctx.space().coordinates(std::get<Ell1Element>(v)));
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << text << "\n";
    }
    return 0;
  }

  int cmd_report(Instance const& inst, Options const& o) {
    json out;
    bool ok = validation(inst, o, out).ok();
    if (!ok) {
      if (o.json) {
        std::cout << out.dump(2) << "\n";
      }
      return 1;
    }
    ok = construction(inst, o, true, out) && ok;

    Ell1Space space(inst.action, o.tol);
    NullIdeal null = null_ideal(space, o.tol);
    json      reps = json::object();
    for (auto const& [id, r] : inst.representations) {
      json   rj;
      Report alg = check_algebraic(r, o.tol, o.seed);
      Report sp  = check_spatial(r, o.tol, o.seed);
      rj["algebraic"] = report_json(alg);
      rj["spatial"]   = report_json(sp);
      bool normalized = alg.ok() && is_normalized(r, o.tol);
      rj["classification"] = sp.ok() ? "spatial" : alg.ok() ? "algebraic" : "none";
      rj["normalized"]     = normalized;
      if (!o.json) {
        std::cout << "\n[representation " << id << "] dim " << r.space().dim << ", p = "
                  << pnorm_name(r.space().p) << "\n";
        std::cout << "algebraic checks:\n" << alg.to_string();
        std::cout << "spatial checks:\n" << sp.to_string();
        std::cout << "classification: " << rj["classification"].get<std::string>()
                  << (normalized ? ", normalized" : "") << "\n";
      }
      ok = ok && alg.ok();
      if (alg.ok()) {
        CovariantRep n    = normalize(r, o.tol);
        Report       norm = normalization_check(r, n, o.tol);
        Report       integ = integration_check(r, space, null.basis, 100, o.tol, o.seed);
        Report       grad  = grading_check(r, o.tol);
        rj["normalization"] = report_json(norm);
        rj["integration"]   = report_json(integ);
        rj["grading"]       = report_json(grad);
        ok = ok && norm.ok() && integ.ok() && grad.ok();
        if (!o.json) {
          std::cout << "normalization:\n" << norm.to_string();
          std::cout << "integration:\n" << integ.to_string();
          std::cout << "grading:\n" << grad.to_string();
        }
        if (r.space().p == PNorm::two && inst.action->algebra().has_star()) {
          Report adj = adjoint_check(n, 100, o.tol, o.seed);
          rj["adjoint"] = report_json(adj);
          ok = ok && adj.ok();
          if (!o.json) {
            std::cout << "adjoint (normalized):\n" << adj.to_string();
          }
        }
      }
      reps[id] = rj;
    }
    out["representations"] = reps;
    if (o.json) {
      std::cout << out.dump(2) << "\n";
    }
    return ok ? 0 : 1;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse semigroup actions and their crossed products"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--tol", o.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--cap", o.cap, "maximum semigroup size")->capture_default_str();
  app.add_flag("--json", o.json, "machine-readable output");

  auto* validate = app.add_subcommand("validate", "check the semigroup and action axioms");
  auto* build    = app.add_subcommand("build", "construct ℓ¹(α), Null, quotients and kernels");
  auto* eval     = app.add_subcommand("eval", "evaluate an expression over element literals");
  auto* report   = app.add_subcommand("report", "run every check and construction");
  for (auto* sub : {validate, build, eval, report}) {
    sub->add_option("file", o.file, "instance file (JSON)")->required();
    sub->fallthrough();
  }
  eval->add_option("expression", o.expression, "expression")->required();
  build->add_flag("--null", o.null, "print a basis of Null");
  build->add_flag("--quotient", o.quotient, "print the quotient structure constants");
  build->add_option("--seminorm", o.seminorm, "representation ids for the seminorm kernel");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Instance inst = load_instance(o.file, o.cap);
    if (*validate) {
      return cmd_validate(inst, o);
    }
    if (*build) {
      return cmd_build(inst, o);
    }
    if (*eval) {
      return cmd_eval(inst, o);
    }
    return cmd_report(inst, o);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::ParseError || e.code() == Errc::EvalError ? 2 : 1;
  }
}
