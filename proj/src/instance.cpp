#include "crossed/instance.hpp"

#include <fstream>
#include <sstream>

namespace crossed {

  using nlohmann::json;

  namespace {

    [[noreturn]] void schema_error(std::string const& path, std::string const& what) {
      throw Error(Errc::ParseError, path + ": " + what);
    }

    json const& require(json const& j, std::string const& key, std::string const& path) {
      if (!j.is_object() || !j.contains(key)) {
        schema_error(path, "missing key \"" + key + "\"");
      }
      return j.at(key);
    }

    json const& require_array(json const& j, std::string const& path) {
      if (!j.is_array()) {
        schema_error(path, "expected an array");
      }
      return j;
    }

    std::size_t to_size(json const& j, std::string const& path) {
      if (!j.is_number_integer() || j.get<long long>() < 0) {
        schema_error(path, "expected a non-negative integer");
      }
      return j.get<std::size_t>();
    }

    std::string to_string(json const& j, std::string const& path) {
      if (j.is_string()) {
        return j.get<std::string>();
      }
      if (j.is_number_integer()) {
        return std::to_string(j.get<long long>());
      }
      schema_error(path, "expected a string");
    }

    Scalar to_scalar(json const& j, std::string const& path) {
      if (j.is_number()) {
        return {j.get<double>(), 0.0};
      }
      if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
      }
      schema_error(path, "expected a number or [re, im]");
    }

    Vector to_vector(json const& j, std::size_t n, std::string const& path) {
      require_array(j, path);
      if (j.size() != n) {
        schema_error(path, "expected " + std::to_string(n) + " entries, got "
                               + std::to_string(j.size()));
      }
      Vector x(static_cast<Eigen::Index>(n));
      for (std::size_t k = 0; k < n; ++k) {
        x(static_cast<Eigen::Index>(k)) = to_scalar(j[k], path + "[" + std::to_string(k) + "]");
      }
      return x;
    }

    Matrix to_matrix(json const& j, std::size_t rows, std::size_t cols, std::string const& path) {
      require_array(j, path);
      if (j.size() != rows) {
        schema_error(path, "expected " + std::to_string(rows) + " rows");
      }
      Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
      for (std::size_t i = 0; i < rows; ++i) {
        m.row(static_cast<Eigen::Index>(i))
            = to_vector(j[i], cols, path + "[" + std::to_string(i) + "]").transpose();
      }
      return m;
    }

    PNorm to_pnorm(json const& j, std::string const& path) {
      try {
        return pnorm_from_string(to_string(j, path));
      } catch (Error const&) {
        schema_error(path, "p must be \"1\", \"2\" or \"inf\"");
      }
    }

    std::vector<std::string> labels_or_count(json const& j, std::string const& path) {
      std::vector<std::string> labels;
      if (j.is_number_integer()) {
        for (std::size_t k = 0; k < to_size(j, path); ++k) {
          labels.push_back(std::to_string(k + 1));
        }
        return labels;
      }
      require_array(j, path);
      for (std::size_t k = 0; k < j.size(); ++k) {
        labels.push_back(to_string(j[k], path + "[" + std::to_string(k) + "]"));
      }
      return labels;
    }

    std::size_t lookup(std::vector<std::string> const& labels,
                       json const&                     j,
                       std::string const&              path) {
      std::string name = to_string(j, path);
      for (std::size_t k = 0; k < labels.size(); ++k) {
        if (labels[k] == name) {
          return k;
        }
      }
      schema_error(path, "unknown label \"" + name + "\"");
    }

    Index element_index(InvSemigroup const& S, json const& j, std::string const& path) {
      std::string name = to_string(j, path);
      if (auto t = S.find(name)) {
        return *t;
      }
      schema_error(path, "unknown semigroup element \"" + name + "\"");
    }

    struct ParsedSemigroup {
      SemigroupPtr                    semigroup;
      std::optional<PartialSetAction> set_action;
      std::vector<std::string>        carrier;
    };

    ParsedSemigroup parse_semigroup(json const& j, std::size_t cap) {
      std::string const path = "semigroup";
      ParsedSemigroup   out;
      if (j.contains("generators")) {
        out.carrier = labels_or_count(require(j, "carrier", path), path + ".carrier");
        json const& gens = require_array(j.at("generators"), path + ".generators");
        std::vector<PartialBijection> maps;
        std::vector<std::string>      names;
        for (std::size_t g = 0; g < gens.size(); ++g) {
          std::string const gp = path + ".generators[" + std::to_string(g) + "]";
          names.push_back(to_string(require(gens[g], "name", gp), gp + ".name"));
          json const& graph = require_array(require(gens[g], "map", gp), gp + ".map");
          std::vector<std::pair<PartialBijection::point_type, PartialBijection::point_type>> pairs;
          for (std::size_t k = 0; k < graph.size(); ++k) {
            std::string const kp = gp + ".map[" + std::to_string(k) + "]";
            if (!graph[k].is_array() || graph[k].size() != 2) {
              schema_error(kp, "expected a pair [x, y]");
            }
            auto x = lookup(out.carrier, graph[k][0], kp + "[0]");
            auto y = lookup(out.carrier, graph[k][1], kp + "[1]");
            pairs.emplace_back(static_cast<PartialBijection::point_type>(x),
                               static_cast<PartialBijection::point_type>(y));
          }
          maps.emplace_back(out.carrier.size(), std::move(pairs));
        }
        out.semigroup = std::make_shared<InvSemigroup const>(generate_semigroup(maps, names, cap));
        out.set_action = PartialSetAction::tautological(out.semigroup);
        return out;
      }

      auto        names = labels_or_count(require(j, "names", path), path + ".names");
      json const& rows  = require_array(require(j, "table", path), path + ".table");
      std::size_t n     = names.size();
      if (rows.size() != n) {
        schema_error(path + ".table", "expected " + std::to_string(n) + " rows");
      }
      CayleyTable table{n, {}};
      for (std::size_t i = 0; i < n; ++i) {
        std::string const rp = path + ".table[" + std::to_string(i) + "]";
        if (!rows[i].is_array() || rows[i].size() != n) {
          schema_error(rp, "expected " + std::to_string(n) + " entries");
        }
        for (std::size_t k = 0; k < n; ++k) {
          std::string const ep = rp + "[" + std::to_string(k) + "]";
          table.entries.push_back(rows[i][k].is_string() ? lookup(names, rows[i][k], ep)
                                                         : to_size(rows[i][k], ep));
          if (table.entries.back() >= n) {
            schema_error(ep, "entry out of range");
          }
        }
      }
      std::optional<std::vector<Index>> star;
      if (j.contains("star")) {
        json const& st = require_array(j.at("star"), path + ".star");
        if (st.size() != n) {
          schema_error(path + ".star", "expected " + std::to_string(n) + " entries");
        }
        star.emplace();
        for (std::size_t k = 0; k < n; ++k) {
          std::string const ep = path + ".star[" + std::to_string(k) + "]";
          star->push_back(st[k].is_string() ? lookup(names, st[k], ep) : to_size(st[k], ep));
          if (star->back() >= n) {
            schema_error(ep, "entry out of range");
          }
        }
      }
      out.semigroup = std::make_shared<InvSemigroup const>(
          InvSemigroup::from_table(std::move(table), std::move(names), std::move(star)));
      return out;
    }

    FinAlgebra parse_algebra(json const& j, std::string const& path) {
      std::string kind = to_string(require(j, "kind", path), path + ".kind");
      if (kind == "functions") {
        return FinAlgebra::functions(labels_or_count(require(j, "points", path), path + ".points"));
      }
      if (kind == "matrices") {
        json const&              b = require_array(require(j, "blocks", path), path + ".blocks");
        std::vector<std::size_t> sizes;
        for (std::size_t k = 0; k < b.size(); ++k) {
          sizes.push_back(to_size(b[k], path + ".blocks[" + std::to_string(k) + "]"));
        }
        PNorm p = j.contains("p") ? to_pnorm(j.at("p"), path + ".p") : PNorm::two;
        return FinAlgebra::matrices(sizes, p);
      }
      if (kind == "sum") {
        json const& s = require_array(require(j, "summands", path), path + ".summands");
        std::vector<FinAlgebra> parts;
        for (std::size_t k = 0; k < s.size(); ++k) {
          parts.push_back(parse_algebra(s[k], path + ".summands[" + std::to_string(k) + "]"));
        }
        return FinAlgebra::direct_sum(parts);
      }
      schema_error(path + ".kind", "unknown algebra kind \"" + kind + "\"");
    }

    Ideal parse_ideal(AlgebraPtr const& A, json const& j, std::string const& path) {
      if (j.contains("blocks")) {
        json const&              b = require_array(j.at("blocks"), path + ".blocks");
        std::vector<std::size_t> blocks;
        for (std::size_t k = 0; k < b.size(); ++k) {
          blocks.push_back(to_size(b[k], path + ".blocks[" + std::to_string(k) + "]"));
          if (blocks.back() >= A->blocks().size()) {
            schema_error(path + ".blocks[" + std::to_string(k) + "]", "block out of range");
          }
        }
        return Ideal::from_blocks(A, std::move(blocks));
      }
      json const& cols = require_array(require(j, "basis", path), path + ".basis");
      Matrix      basis(static_cast<Eigen::Index>(A->dim()), static_cast<Eigen::Index>(cols.size()));
      for (std::size_t k = 0; k < cols.size(); ++k) {
        basis.col(static_cast<Eigen::Index>(k))
            = to_vector(cols[k], A->dim(), path + ".basis[" + std::to_string(k) + "]");
      }
      Vector unit = to_vector(require(j, "unit", path), A->dim(), path + ".unit");
      return Ideal(A, std::move(basis), std::move(unit));
    }

    ActionPtr parse_action(json const&            j,
                           ParsedSemigroup const& sg,
                           AlgebraPtr const&      A) {
      std::string const   path = "action";
      InvSemigroup const& S    = *sg.semigroup;
      if (j.value("induced", false)) {
        if (!sg.set_action) {
          schema_error(path + ".induced", "needs a semigroup given by generators");
        }
        return induce_from_partial_action(*sg.set_action, sg.carrier);
      }
      json const& maps = require(j, "maps", path);
      if (!maps.is_object()) {
        schema_error(path + ".maps", "expected an object keyed by element name");
      }
      std::vector<std::optional<Ideal>> ideals(S.size());
      for (auto const& [name, entry] : maps.items()) {
        std::string const mp = path + ".maps." + name;
        Index             t  = element_index(S, name, mp);
        ideals[t]            = parse_ideal(A, require(entry, "ideal", mp), mp + ".ideal");
      }
      std::vector<PartialAut> out;
      for (Index t = 0; t < S.size(); ++t) {
        std::string const mp = path + ".maps." + S.name(t);
        if (!ideals[t] || !ideals[S.star(t)]) {
          schema_error(mp, "missing map data");
        }
        Ideal const& source = *ideals[S.star(t)];
        json const&  imgs   = require_array(require(maps.at(S.name(t)), "images", mp), mp + ".images");
        if (imgs.size() != source.dim()) {
          schema_error(mp + ".images", "expected one image per basis vector of I_" + S.name(S.star(t)));
        }
        Matrix images(static_cast<Eigen::Index>(A->dim()), static_cast<Eigen::Index>(imgs.size()));
        for (std::size_t k = 0; k < imgs.size(); ++k) {
          images.col(static_cast<Eigen::Index>(k))
              = to_vector(imgs[k], A->dim(), mp + ".images[" + std::to_string(k) + "]");
        }
        out.emplace_back(source, *ideals[t], std::move(images));
      }
      return std::make_shared<Action const>(sg.semigroup, A, std::move(out));
    }

    std::vector<Matrix> keyed_matrices(json const&                     j,
                                       std::vector<std::string> const& keys,
                                       std::size_t                     n,
                                       std::string const&              path) {
      std::vector<Matrix> out;
      if (j.is_array()) {
        if (j.size() != keys.size()) {
          schema_error(path, "expected " + std::to_string(keys.size()) + " matrices");
        }
        for (std::size_t k = 0; k < keys.size(); ++k) {
          out.push_back(to_matrix(j[k], n, n, path + "[" + std::to_string(k) + "]"));
        }
        return out;
      }
      for (auto const& key : keys) {
        out.push_back(to_matrix(require(j, key, path), n, n, path + "." + key));
      }
      return out;
    }

    CovariantRep parse_representation(json const&                            j,
                                      ActionPtr const&                       action,
                                      std::optional<PartialSetAction> const& theta,
                                      std::string const&                     path) {
      if (j.value("regular", false)) {
        if (!theta || !action->algebra().is_function_algebra()) {
          schema_error(path, "regular representations need an induced action");
        }
        PNorm p = j.contains("p") ? to_pnorm(j.at("p"), path + ".p") : PNorm::two;
        return regular_rep(action, *theta, p);
      }
      json const& space = require(j, "space", path);
      ReprSpace   E{to_size(require(space, "dim", path + ".space"), path + ".space.dim"),
                  space.contains("p") ? to_pnorm(space.at("p"), path + ".space.p") : PNorm::two};
      InvSemigroup const&      S = action->semigroup();
      std::vector<std::string> names;
      for (Index t = 0; t < S.size(); ++t) {
        names.push_back(S.name(t));
      }
      return CovariantRep(
          action,
          E,
          keyed_matrices(require(j, "pi", path), action->algebra().basis_labels(), E.dim, path + ".pi"),
          keyed_matrices(require(j, "v", path), names, E.dim, path + ".v"));
    }

    Ell1Element parse_element(json const& j, ActionPtr const& action, std::string const& path) {
      require_array(j, path);
      Ell1Element f(action);
      for (std::size_t k = 0; k < j.size(); ++k) {
        std::string const tp = path + "[" + std::to_string(k) + "]";
        Index             t  = element_index(action->semigroup(), require(j[k], "at", tp), tp + ".at");
        Vector a = to_vector(require(j[k], "coeffs", tp), action->algebra().dim(), tp + ".coeffs");
        if (!action->ideal(t).contains(a)) {
          throw Error(Errc::NotInIdeal, tp + ": coefficients not in I_" + action->semigroup().name(t));
        }
        f.accumulate(t, a);
      }
      return f;
    }

    std::string line_column(std::string const& text, std::size_t byte) {
      std::size_t line = 1, col = 1;
      for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return "line " + std::to_string(line) + ", column " + std::to_string(col);
    }

  }  // namespace

  CovariantRep const* Instance::representation(std::string const& id) const {
    for (auto const& [name, r] : representations) {
      if (name == id) {
        return &r;
      }
    }
    return nullptr;
  }

  Ell1Element const* Instance::element(std::string const& id) const {
    for (auto const& [name, f] : elements) {
      if (name == id) {
        return &f;
      }
    }
    return nullptr;
  }

  std::vector<CovariantRep> Instance::all_representations() const {
    std::vector<CovariantRep> out;
    for (auto const& entry : representations) {
      out.push_back(entry.second);
    }
    return out;
  }

  Instance parse_instance(std::string const& text, std::size_t cap) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      throw Error(Errc::ParseError, line_column(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) {
      schema_error("$", "expected an object");
    }
    for (auto const& [key, value] : doc.items()) {
      if (key != "semigroup" && key != "algebra" && key != "action" && key != "representations"
          && key != "elements") {
        schema_error("$", "unknown key \"" + key + "\"");
      }
    }

    Instance inst;
    try {
      inst.semigroup_json = require(doc, "semigroup", "$");
      ParsedSemigroup sg  = parse_semigroup(inst.semigroup_json, cap);
      inst.semigroup      = sg.semigroup;
      inst.set_action     = sg.set_action;

      json const& action_json = require(doc, "action", "$");
      if (doc.contains("algebra")) {
        inst.algebra_json = doc.at("algebra");
      } else if (action_json.value("induced", false)) {
        inst.algebra_json = {{"kind", "functions"}, {"points", sg.carrier}};
      } else {
        schema_error("$", "missing key \"algebra\"");
      }
      auto A = std::make_shared<FinAlgebra const>(parse_algebra(inst.algebra_json, "algebra"));
      if (action_json.value("induced", false)
          && (!A->is_function_algebra() || A->basis_labels() != sg.carrier)) {
        schema_error("algebra", "an induced action needs the function algebra on the carrier");
      }
      inst.action = parse_action(action_json, sg, A);

      if (doc.contains("representations")) {
        json const& reps = doc.at("representations");
        if (!reps.is_object()) {
          schema_error("representations", "expected an object keyed by id");
        }
        for (auto const& [id, r] : reps.items()) {
          inst.representations.emplace_back(
              id, parse_representation(r, inst.action, inst.set_action, "representations." + id));
        }
      }
      if (doc.contains("elements")) {
        json const& els = doc.at("elements");
        if (!els.is_object()) {
          schema_error("elements", "expected an object keyed by id");
        }
        for (auto const& [id, f] : els.items()) {
          inst.elements.emplace_back(id, parse_element(f, inst.action, "elements." + id));
        }
      }
    } catch (json::exception const& e) {
      throw Error(Errc::ParseError, e.what());
    }
    return inst;
  }

  Instance load_instance(std::string const& path, std::size_t cap) {
    std::ifstream in(path);
    if (!in) {
      throw Error(Errc::ParseError, "cannot read " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str(), cap);
  }

  json scalar_to_json(Scalar z) {
    return json::array({z.real(), z.imag()});
  }

  json vector_to_json(Vector const& x) {
    json out = json::array();
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      out.push_back(scalar_to_json(x(k)));
    }
    return out;
  }

  json matrix_to_json(Matrix const& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out.push_back(vector_to_json(m.row(i).transpose()));
    }
    return out;
  }

  json serialize_instance(Instance const& inst) {
    InvSemigroup const& S = inst.action->semigroup();
    FinAlgebra const&   A = inst.action->algebra();
    json                doc;
    doc["semigroup"] = inst.semigroup_json;
    doc["algebra"]   = inst.algebra_json;

    json maps = json::object();
    for (Index t = 0; t < S.size(); ++t) {
      PartialAut const& alpha = inst.action->alpha(t);
      json              basis = json::array();
      for (Eigen::Index k = 0; k < alpha.target().basis().cols(); ++k) {
        basis.push_back(vector_to_json(alpha.target().basis().col(k)));
      }
      json images = json::array();
      for (Eigen::Index k = 0; k < alpha.images().cols(); ++k) {
        images.push_back(vector_to_json(alpha.images().col(k)));
      }
      maps[S.name(t)] = {{"ideal", {{"basis", basis}, {"unit", vector_to_json(alpha.target().unit())}}},
                         {"images", images}};
    }
    doc["action"] = {{"maps", maps}};

    json reps = json::object();
    for (auto const& [id, r] : inst.representations) {
      json pi = json::object(), v = json::object();
      for (std::size_t k = 0; k < A.dim(); ++k) {
        pi[A.basis_labels()[k]] = matrix_to_json(r.pi_basis()[k]);
      }
      for (Index t = 0; t < S.size(); ++t) {
        v[S.name(t)] = matrix_to_json(r.v(t));
      }
      reps[id] = {{"space", {{"dim", r.space().dim}, {"p", pnorm_name(r.space().p)}}},
                  {"pi", pi},
                  {"v", v}};
    }
    doc["representations"] = reps;

    json els = json::object();
    for (auto const& [id, f] : inst.elements) {
      json terms = json::array();
      for (Index t = 0; t < S.size(); ++t) {
        if (!f[t].isZero(0.0)) {
          terms.push_back({{"at", S.name(t)}, {"coeffs", vector_to_json(f[t])}});
        }
      }
      els[id] = terms;
    }
    doc["elements"] = els;
    return doc;
  }

}  // namespace crossed
