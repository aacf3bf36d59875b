#ifndef CROSSED_INSTANCE_HPP_
#define CROSSED_INSTANCE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "crossed/representation.hpp"

namespace crossed {

  // A parsed instance file.
  //
  //   "semigroup": {"carrier": 2 | [labels], "generators": [{"name", "map": [[x, y], ...]}]}
  //              | {"names": [...], "table": [[...]], "star": [...]?}
  //   "algebra":   {"kind": "functions", "points": n | [labels]}
  //              | {"kind": "matrices", "blocks": [n, ...], "p": "1" | "2" | "inf"}
  //              | {"kind": "sum", "summands": [algebra, ...]}
  //   "action":    {"induced": true}
  //              | {"maps": {element: {"ideal": {"blocks": [...]} | {"basis": [vec], "unit": vec},
  //                                    "images": [vec, ...]}}}
  //   "representations": {id: {"regular": true, "p": ...}
  //                         | {"space": {"dim", "p"}, "pi": {label: matrix}, "v": {element: matrix}}}
  //   "elements": {id: [{"at": element, "coeffs": vec}, ...]}
  //
  // Scalars are numbers or [re, im]; matrices are lists of rows. Generated
  // semigroup elements are named by words such as "t.t*".
  struct Instance {
    SemigroupPtr                                      semigroup;
    std::optional<PartialSetAction>                   set_action;
    ActionPtr                                         action;
    std::vector<std::pair<std::string, CovariantRep>> representations;
    std::vector<std::pair<std::string, Ell1Element>>  elements;
    // The semigroup and algebra blocks as given; the serializer writes them
    // back unchanged since they determine names and labels.
    nlohmann::json semigroup_json;
    nlohmann::json algebra_json;

    CovariantRep const*  representation(std::string const& id) const;
    Ell1Element const*   element(std::string const& id) const;
    std::vector<CovariantRep> all_representations() const;
  };

  // Throws Error(ParseError) with line and column for malformed JSON or a
  // path for schema problems; axiom failures keep their own codes.
  Instance parse_instance(std::string const& text, std::size_t cap = 10000);
  Instance load_instance(std::string const& path, std::size_t cap = 10000);

  // Explicit form: actions, representations and elements are written out
  // as matrices, so re-parsing reproduces every table and matrix exactly.
  nlohmann::json serialize_instance(Instance const& inst);

  nlohmann::json scalar_to_json(Scalar z);
  nlohmann::json vector_to_json(Vector const& x);
  nlohmann::json matrix_to_json(Matrix const& m);

}  // namespace crossed

#endif  // CROSSED_INSTANCE_HPP_
