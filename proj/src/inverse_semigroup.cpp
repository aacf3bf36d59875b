#include "crossed/inverse_semigroup.hpp"

#include <algorithm>

#include "crossed/errors.hpp"

namespace crossed {

  namespace {
    std::string pair_str(Index i, Index j) {
      return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
    }
  }  // namespace

  std::vector<Index> validate_inverse(CayleyTable const& table) {
    std::size_t const n = table.size;
    if (table.entries.size() != n * n) {
      throw Error(Errc::DimensionMismatch, "table is not square");
    }
    for (auto x : table.entries) {
      if (x >= n) {
        throw Error(Errc::DimensionMismatch, "table entry out of range");
      }
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        Index ab = table(a, b);
        for (Index c = 0; c < n; ++c) {
          if (table(ab, c) != table(a, table(b, c))) {
            throw Error(Errc::NotAssociative,
                        "(ab)c != a(bc) at a=" + std::to_string(a)
                            + ", b=" + std::to_string(b)
                            + ", c=" + std::to_string(c));
          }
        }
      }
    }
    std::vector<Index> star(n);
    for (Index t = 0; t < n; ++t) {
      std::vector<Index> candidates;
      for (Index x = 0; x < n; ++x) {
        if (table(table(t, x), t) == t && table(table(x, t), x) == x) {
          candidates.push_back(x);
        }
      }
      if (candidates.empty()) {
        throw Error(Errc::NoGeneralizedInverse,
                    "element " + std::to_string(t) + " has no generalized inverse");
      }
      if (candidates.size() > 1) {
        throw Error(Errc::NonUniqueInverse,
                    "element " + std::to_string(t) + " has "
                        + std::to_string(candidates.size())
                        + " generalized inverses");
      }
      star[t] = candidates.front();
    }
    // Redundant given uniqueness, kept as a cross-check.
    std::vector<Index> idem;
    for (Index e = 0; e < n; ++e) {
      if (table(e, e) == e) {
        idem.push_back(e);
      }
    }
    for (auto e : idem) {
      for (auto f : idem) {
        if (table(e, f) != table(f, e)) {
          throw Error(Errc::IdempotentsDoNotCommute, pair_str(e, f));
        }
      }
    }
    return star;
  }

  InvSemigroup InvSemigroup::from_table(CayleyTable                       table,
                                        std::vector<std::string>          names,
                                        std::optional<std::vector<Index>> star) {
    auto         reconstructed = validate_inverse(table);
    InvSemigroup S;
    if (star.has_value()) {
      if (*star != reconstructed) {
        throw Error(Errc::NonUniqueInverse,
                    "supplied star map disagrees with the unique generalized "
                    "inverses");
      }
    } else {
      S._star_reconstructed = true;
    }
    if (names.empty()) {
      for (Index i = 0; i < table.size; ++i) {
        names.push_back(std::to_string(i));
      }
    }
    if (names.size() != table.size) {
      throw Error(Errc::DimensionMismatch, "wrong number of element names");
    }
    S._table = std::move(table);
    S._star  = std::move(reconstructed);
    S._names = std::move(names);
    S.init_derived();
    return S;
  }

  void InvSemigroup::init_derived() {
    std::size_t const n = _table.size;
    _is_idempotent.assign(n, false);
    _idempotents.clear();
    for (Index e = 0; e < n; ++e) {
      if (_table(e, e) == e) {
        _is_idempotent[e] = true;
        _idempotents.push_back(e);
      }
    }
    _zero.reset();
    for (Index z = 0; z < n && !_zero; ++z) {
      bool is_zero = true;
      for (Index t = 0; t < n && is_zero; ++t) {
        is_zero = _table(z, t) == z && _table(t, z) == z;
      }
      if (is_zero) {
        _zero = z;
      }
    }
  }

  std::optional<Index> InvSemigroup::find(std::string const& name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<Index>(it - _names.begin());
  }

  std::optional<Index> InvSemigroup::find(PartialBijection const& f) const {
    auto it = _lookup.find(f);
    if (it == _lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  InvSemigroup generate_semigroup(std::span<PartialBijection const> generators,
                                  std::span<std::string const>      generator_names,
                                  std::size_t                       cap) {
    if (generators.empty()) {
      throw Error(Errc::DimensionMismatch, "empty generator list");
    }
    if (generator_names.size() != generators.size()) {
      throw Error(Errc::DimensionMismatch, "one name per generator required");
    }
    std::size_t const degree = generators.front().degree();
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw Error(Errc::CarrierMismatch, "generators act on different carriers");
      }
    }

    InvSemigroup S;
    auto add = [&](PartialBijection const& f, std::string const& name) -> Index {
      auto [it, inserted] = S._lookup.emplace(f, S._elements.size());
      if (inserted) {
        if (S._elements.size() == cap) {
          throw Error(Errc::SizeCapExceeded,
                      "more than " + std::to_string(cap) + " elements");
        }
        S._elements.push_back(f);
        S._names.push_back(name);
      }
      return it->second;
    };

    // Letters: generators and their inverses, without repeats.
    std::vector<Index> letters;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      for (auto const& [f, name] :
           {std::pair{generators[i], generator_names[i]},
            std::pair{inverse(generators[i]), generator_names[i] + "*"}}) {
        Index k = add(f, name);
        if (std::find(letters.begin(), letters.end(), k) == letters.end()) {
          letters.push_back(k);
        }
      }
    }

    // Right Cayley graph, then the full table from compositions.
    for (Index i = 0; i < S._elements.size(); ++i) {
      for (auto l : letters) {
        PartialBijection p = compose(S._elements[i], S._elements[l]);
        add(p, S._names[i] + "." + S._names[l]);
      }
    }

    std::size_t const n = S._elements.size();
    S._table.size       = n;
    S._table.entries.resize(n * n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        S._table.entries[i * n + j]
            = S._lookup.at(compose(S._elements[i], S._elements[j]));
      }
    }
    S._star.resize(n);
    for (Index i = 0; i < n; ++i) {
      S._star[i] = S._lookup.at(inverse(S._elements[i]));
    }
    S.init_derived();
    // The zero of a semigroup of partial bijections is the empty map.
    if (S._zero && S._elements[*S._zero].rank() != 0) {
      S._zero.reset();
    }
    return S;
  }

  InvSemigroup generate_semigroup(std::span<PartialBijection const> generators,
                                  std::size_t                       cap) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      names.push_back("g" + std::to_string(i));
    }
    return generate_semigroup(generators, names, cap);
  }

  std::vector<std::pair<Index, Index>> natural_order(InvSemigroup const& S) {
    std::vector<std::pair<Index, Index>> result;
    for (Index s = 0; s < S.size(); ++s) {
      for (Index t = 0; t < S.size(); ++t) {
        if (S.leq(s, t)) {
          result.emplace_back(s, t);
        }
      }
    }
    return result;
  }

  std::vector<PartialBijection> wagner_preston_embed(InvSemigroup const& S) {
    std::vector<PartialBijection> result;
    result.reserve(S.size());
    for (Index t = 0; t < S.size(); ++t) {
      Index const st_t = S.product(S.star(t), t);
      std::vector<std::pair<PartialBijection::point_type,
                            PartialBijection::point_type>>
          graph;
      for (Index x = 0; x < S.size(); ++x) {
        if (S.product(st_t, x) == x) {
          graph.emplace_back(static_cast<PartialBijection::point_type>(x),
                             static_cast<PartialBijection::point_type>(
                                 S.product(t, x)));
        }
      }
      result.emplace_back(S.size(), std::move(graph));
    }
    return result;
  }

}  // namespace crossed
