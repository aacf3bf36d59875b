#ifndef CROSSED_INVERSE_SEMIGROUP_HPP_
#define CROSSED_INVERSE_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "crossed/partial_bijection.hpp"

namespace crossed {

  using Index = std::size_t;

  // Row-major n x n multiplication table: table[i * n + j] = i * j.
  struct CayleyTable {
    std::size_t        size = 0;
    std::vector<Index> entries;

    Index operator()(Index i, Index j) const noexcept {
      return entries[i * size + j];
    }
  };

  // A finite inverse semigroup. Immutable after construction; every
  // instance holds a validated table together with its star map, the
  // idempotents, the natural partial order and the zero (if any).
  class InvSemigroup {
   public:
    // Validates `table` (see validate_inverse). If `star` is supplied it
    // must agree with the reconstructed one. Throws Error on failure.
    static InvSemigroup from_table(CayleyTable                       table,
                                   std::vector<std::string>          names,
                                   std::optional<std::vector<Index>> star
                                   = std::nullopt);

    std::size_t size() const noexcept {
      return _table.size;
    }

    Index product(Index s, Index t) const noexcept {
      return _table(s, t);
    }
    Index star(Index t) const noexcept {
      return _star[t];
    }
    bool is_idempotent(Index t) const noexcept {
      return _is_idempotent[t];
    }
    std::vector<Index> const& idempotents() const noexcept {
      return _idempotents;
    }
    std::optional<Index> zero() const noexcept {
      return _zero;
    }
    // s <= t iff s = t s* s.
    bool leq(Index s, Index t) const noexcept {
      return _table(t, _table(_star[s], s)) == s;
    }

    CayleyTable const& table() const noexcept {
      return _table;
    }
    std::vector<Index> const& star_map() const noexcept {
      return _star;
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::string const& name(Index t) const {
      return _names[t];
    }
    std::optional<Index> find(std::string const& name) const;

    bool is_group() const noexcept {
      return _idempotents.size() == 1;
    }

    // Present when the semigroup was generated by partial bijections.
    bool is_concrete() const noexcept {
      return !_elements.empty();
    }
    std::vector<PartialBijection> const& elements() const noexcept {
      return _elements;
    }
    std::optional<Index> find(PartialBijection const& f) const;

    // Whether the star map was reconstructed rather than supplied.
    bool star_reconstructed() const noexcept {
      return _star_reconstructed;
    }

   private:
    friend InvSemigroup generate_semigroup(std::span<PartialBijection const>,
                                           std::span<std::string const>,
                                           std::size_t);

    InvSemigroup() = default;
    void init_derived();

    CayleyTable                               _table;
    std::vector<Index>                        _star;
    std::vector<bool>                         _is_idempotent;
    std::vector<Index>                        _idempotents;
    std::optional<Index>                      _zero;
    std::vector<std::string>                  _names;
    std::vector<PartialBijection>             _elements;
    std::unordered_map<PartialBijection, Index> _lookup;
    bool                                      _star_reconstructed = false;
  };

  inline constexpr std::size_t kDefaultSizeCap = 10'000;

  // Closure of `generators` under composition and inversion, enumerated
  // breadth first: the generators and their inverses are seeded in order,
  // then each element is multiplied on the right by every seed. Element
  // names are the discovering words, e.g. "t.t*". The empty map, when
  // reached, is the zero. Throws Error(SizeCapExceeded) or
  // Error(CarrierMismatch).
  InvSemigroup generate_semigroup(std::span<PartialBijection const> generators,
                                  std::span<std::string const>      generator_names,
                                  std::size_t cap = kDefaultSizeCap);

  // Generator names default to "g0", "g1", ...
  InvSemigroup generate_semigroup(std::span<PartialBijection const> generators,
                                  std::size_t cap = kDefaultSizeCap);

  // Returns the unique star map of an inverse semigroup table or throws
  // Error with NotAssociative, NoGeneralizedInverse, NonUniqueInverse or
  // IdempotentsDoNotCommute.
  std::vector<Index> validate_inverse(CayleyTable const& table);

  // All pairs (s, t) with s <= t.
  std::vector<std::pair<Index, Index>> natural_order(InvSemigroup const& S);

  // t -> (x -> t x) on {x : t* t x = x}; the carrier is S itself.
  std::vector<PartialBijection> wagner_preston_embed(InvSemigroup const& S);

}  // namespace crossed

#endif  // CROSSED_INVERSE_SEMIGROUP_HPP_
