#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pbr/bool_matrix.hpp"
#include "pbr/pbr.hpp"

namespace pbr {

  // A binary relation from X to Y as a |Y| x |X| Boolean matrix: rows are
  // indexed by the codomain, columns by the domain, so composition is the
  // ordinary Boolean matrix product.
  class BinaryRelation {
   public:
    using Pair = std::pair<std::string, std::string>;

    BinaryRelation() = default;
    // The empty relation.
    BinaryRelation(Labels domain, Labels codomain);

    static BinaryRelation from_pairs(Labels domain, Labels codomain,
                                     std::span<Pair const> pairs);
    static BinaryRelation from_matrix(Labels domain, Labels codomain,
                                      BoolMatrix matrix);
    static BinaryRelation identity(Labels const& objects);
    static BinaryRelation full(Labels const& domain, Labels const& codomain);

    Labels const& domain() const noexcept {
      return _domain;
    }
    Labels const& codomain() const noexcept {
      return _codomain;
    }
    BoolMatrix const& matrix() const noexcept {
      return _matrix;
    }

    // Whether domain element x is related to codomain element y.
    bool related(std::size_t x, std::size_t y) const noexcept {
      return _matrix.get(y, x);
    }

    // (x, y) pairs, ordered by x then y.
    std::vector<Pair> pairs() const;

    friend bool operator==(BinaryRelation const&, BinaryRelation const&)
        = default;

   private:
    Labels     _domain;
    Labels     _codomain;
    BoolMatrix _matrix;
  };

  // b ∘ a: x ~ z iff x ~_a y and y ~_b z for some y.
  BinaryRelation brel_compose(BinaryRelation const& b, BinaryRelation const& a);
  BinaryRelation brel_transpose(BinaryRelation const& a);

  // Each related pair (x, y) becomes the edge x(d) -> y(c).  Respects
  // composition but sends identities to ε̂ rather than ε.
  Pbr phi1(BinaryRelation const& a);
  // phi1(a) together with the reversed edges y(c) -> x(d); a faithful functor.
  Pbr phi2(BinaryRelation const& a);

  // Membership in the ε̂-subcategory, i.e. the image of phi1: every edge runs
  // from the domain to the codomain.
  bool is_in_subcategory_e_hat(Pbr const& p);

  struct RelationKinds {
    bool map                = false;
    bool injective_map      = false;
    bool partial_injective  = false;
    bool surjective_map     = false;
    bool partial_surjective = false;

    friend bool operator==(RelationKinds const&, RelationKinds const&) = default;
  };

  RelationKinds relation_kind(BinaryRelation const& a);

  // A set partition of X ⊔ Y, stored as a block index per vertex (domain
  // first, then codomain).  Blocks are renumbered in order of their least
  // vertex, so equal partitions compare equal structurally.
  class Partition {
   public:
    Partition() = default;
    // block_of.size() must equal |X| + |Y|; ids are arbitrary integers.
    Partition(Labels domain, Labels codomain, std::vector<std::size_t> block_of);

    static Partition from_blocks(Labels domain, Labels codomain,
                                 std::span<std::vector<Vertex> const> blocks);
    // π_X: the blocks {x(d), x(c)}.
    static Partition identity(Labels const& objects);
    static Partition singletons(Labels const& domain, Labels const& codomain);

    Labels const& domain() const noexcept {
      return _domain;
    }
    Labels const& codomain() const noexcept {
      return _codomain;
    }
    std::size_t num_vertices() const noexcept {
      return _block_of.size();
    }
    std::size_t block_of(std::size_t v) const noexcept {
      return _block_of[v];
    }
    std::size_t num_blocks() const noexcept {
      return _num_blocks;
    }
    // Vertex indices of every block, blocks in canonical order.
    std::vector<std::vector<std::size_t>> blocks() const;

    Vertex vertex(std::size_t index) const;

    friend bool operator==(Partition const&, Partition const&) = default;

   private:
    Labels                   _domain;
    Labels                   _codomain;
    std::vector<std::size_t> _block_of;
    std::size_t              _num_blocks = 0;
  };

  Partition partition_compose(Partition const& b, Partition const& a);

  // The partition viewed as an equivalence relation on X ⊔ Y.
  Pbr psi(Partition const& a);

  // 𝔭(a, b): the number of connected components of the glued diagram that
  // live entirely in the middle object Y.
  std::size_t partition_defect(Partition const& b, Partition const& a);

  struct DeformedPartition {
    Partition     partition;
    std::uint64_t exponent = 0;

    friend bool operator==(DeformedPartition const&,
                           DeformedPartition const&) = default;
  };

  DeformedPartition compose_deformed_partition(DeformedPartition const& b,
                                               DeformedPartition const& a);

}  // namespace pbr
