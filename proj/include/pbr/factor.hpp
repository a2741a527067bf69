#pragma once

#include <cstddef>

#include "pbr/classical.hpp"
#include "pbr/pbr.hpp"

namespace pbr {

  // Every edge joins a domain vertex and a codomain vertex, in either
  // direction.
  bool is_pure(Pbr const& p);

  // A Pbr known to be pure.
  class PurePbr {
   public:
    // Throws AssertionFailure if p is not pure.
    explicit PurePbr(Pbr p);

    Pbr const& underlying() const noexcept {
      return _pbr;
    }

    friend bool operator==(PurePbr const&, PurePbr const&) = default;

   private:
    Pbr _pbr;
  };

  // compose(b, a) wrapped as pure; throws ClosureViolation if purity is lost.
  PurePbr pure_closure_check(PurePbr const& b, PurePbr const& a);

  // A morphism of the double of the category of relations: a forward relation
  // X -> Y and a backward relation Y -> X composed contravariantly.
  struct DoubleMorphism {
    BinaryRelation forward;   // from X to Y
    BinaryRelation backward;  // from Y to X

    friend bool operator==(DoubleMorphism const&, DoubleMorphism const&)
        = default;
  };

  // (f', g') (f, g) = (f' f, g g').
  DoubleMorphism double_compose(DoubleMorphism const& q, DoubleMorphism const& p);
  DoubleMorphism double_identity(Labels const& objects);

  // forward = domain -> codomain edges, backward = codomain -> domain edges.
  DoubleMorphism pure_to_double(PurePbr const& p);
  PurePbr        double_to_pure(DoubleMorphism const& d);

  // Contains ε_X; every other edge joins two codomain vertices (left) or two
  // domain vertices (right).
  bool is_left_polarized(Pbr const& p);
  bool is_right_polarized(Pbr const& p);

  // Exhaustively checks that the left and right polarized idempotents on X
  // form commutative bands isomorphic to (relations on X, ∪) via their extra
  // edges.  Returns the number of left polarized idempotents; throws
  // AssertionFailure on any violation.  Intended for |X| <= 3.
  std::size_t polarized_monoid_check(Labels const& objects);

  struct Factorization {
    Pbr     left;   // left polarized idempotent on (Y, Y)
    PurePbr pure;   // on (X, Y)
    Pbr     right;  // right polarized idempotent on (X, X)
  };

  // a = left ∘ pure ∘ right, and this triple is the unique such.
  Factorization factorize(Pbr const& a);
  Pbr           recompose(Factorization const& f);

  // The four relation blocks of a Pbr on (X, Y): a11 on X -> X, a12 on
  // X -> Y, a21 on Y -> X, a22 on Y -> Y, where an edge (u, v) becomes the
  // related pair (u, v).
  struct BlockDecomposition {
    BinaryRelation a11;
    BinaryRelation a12;
    BinaryRelation a21;
    BinaryRelation a22;

    friend bool operator==(BlockDecomposition const&,
                           BlockDecomposition const&) = default;
  };

  BlockDecomposition decompose_blocks(Pbr const& a);
  Pbr                recompose_blocks(BlockDecomposition const& blocks);

  // The blocks of b ∘ a computed purely from relation products:
  //   11 = a11 ∪ a21 b11 K            12 = b12 K
  //   21 = a21 L                      22 = b22 ∪ b12 a22 L
  // with K = ∪_{i>=0} (a22 b11)^i a12 and L = ∪_{i>=0} (b11 a22)^i b21,
  // each union found by iterating until the relation stops growing.
  BlockDecomposition compose_blocks(BlockDecomposition const& b,
                                    BlockDecomposition const& a);

}  // namespace pbr
