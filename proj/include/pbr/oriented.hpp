#pragma once

#include <cstddef>
#include <cstdint>

#include "pbr/pbr.hpp"

namespace pbr {

  // Every vertex lies on at most one edge (a loop uses its vertex twice).
  bool is_oriented_partial_brauer(Pbr const& p);
  // Every vertex lies on exactly one edge.
  bool is_oriented_brauer(Pbr const& p);

  // Composes two oriented partial Brauer diagrams and checks that the result
  // is again one.  Throws NotABrauerDiagram for invalid inputs and
  // ClosureViolation if the composite is not partial Brauer (an engine bug).
  Pbr closure_partial_brauer(Pbr const& b, Pbr const& a);

  // The number of oriented cycles left in the middle object when gluing two
  // oriented partial Brauer diagrams, found by following the unique outgoing
  // a/b edges around Y.  Throws AssertionFailure if it disagrees with
  // frothy_class_count((a, b)).
  std::size_t cycle_count_check(Pbr const& b, Pbr const& a);

  // An object (X_1, X_2) with X_1 ⊆ X_2.
  class OObject {
   public:
    OObject() = default;
    // Throws InvalidOMorphism unless inner ⊆ outer.
    OObject(Labels outer, Labels inner);

    Labels const& outer() const noexcept {
      return _outer;
    }
    Labels const& inner() const noexcept {
      return _inner;
    }
    bool in_inner(std::string const& label) const;

    friend bool operator==(OObject const&, OObject const&) = default;

   private:
    Labels _outer;
    Labels _inner;
  };

  enum class BrauerKind { total, partial };

  struct OMorphism {
    OObject       source;
    OObject       target;
    Pbr           diagram;  // on (source.outer, target.outer)
    std::uint64_t exponent = 0;

    friend bool operator==(OMorphism const&, OMorphism const&) = default;
  };

  // For every edge (a, b): a ∈ X_1 ∪ (Y_2 \ Y_1) and b ∈ Y_1 ∪ (X_2 \ X_1).
  // Isolated vertices are unconstrained.
  bool satisfies_polarity(Pbr const& diagram, OObject const& source,
                          OObject const& target);

  // Throws InvalidOMorphism describing the first problem found.
  void validate_o_morphism(OMorphism const& m,
                           BrauerKind       kind = BrauerKind::total);

  // Deformed composition restricted to O-morphisms.
  OMorphism o_compose(OMorphism const& b, OMorphism const& a,
                      BrauerKind kind = BrauerKind::total);

  // ε̌: x(d) -> x(c) for x ∈ X_1 and x(c) -> x(d) for x ∈ X_2 \ X_1.
  OMorphism epsilon_check(OObject const& obj);

  // Whether no two edges cross when codomain points (top to bottom) and then
  // domain points (bottom to top) are placed around a circle.  The orders
  // list the labels top to bottom and must be permutations of the declared
  // labels.  Direction is ignored.  Throws NotABrauerDiagram if p is not
  // oriented partial Brauer.
  bool is_planar(Pbr const& p, Labels const& domain_order,
                 Labels const& codomain_order);
  bool is_planar(Pbr const& p);

}  // namespace pbr
