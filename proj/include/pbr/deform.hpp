#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pbr/pbr.hpp"

namespace pbr {

  // An edge together with the position of the factor it belongs to.  The same
  // pair of vertices occurring in two factors gives two distinct tagged edges.
  struct TaggedEdge {
    Edge        edge;
    std::size_t factor = 0;

    friend auto operator<=>(TaggedEdge const&, TaggedEdge const&) = default;
  };

  // Tagged edges lying on no alternating sequence that starts and ends on the
  // boundary X_1 ⊔ X_{k+1}.  Sorted.
  std::vector<TaggedEdge> frothy_edges(AlephSequence const& seq);

  // The number of equivalence classes of frothy cycles.
  //
  // Frothy tagged edges are the nodes of a digraph with an arc e -> e' when
  // target(e) = source(e') and the two edges come from different factors.
  // Frothy cycles are exactly its closed walks, and two cycles are equivalent
  // iff they lie in the same strongly connected component.  The count is the
  // number of components with at least two nodes (there are no self-arcs).
  std::size_t frothy_class_count(AlephSequence const& seq);

  // Two-factor convenience for 𝔣((alpha, beta)).
  std::size_t frothy_class_count(Pbr const& alpha, Pbr const& beta);

  struct DeformedMorphism {
    Pbr           pbr;
    std::uint64_t exponent = 0;

    friend bool operator==(DeformedMorphism const&,
                           DeformedMorphism const&) = default;
  };

  // (b, m) ⋄ (a, k) = (b ∘ a, m + k + 𝔣((a, b))).
  DeformedMorphism compose_deformed(DeformedMorphism const& b,
                                    DeformedMorphism const& a);

}  // namespace pbr
