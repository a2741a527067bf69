#pragma once

// Alternating-walk machinery shared by composition and frothy-edge detection.
//
// A composable sequence α_1, ..., α_k lives on X_⨿ = X_1 ⊔ ... ⊔ X_{k+1},
// indexed globally by concatenating the objects.  Factor p is lifted to an
// N x N matrix over X_⨿.  A walk alternates factors, so reachability is
// tracked per tagged state (vertex, factor of the last edge used).

#include <cstddef>
#include <vector>

#include "pbr/bool_matrix.hpp"
#include "pbr/pbr.hpp"

namespace pbr::detail {

  using WordVec = std::vector<BoolMatrix::word_type>;

  class SequenceGraph {
   public:
    // factors must be non-empty and composable in order.
    explicit SequenceGraph(std::vector<Pbr const*> factors);

    std::size_t num_factors() const noexcept {
      return _factors.size();
    }
    std::size_t num_vertices() const noexcept {
      return _num_vertices;
    }
    std::size_t object_offset(std::size_t i) const noexcept {
      return _offsets[i];
    }
    std::size_t object_size(std::size_t i) const noexcept {
      return _offsets[i + 1] - _offsets[i];
    }
    // The object X_i containing global vertex v.
    std::size_t object_of(std::size_t v) const noexcept;

    bool is_boundary(std::size_t v) const noexcept {
      return v < _offsets[1] || v >= _offsets[num_factors()];
    }
    WordVec const& boundary() const noexcept {
      return _boundary;
    }

    // Global index of local vertex `local` of factor p.
    std::size_t to_global(std::size_t p, std::size_t local) const noexcept;
    // Local index within factor p of global vertex v (v ∈ X_p ⊔ X_{p+1}).
    std::size_t to_local(std::size_t p, std::size_t v) const noexcept;

    BoolMatrix const& lifted(std::size_t p) const noexcept {
      return _lifted[p];
    }
    BoolMatrix const& lifted_reverse(std::size_t p) const noexcept {
      return _lifted_reverse[p];
    }

    Pbr const& factor(std::size_t p) const noexcept {
      return *_factors[p];
    }

    // reach[p] = vertices at the end of some walk of length >= 1 that starts
    // in `starts` and whose last edge lies in factor p.  With reverse = true
    // the walk is followed against the arrows, so reach[p] holds the vertices
    // from which some walk whose *first* edge lies in factor p ends in
    // `starts`.
    std::vector<WordVec> reach(WordVec const& starts, bool reverse) const;

    // Boundary-to-boundary connections, as a Pbr on (X_1, X_{k+1}).
    Pbr composite() const;

   private:
    std::vector<Pbr const*>  _factors;
    std::vector<std::size_t> _offsets;
    std::size_t              _num_vertices = 0;
    std::vector<BoolMatrix>  _lifted;
    std::vector<BoolMatrix>  _lifted_reverse;
    WordVec                  _boundary;
  };

}  // namespace pbr::detail
