#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pbr/bool_matrix.hpp"
#include "pbr/error.hpp"

namespace pbr {

  using Labels = std::vector<std::string>;

  enum class Side : unsigned char { domain, codomain };

  constexpr Side flip(Side s) noexcept {
    return s == Side::domain ? Side::codomain : Side::domain;
  }

  struct Vertex {
    std::string label;
    Side        side = Side::domain;

    friend auto operator<=>(Vertex const&, Vertex const&) = default;
  };

  inline Vertex dom(std::string label) {
    return {std::move(label), Side::domain};
  }
  inline Vertex cod(std::string label) {
    return {std::move(label), Side::codomain};
  }

  struct Edge {
    Vertex source;
    Vertex target;

    friend auto operator<=>(Edge const&, Edge const&) = default;
  };

  // A partitioned binary relation on (X, Y): an arbitrary directed graph on
  // the disjoint union of the domain X and the codomain Y.
  //
  // Vertices are indexed domain first (in declared order), then codomain, so
  // the edge set is a square BoolMatrix of size |X| + |Y| whose row u holds
  // the targets of u.  Values are immutable once built.
  class Pbr {
   public:
    // The edgeless relation on (∅, ∅).
    Pbr() = default;

    // The edgeless relation on (domain, codomain).
    Pbr(Labels domain, Labels codomain);

    // Throws Error with the first violated invariant (see validate).
    static Pbr from_edges(Labels domain, Labels codomain,
                          std::span<Edge const> edges);

    // adjacency must be square of size |domain| + |codomain|.
    static Pbr from_matrix(Labels domain, Labels codomain, BoolMatrix adjacency);

    Labels const& domain() const noexcept {
      return _domain;
    }
    Labels const& codomain() const noexcept {
      return _codomain;
    }
    std::size_t domain_size() const noexcept {
      return _domain.size();
    }
    std::size_t codomain_size() const noexcept {
      return _codomain.size();
    }
    std::size_t num_vertices() const noexcept {
      return _domain.size() + _codomain.size();
    }

    bool is_domain_index(std::size_t i) const noexcept {
      return i < _domain.size();
    }

    Vertex                     vertex(std::size_t index) const;
    std::optional<std::size_t> index_of(Vertex const& v) const;

    bool has_edge(std::size_t source, std::size_t target) const noexcept {
      return _adjacency.get(source, target);
    }
    bool has_edge(Vertex const& source, Vertex const& target) const;

    BoolMatrix const& adjacency() const noexcept {
      return _adjacency;
    }

    std::size_t edge_count() const noexcept {
      return _adjacency.count();
    }

    // Edges in index order (source index, then target index).
    std::vector<Edge> edges() const;

    friend bool operator==(Pbr const&, Pbr const&) = default;

   private:
    Labels     _domain;
    Labels     _codomain;
    BoolMatrix _adjacency;
  };

  // Checks a raw description against the Pbr invariants.  Returns the first
  // violation, or nothing when the description is well formed.
  std::optional<Error> validate(Labels const& domain, Labels const& codomain,
                                std::span<Edge const> edges);

  // beta ∘ alpha, i.e. alpha first.  (a, b) is an edge of the result iff an
  // alternating alpha/beta edge sequence connects a to b.
  Pbr compose(Pbr const& beta, Pbr const& alpha);

  // ε_X: the edges x(d) -> x(c) and x(c) -> x(d).
  Pbr identity(Labels const& objects);
  // ε̄_X: ε_X plus every loop.
  Pbr identity_bar(Labels const& objects);
  // ε̂_X: only x(d) -> x(c), the image of the identity relation under phi1.
  Pbr identity_hat(Labels const& objects);

  // Every one of the (|X| + |Y|)^2 possible edges.
  Pbr full(Labels const& domain, Labels const& codomain);

  // Side-by-side juxtaposition.  If a side of b shares a label with the same
  // side of a, every label on that side of b is prefixed with "1:" (repeated
  // until the side is collision free).
  Pbr tensor(Pbr const& a, Pbr const& b);

  // Mirror image: domain and codomain swap, every edge keeps its direction
  // between the mirrored vertices.
  Pbr star(Pbr const& a);

  // A non-empty composable sequence (α_1, ..., α_k).
  class AlephSequence {
   public:
    explicit AlephSequence(std::vector<Pbr> pbrs);

    std::size_t size() const noexcept {
      return _pbrs.size();
    }
    Pbr const& operator[](std::size_t i) const noexcept {
      return _pbrs[i];
    }
    std::vector<Pbr> const& pbrs() const noexcept {
      return _pbrs;
    }

    // X_1, ..., X_{k+1} (zero based here).
    Labels const& object(std::size_t i) const;

    // α_k ∘ ... ∘ α_1.
    Pbr composite() const;

   private:
    std::vector<Pbr> _pbrs;
  };

  // Throws IncomposableShapes unless codomain(alpha) == domain(beta).
  void check_composable(Pbr const& alpha, Pbr const& beta);

  // Throws DuplicateLabel if labels are not pairwise distinct.
  void check_distinct(Labels const& labels, char const* what);

}  // namespace pbr
