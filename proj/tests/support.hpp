#pragma once

// Random and exhaustive generators shared by the test programs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "pbr/classical.hpp"
#include "pbr/oriented.hpp"
#include "pbr/pbr.hpp"
#include "pbr/random.hpp"

namespace support {

  using pbr::Labels;
  using pbr::Pbr;
  using Rng = std::mt19937_64;

  inline Labels set_of(std::size_t n) {
    return pbr::numbered_labels(n);
  }

  inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  inline bool coin(Rng& rng, double p) {
    return std::bernoulli_distribution(p)(rng);
  }

  // Edge density drawn per instance so both sparse and dense graphs occur.
  inline double density(Rng& rng) {
    static constexpr double levels[] = {0.1, 0.2, 0.35, 0.5, 0.7};
    return levels[uniform(rng, 0, 4)];
  }

  inline Pbr random_pbr(Rng& rng, Labels const& dom, Labels const& cod,
                        double p) {
    std::size_t     n = dom.size() + cod.size();
    pbr::BoolMatrix m(n, n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (coin(rng, p)) {
          m.set(u, v);
        }
      }
    }
    return Pbr::from_matrix(dom, cod, std::move(m));
  }

  inline Pbr random_pbr(Rng& rng, std::size_t nx, std::size_t ny) {
    return random_pbr(rng, set_of(nx), set_of(ny), density(rng));
  }

  // The Pbr on (dom, cod) whose edges are the set bits of mask, in row-major
  // order of the adjacency matrix.
  inline Pbr pbr_from_mask(Labels const& dom, Labels const& cod,
                           std::uint64_t mask) {
    std::size_t     n = dom.size() + cod.size();
    pbr::BoolMatrix m(n, n);
    for (std::size_t c = 0; c < n * n; ++c) {
      if ((mask >> c) & 1U) {
        m.set(c / n, c % n);
      }
    }
    return Pbr::from_matrix(dom, cod, std::move(m));
  }

  inline std::vector<Pbr> all_pbrs(std::size_t nx, std::size_t ny) {
    std::size_t const n = nx + ny;
    std::vector<Pbr>  result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      result.push_back(pbr_from_mask(set_of(nx), set_of(ny), mask));
    }
    return result;
  }

  inline pbr::BinaryRelation random_relation(Rng& rng, std::size_t nx,
                                             std::size_t ny) {
    double          p = density(rng);
    pbr::BoolMatrix m(ny, nx);
    for (std::size_t y = 0; y < ny; ++y) {
      for (std::size_t x = 0; x < nx; ++x) {
        if (coin(rng, p)) {
          m.set(y, x);
        }
      }
    }
    return pbr::BinaryRelation::from_matrix(set_of(nx), set_of(ny), std::move(m));
  }

  inline pbr::Partition random_partition(Rng& rng, std::size_t nx,
                                         std::size_t ny) {
    std::size_t              n      = nx + ny;
    std::size_t              blocks = uniform(rng, 1, std::max<std::size_t>(n, 1));
    std::vector<std::size_t> block_of(n);
    for (auto& b : block_of) {
      b = uniform(rng, 0, blocks - 1);
    }
    return pbr::Partition(set_of(nx), set_of(ny), std::move(block_of));
  }

  // Random oriented partial Brauer diagram: a random partial matching of the
  // vertices, each pair oriented at random.
  inline Pbr random_partial_brauer(Rng& rng, std::size_t nx, std::size_t ny,
                                   double keep = 0.8) {
    std::size_t              n = nx + ny;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    pbr::BoolMatrix m(n, n);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
      if (coin(rng, keep)) {
        auto [s, t] = coin(rng, 0.5) ? std::pair{order[i], order[i + 1]}
                                     : std::pair{order[i + 1], order[i]};
        m.set(s, t);
      }
    }
    return Pbr::from_matrix(set_of(nx), set_of(ny), std::move(m));
  }

  // An O-object whose balance |inner| - |outer \ inner| equals d.
  inline pbr::OObject random_oobject(Rng& rng, int d, std::size_t max_n) {
    int const low = std::abs(d);
    int       n   = static_cast<int>(
        uniform(rng, static_cast<std::size_t>(low),
                std::max(static_cast<std::size_t>(low), max_n)));
    if ((n + d) % 2 != 0) {
      ++n;
    }
    auto   k        = static_cast<std::size_t>((n + d) / 2);
    Labels outer    = set_of(static_cast<std::size_t>(n));
    Labels shuffled = outer;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Labels inner(shuffled.begin(), shuffled.begin() + static_cast<long>(k));
    return pbr::OObject(outer, inner);
  }

  // A random O-morphism (source -> target) with the given Brauer kind.
  // Sources of edges are inner domain points and outer-only codomain points;
  // targets are inner codomain points and outer-only domain points.
  inline pbr::OMorphism random_omorphism(Rng& rng, pbr::OObject const& source,
                                         pbr::OObject const& target,
                                         pbr::BrauerKind kind) {
    std::size_t const        nx = source.outer().size();
    std::size_t const        ny = target.outer().size();
    std::vector<std::size_t> tails, heads;
    for (std::size_t i = 0; i < nx; ++i) {
      (source.in_inner(source.outer()[i]) ? tails : heads).push_back(i);
    }
    for (std::size_t j = 0; j < ny; ++j) {
      (target.in_inner(target.outer()[j]) ? heads : tails).push_back(nx + j);
    }
    std::shuffle(tails.begin(), tails.end(), rng);
    std::shuffle(heads.begin(), heads.end(), rng);
    pbr::BoolMatrix m(nx + ny, nx + ny);
    for (std::size_t i = 0; i < std::min(tails.size(), heads.size()); ++i) {
      if (kind == pbr::BrauerKind::total || coin(rng, 0.75)) {
        m.set(tails[i], heads[i]);
      }
    }
    return {source, target,
            Pbr::from_matrix(source.outer(), target.outer(), std::move(m)),
            uniform(rng, 0, 3)};
  }

  // Random planar oriented partial Brauer diagram for the declared orders.
  // Boundary points are visited around the circle (codomain top to bottom,
  // then domain bottom to top) and matched with a stack, which never
  // produces interleaving pairs.
  inline Pbr random_planar(Rng& rng, std::size_t nx, std::size_t ny) {
    std::size_t const        n = nx + ny;
    std::vector<std::size_t> at_position(n);
    for (std::size_t j = 0; j < ny; ++j) {
      at_position[j] = nx + j;
    }
    for (std::size_t i = 0; i < nx; ++i) {
      at_position[ny + (nx - 1 - i)] = i;
    }
    pbr::BoolMatrix          m(n, n);
    std::vector<std::size_t> stack;
    for (std::size_t pos = 0; pos < n; ++pos) {
      std::size_t v    = at_position[pos];
      auto        move = uniform(rng, 0, 2);
      if (move == 2 && !stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        if (coin(rng, 0.5)) {
          m.set(u, v);
        } else {
          m.set(v, u);
        }
      } else if (move >= 1) {
        stack.push_back(v);
      }
    }
    return Pbr::from_matrix(set_of(nx), set_of(ny), std::move(m));
  }

}  // namespace support

namespace support {

  // The code of the pbr::Error thrown by f, or nothing if f returns.
  template <typename F>
  std::optional<pbr::ErrorCode> error_of(F&& f) {
    try {
      f();
    } catch (pbr::Error const& e) {
      return e.code();
    }
    return std::nullopt;
  }

}  // namespace support
