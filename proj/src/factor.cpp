#include "pbr/factor.hpp"

#include <cstdint>
#include <vector>

namespace pbr {

  bool is_pure(Pbr const& p) {
    for (std::size_t u = 0; u < p.num_vertices(); ++u) {
      bool ok = true;
      bits::for_each(p.adjacency().row(u), [&](std::size_t v) {
        ok = ok && (p.is_domain_index(u) != p.is_domain_index(v));
      });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  PurePbr::PurePbr(Pbr p) : _pbr(std::move(p)) {
    if (!is_pure(_pbr)) {
      throw Error(ErrorCode::assertion_failure, "Pbr is not pure");
    }
  }

  PurePbr pure_closure_check(PurePbr const& b, PurePbr const& a) {
    Pbr result = compose(b.underlying(), a.underlying());
    if (!is_pure(result)) {
      throw Error(ErrorCode::closure_violation,
                  "composite of pure Pbrs is not pure");
    }
    return PurePbr(std::move(result));
  }

  DoubleMorphism double_compose(DoubleMorphism const& q,
                                DoubleMorphism const& p) {
    return {brel_compose(q.forward, p.forward),
            brel_compose(p.backward, q.backward)};
  }

  DoubleMorphism double_identity(Labels const& objects) {
    return {BinaryRelation::identity(objects), BinaryRelation::identity(objects)};
  }

  DoubleMorphism pure_to_double(PurePbr const& p) {
    auto blocks = decompose_blocks(p.underlying());
    return {std::move(blocks.a12), std::move(blocks.a21)};
  }

  PurePbr double_to_pure(DoubleMorphism const& d) {
    if (d.forward.domain() != d.backward.codomain()
        || d.forward.codomain() != d.backward.domain()) {
      throw Error(ErrorCode::incomposable_shapes,
                  "forward and backward relations have mismatched shapes");
    }
    Labels const& x = d.forward.domain();
    Labels const& y = d.forward.codomain();
    return PurePbr(recompose_blocks({BinaryRelation(x, x), d.forward, d.backward,
                                     BinaryRelation(y, y)}));
  }

  namespace {
    // Contains ε_X and every other edge stays on the given side.
    bool is_polarized(Pbr const& p, Side side) {
      if (p.domain() != p.codomain()) {
        return false;
      }
      std::size_t const n = p.domain_size();
      for (std::size_t i = 0; i < n; ++i) {
        if (!p.has_edge(i, n + i) || !p.has_edge(n + i, i)) {
          return false;
        }
      }
      auto on_side = [&](std::size_t i) {
        return p.is_domain_index(i) == (side == Side::domain);
      };
      for (std::size_t u = 0; u < 2 * n; ++u) {
        bool ok = true;
        bits::for_each(p.adjacency().row(u), [&](std::size_t v) {
          bool identity_edge = (u + n == v) || (v + n == u);
          ok = ok && (identity_edge || (on_side(u) && on_side(v)));
        });
        if (!ok) {
          return false;
        }
      }
      return true;
    }

    // ε_X plus the pairs of `extra` placed on the given side.
    Pbr polarized(Labels const& objects, BinaryRelation const& extra, Side side) {
      std::size_t const n      = objects.size();
      std::size_t const offset = side == Side::domain ? 0 : n;
      BoolMatrix        adj    = identity(objects).adjacency();
      for (std::size_t v = 0; v < n; ++v) {
        bits::for_each(extra.matrix().row(v), [&](std::size_t u) {
          adj.set(offset + u, offset + v);
        });
      }
      return Pbr::from_matrix(objects, objects, std::move(adj));
    }

    void require(bool condition, std::string const& what) {
      if (!condition) {
        throw Error(ErrorCode::assertion_failure, what);
      }
    }
  }  // namespace

  bool is_left_polarized(Pbr const& p) {
    return is_polarized(p, Side::codomain);
  }

  bool is_right_polarized(Pbr const& p) {
    return is_polarized(p, Side::domain);
  }

  std::size_t polarized_monoid_check(Labels const& objects) {
    std::size_t const n     = objects.size();
    std::size_t const cells = n * n;
    if (cells >= 16) {
      throw Error(ErrorCode::instance_too_large,
                  "exhaustive band check is limited to |X| <= 3");
    }
    auto relation = [&](std::uint64_t mask) {
      BoolMatrix m(n, n);
      for (std::size_t c = 0; c < cells; ++c) {
        if ((mask >> c) & 1U) {
          m.set(c / n, c % n);
        }
      }
      return BinaryRelation::from_matrix(objects, objects, std::move(m));
    };
    std::uint64_t const count = std::uint64_t{1} << cells;

    for (Side side : {Side::codomain, Side::domain}) {
      auto is_member
          = side == Side::codomain ? is_left_polarized : is_right_polarized;
      std::vector<Pbr> elements;
      for (std::uint64_t mask = 0; mask < count; ++mask) {
        elements.push_back(polarized(objects, relation(mask), side));
        require(is_member(elements.back()), "constructed element not polarized");
        require(compose(elements.back(), elements.back()) == elements.back(),
                "polarized element is not idempotent");
      }
      require(elements.front() == identity(objects), "ε_X is not the unit");
      for (std::uint64_t r = 0; r < count; ++r) {
        for (std::uint64_t s = 0; s < count; ++s) {
          // Product corresponds to union of the extra edges; this gives
          // closure and commutativity at once.
          require(compose(elements[r], elements[s]) == elements[r | s],
                  "product does not match the union of extra edges");
        }
      }
    }
    return static_cast<std::size_t>(count);
  }

  Factorization factorize(Pbr const& a) {
    auto blocks = decompose_blocks(a);
    Pbr  left   = polarized(a.codomain(), blocks.a22, Side::codomain);
    Pbr  right  = polarized(a.domain(), blocks.a11, Side::domain);
    Pbr  pure   = recompose_blocks({BinaryRelation(a.domain(), a.domain()),
                                    blocks.a12, blocks.a21,
                                    BinaryRelation(a.codomain(), a.codomain())});
    return {std::move(left), PurePbr(std::move(pure)), std::move(right)};
  }

  Pbr recompose(Factorization const& f) {
    return compose(f.left, compose(f.pure.underlying(), f.right));
  }

  BlockDecomposition decompose_blocks(Pbr const& a) {
    Labels const& x  = a.domain();
    Labels const& y  = a.codomain();
    std::size_t   nx = x.size();
    std::size_t   ny = y.size();
    // Relation matrices are indexed [target][source].
    BoolMatrix m11(nx, nx), m12(ny, nx), m21(nx, ny), m22(ny, ny);
    for (std::size_t u = 0; u < a.num_vertices(); ++u) {
      bits::for_each(a.adjacency().row(u), [&](std::size_t v) {
        bool ud = u < nx, vd = v < nx;
        if (ud && vd) {
          m11.set(v, u);
        } else if (ud) {
          m12.set(v - nx, u);
        } else if (vd) {
          m21.set(v, u - nx);
        } else {
          m22.set(v - nx, u - nx);
        }
      });
    }
    return {BinaryRelation::from_matrix(x, x, std::move(m11)),
            BinaryRelation::from_matrix(x, y, std::move(m12)),
            BinaryRelation::from_matrix(y, x, std::move(m21)),
            BinaryRelation::from_matrix(y, y, std::move(m22))};
  }

  Pbr recompose_blocks(BlockDecomposition const& blocks) {
    Labels const& x = blocks.a12.domain();
    Labels const& y = blocks.a12.codomain();
    if (blocks.a11.domain() != x || blocks.a11.codomain() != x
        || blocks.a21.domain() != y || blocks.a21.codomain() != x
        || blocks.a22.domain() != y || blocks.a22.codomain() != y) {
      throw Error(ErrorCode::incomposable_shapes,
                  "blocks do not share one (X, Y) shape");
    }
    std::size_t const nx = x.size();
    BoolMatrix        adj(nx + y.size(), nx + y.size());
    auto place = [&](BinaryRelation const& r, std::size_t src_off,
                     std::size_t tgt_off) {
      for (std::size_t t = 0; t < r.codomain().size(); ++t) {
        bits::for_each(r.matrix().row(t), [&](std::size_t s) {
          adj.set(src_off + s, tgt_off + t);
        });
      }
    };
    place(blocks.a11, 0, 0);
    place(blocks.a12, 0, nx);
    place(blocks.a21, nx, 0);
    place(blocks.a22, nx, nx);
    return Pbr::from_matrix(x, y, std::move(adj));
  }

  namespace {
    // ∪_{i>=0} step^i ∘ seed, grown until nothing changes.
    BinaryRelation star_closure(BinaryRelation seed, BinaryRelation const& first,
                                BinaryRelation const& second) {
      // step = second ∘ first
      BoolMatrix acc = seed.matrix();
      BoolMatrix frontier = acc;
      while (true) {
        BoolMatrix next = second.matrix() * (first.matrix() * frontier);
        if (!acc.unite(next)) {
          break;
        }
        frontier = next;
      }
      return BinaryRelation::from_matrix(seed.domain(), seed.codomain(),
                                         std::move(acc));
    }
  }  // namespace

  BlockDecomposition compose_blocks(BlockDecomposition const& b,
                                    BlockDecomposition const& a) {
    if (a.a12.codomain() != b.a12.domain()) {
      throw Error(ErrorCode::incomposable_shapes,
                  "codomain of the first factor differs from the domain of "
                  "the second");
    }
    // K: X -> Y, a12 then any number of (b11, a22) rounds.
    BinaryRelation k = star_closure(a.a12, b.a11, a.a22);
    // L: Z -> Y, b21 then any number of (a22, b11) rounds.
    BinaryRelation l = star_closure(b.a21, a.a22, b.a11);

    BlockDecomposition result{
        brel_compose(a.a21, brel_compose(b.a11, k)),
        brel_compose(b.a12, k),
        brel_compose(a.a21, l),
        brel_compose(b.a12, brel_compose(a.a22, l)),
    };
    result.a11 = BinaryRelation::from_matrix(
        result.a11.domain(), result.a11.codomain(),
        result.a11.matrix() | a.a11.matrix());
    result.a22 = BinaryRelation::from_matrix(
        result.a22.domain(), result.a22.codomain(),
        result.a22.matrix() | b.a22.matrix());
    return result;
  }

}  // namespace pbr
