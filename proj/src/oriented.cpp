#include "pbr/oriented.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pbr/deform.hpp"

namespace pbr {

  namespace {
    // Number of edge endpoints at each vertex (a loop counts twice).
    std::vector<std::size_t> degrees(Pbr const& p) {
      std::vector<std::size_t> deg(p.num_vertices(), 0);
      for (std::size_t u = 0; u < p.num_vertices(); ++u) {
        bits::for_each(p.adjacency().row(u), [&](std::size_t v) {
          ++deg[u];
          ++deg[v];
        });
      }
      return deg;
    }

    std::optional<std::size_t> out_neighbour(Pbr const& p, std::size_t u) {
      std::optional<std::size_t> result;
      bits::for_each(p.adjacency().row(u), [&](std::size_t v) { result = v; });
      return result;
    }
  }  // namespace

  bool is_oriented_partial_brauer(Pbr const& p) {
    auto deg = degrees(p);
    return std::all_of(deg.begin(), deg.end(), [](auto d) { return d <= 1; });
  }

  bool is_oriented_brauer(Pbr const& p) {
    auto deg = degrees(p);
    return std::all_of(deg.begin(), deg.end(), [](auto d) { return d == 1; });
  }

  Pbr closure_partial_brauer(Pbr const& b, Pbr const& a) {
    if (!is_oriented_partial_brauer(a) || !is_oriented_partial_brauer(b)) {
      throw Error(ErrorCode::not_a_brauer_diagram,
                  "inputs must be oriented partial Brauer diagrams");
    }
    Pbr result = compose(b, a);
    if (!is_oriented_partial_brauer(result)) {
      throw Error(ErrorCode::closure_violation,
                  "composite of oriented partial Brauer diagrams is not one");
    }
    return result;
  }

  std::size_t cycle_count_check(Pbr const& b, Pbr const& a) {
    check_composable(a, b);
    if (!is_oriented_partial_brauer(a) || !is_oriented_partial_brauer(b)) {
      throw Error(ErrorCode::not_a_brauer_diagram,
                  "inputs must be oriented partial Brauer diagrams");
    }
    std::size_t const nx = a.domain_size();
    std::size_t const ny = a.codomain_size();
    // Middle vertex y is index nx + y in a and index y in b.  Within Y, a
    // contributes codomain-codomain edges and b domain-domain edges.
    auto next_a = [&](std::size_t y) -> std::optional<std::size_t> {
      auto t = out_neighbour(a, nx + y);
      if (t && *t >= nx) {
        return *t - nx;
      }
      return std::nullopt;
    };
    auto next_b = [&](std::size_t y) -> std::optional<std::size_t> {
      auto t = out_neighbour(b, y);
      if (t && *t < ny) {
        return *t;
      }
      return std::nullopt;
    };

    // An oriented cycle alternates a and b edges, and every vertex on it uses
    // its only a-edge and its only b-edge, so following a then b from a
    // vertex either closes up or falls off.  Each cycle is counted once, at
    // its least vertex.
    std::size_t cycles = 0;
    for (std::size_t y = 0; y < ny; ++y) {
      for (int start = 0; start < 2; ++start) {
        std::size_t cur    = y;
        bool        use_a  = start == 0;
        bool        closed = false;
        bool        least  = true;
        for (std::size_t step = 0; step < 2 * ny; ++step) {
          auto nxt = use_a ? next_a(cur) : next_b(cur);
          if (!nxt) {
            break;
          }
          cur   = *nxt;
          use_a = !use_a;
          if (cur == y && use_a == (start == 0)) {
            closed = true;
            break;
          }
          least = least && cur > y;
        }
        // Only one of the two starts can leave y, since y has a single
        // outgoing edge on any cycle through it.
        if (closed && least) {
          ++cycles;
        }
      }
    }

    std::size_t f = frothy_class_count(a, b);
    if (f != cycles) {
      throw Error(ErrorCode::assertion_failure,
                  "oriented middle cycles (" + std::to_string(cycles)
                      + ") disagree with the frothy class count ("
                      + std::to_string(f) + ")");
    }
    return f;
  }

  OObject::OObject(Labels outer, Labels inner)
      : _outer(std::move(outer)), _inner(std::move(inner)) {
    check_distinct(_outer, "outer");
    check_distinct(_inner, "inner");
    for (auto const& l : _inner) {
      if (std::find(_outer.begin(), _outer.end(), l) == _outer.end()) {
        throw Error(ErrorCode::invalid_o_morphism,
                    "inner label '" + l + "' is not in the outer set");
      }
    }
  }

  bool OObject::in_inner(std::string const& label) const {
    return std::find(_inner.begin(), _inner.end(), label) != _inner.end();
  }

  bool satisfies_polarity(Pbr const& diagram, OObject const& source,
                          OObject const& target) {
    std::size_t nx = diagram.domain_size();
    std::vector<bool> inner(diagram.num_vertices());
    for (std::size_t i = 0; i < diagram.num_vertices(); ++i) {
      inner[i] = i < nx ? source.in_inner(diagram.domain()[i])
                        : target.in_inner(diagram.codomain()[i - nx]);
    }
    // Sources: inner domain points or outer-only codomain points.  Targets:
    // inner codomain points or outer-only domain points.
    auto valid_source = [&](std::size_t i) { return (i < nx) == inner[i]; };
    auto valid_target = [&](std::size_t i) { return (i >= nx) == inner[i]; };
    for (std::size_t u = 0; u < diagram.num_vertices(); ++u) {
      bool ok = true;
      bits::for_each(diagram.adjacency().row(u), [&](std::size_t v) {
        ok = ok && valid_source(u) && valid_target(v);
      });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  void validate_o_morphism(OMorphism const& m, BrauerKind kind) {
    if (m.diagram.domain() != m.source.outer()
        || m.diagram.codomain() != m.target.outer()) {
      throw Error(ErrorCode::invalid_o_morphism,
                  "diagram is not on (source outer, target outer)");
    }
    bool brauer = kind == BrauerKind::total
                      ? is_oriented_brauer(m.diagram)
                      : is_oriented_partial_brauer(m.diagram);
    if (!brauer) {
      throw Error(ErrorCode::invalid_o_morphism,
                  kind == BrauerKind::total
                      ? "diagram is not an oriented Brauer diagram"
                      : "diagram is not an oriented partial Brauer diagram");
    }
    if (!satisfies_polarity(m.diagram, m.source, m.target)) {
      throw Error(ErrorCode::invalid_o_morphism,
                  "an edge violates the orientation condition");
    }
  }

  OMorphism o_compose(OMorphism const& b, OMorphism const& a, BrauerKind kind) {
    validate_o_morphism(a, kind);
    validate_o_morphism(b, kind);
    if (a.target != b.source) {
      throw Error(ErrorCode::incomposable_shapes,
                  "target object of the first morphism differs from the "
                  "source of the second");
    }
    auto composite = compose_deformed({b.diagram, b.exponent},
                                      {a.diagram, a.exponent});
    OMorphism result{a.source, b.target, std::move(composite.pbr),
                     composite.exponent};
    try {
      validate_o_morphism(result, kind);
    } catch (Error const& e) {
      throw Error(ErrorCode::closure_violation, e.detail());
    }
    return result;
  }

  OMorphism epsilon_check(OObject const& obj) {
    std::size_t n = obj.outer().size();
    BoolMatrix  adj(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (obj.in_inner(obj.outer()[i])) {
        adj.set(i, n + i);
      } else {
        adj.set(n + i, i);
      }
    }
    return {obj, obj, Pbr::from_matrix(obj.outer(), obj.outer(), std::move(adj)),
            0};
  }

  bool is_planar(Pbr const& p, Labels const& domain_order,
                 Labels const& codomain_order) {
    if (!is_oriented_partial_brauer(p)) {
      throw Error(ErrorCode::not_a_brauer_diagram,
                  "planarity is defined for oriented partial Brauer diagrams");
    }
    auto rank = [](Labels const& declared, Labels const& order) {
      auto sorted_declared = declared;
      auto sorted_order    = order;
      std::sort(sorted_declared.begin(), sorted_declared.end());
      std::sort(sorted_order.begin(), sorted_order.end());
      if (sorted_declared != sorted_order) {
        throw Error(ErrorCode::not_a_brauer_diagram,
                    "order is not a permutation of the declared labels");
      }
      std::unordered_map<std::string, std::size_t> pos;
      for (std::size_t i = 0; i < order.size(); ++i) {
        pos.emplace(order[i], i);
      }
      std::vector<std::size_t> result;
      for (auto const& l : declared) {
        result.push_back(pos.at(l));
      }
      return result;
    };
    auto dom_rank = rank(p.domain(), domain_order);
    auto cod_rank = rank(p.codomain(), codomain_order);

    std::size_t const nx = p.domain_size();
    std::size_t const ny = p.codomain_size();
    // Codomain occupies circle positions 0..ny-1 top to bottom; the domain
    // continues bottom to top.
    auto circle = [&](std::size_t i) {
      return i < nx ? ny + (nx - 1 - dom_rank[i]) : cod_rank[i - nx];
    };

    std::vector<std::pair<std::size_t, std::size_t>> chords;
    for (std::size_t u = 0; u < p.num_vertices(); ++u) {
      bits::for_each(p.adjacency().row(u), [&](std::size_t v) {
        auto s = circle(u), t = circle(v);
        chords.emplace_back(std::min(s, t), std::max(s, t));
      });
    }
    for (std::size_t i = 0; i < chords.size(); ++i) {
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        auto [a, b] = chords[i];
        auto [c, d] = chords[j];
        bool interleave = (a < c && c < b && b < d) || (c < a && a < d && d < b);
        if (interleave) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_planar(Pbr const& p) {
    return is_planar(p, p.domain(), p.codomain());
  }

}  // namespace pbr
