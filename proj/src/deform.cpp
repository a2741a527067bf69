#include "pbr/deform.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "sequence_graph.hpp"

namespace pbr {

  namespace {
    struct GlobalEdge {
      std::size_t factor;
      std::size_t source;
      std::size_t target;
    };

    std::vector<Pbr const*> pointers(AlephSequence const& seq) {
      std::vector<Pbr const*> result;
      for (auto const& p : seq.pbrs()) {
        result.push_back(&p);
      }
      return result;
    }

    // A tagged edge (u, w) of factor p is non-frothy iff u is a boundary
    // vertex or the end of a boundary-started walk whose last factor is not
    // p, and w is a boundary vertex or the start of a boundary-ending walk
    // whose first factor is not p.
    std::vector<GlobalEdge> global_frothy_edges(detail::SequenceGraph const& g) {
      auto const& boundary = g.boundary();
      auto        forward  = g.reach(boundary, false);
      auto        backward = g.reach(boundary, true);

      auto reached_other = [&](std::vector<detail::WordVec> const& sets,
                               std::size_t v, std::size_t p) {
        if (bits::test(boundary, v)) {
          return true;
        }
        for (std::size_t q = 0; q < sets.size(); ++q) {
          if (q != p && bits::test(sets[q], v)) {
            return true;
          }
        }
        return false;
      };

      std::vector<GlobalEdge> result;
      for (std::size_t p = 0; p < g.num_factors(); ++p) {
        BoolMatrix const& m = g.lifted(p);
        for (std::size_t u = 0; u < m.rows(); ++u) {
          bool head_ok = reached_other(forward, u, p);
          bits::for_each(m.row(u), [&](std::size_t w) {
            if (!(head_ok && reached_other(backward, w, p))) {
              result.push_back({p, u, w});
            }
          });
        }
      }
      return result;
    }

    std::size_t count_classes(std::vector<GlobalEdge> const& frothy,
                              std::size_t                    num_vertices) {
      using Graph = boost::adjacency_list<boost::vecS, boost::vecS,
                                          boost::directedS>;
      std::vector<std::vector<std::size_t>> leaving(num_vertices);
      for (std::size_t i = 0; i < frothy.size(); ++i) {
        leaving[frothy[i].source].push_back(i);
      }
      Graph h(frothy.size());
      for (std::size_t i = 0; i < frothy.size(); ++i) {
        for (std::size_t j : leaving[frothy[i].target]) {
          if (frothy[j].factor != frothy[i].factor) {
            boost::add_edge(i, j, h);
          }
        }
      }
      std::vector<std::size_t> component(frothy.size());
      std::size_t              num = boost::strong_components(
          h,
          boost::make_iterator_property_map(component.begin(),
                                            boost::get(boost::vertex_index, h)));
      std::vector<std::size_t> sizes(num, 0);
      for (auto c : component) {
        ++sizes[c];
      }
      return static_cast<std::size_t>(
          std::count_if(sizes.begin(), sizes.end(), [](auto s) { return s >= 2; }));
    }
  }  // namespace

  std::vector<TaggedEdge> frothy_edges(AlephSequence const& seq) {
    detail::SequenceGraph   g(pointers(seq));
    std::vector<TaggedEdge> result;
    for (auto const& e : global_frothy_edges(g)) {
      Pbr const& f = g.factor(e.factor);
      result.push_back({{f.vertex(g.to_local(e.factor, e.source)),
                         f.vertex(g.to_local(e.factor, e.target))},
                        e.factor});
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::size_t frothy_class_count(AlephSequence const& seq) {
    detail::SequenceGraph g(pointers(seq));
    return count_classes(global_frothy_edges(g), g.num_vertices());
  }

  std::size_t frothy_class_count(Pbr const& alpha, Pbr const& beta) {
    check_composable(alpha, beta);
    detail::SequenceGraph g({&alpha, &beta});
    return count_classes(global_frothy_edges(g), g.num_vertices());
  }

  DeformedMorphism compose_deformed(DeformedMorphism const& b,
                                    DeformedMorphism const& a) {
    return {compose(b.pbr, a.pbr),
            a.exponent + b.exponent + frothy_class_count(a.pbr, b.pbr)};
  }

}  // namespace pbr
