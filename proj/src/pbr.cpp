#include "pbr/pbr.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "sequence_graph.hpp"

namespace pbr {

  namespace {
    std::optional<Error> first_duplicate(Labels const& labels, char const* what) {
      std::unordered_set<std::string> seen;
      for (auto const& l : labels) {
        if (!seen.insert(l).second) {
          return Error(ErrorCode::duplicate_label,
                       std::string(what) + " label '" + l + "' repeated");
        }
      }
      return std::nullopt;
    }

    char side_char(Side s) {
      return s == Side::domain ? 'd' : 'c';
    }

    std::string describe(Vertex const& v) {
      return v.label + "@" + side_char(v.side);
    }

    // Vertex -> index lookup built once per validation / construction.
    class VertexIndex {
     public:
      VertexIndex(Labels const& domain, Labels const& codomain) {
        for (std::size_t i = 0; i < domain.size(); ++i) {
          _dom.emplace(domain[i], i);
        }
        for (std::size_t i = 0; i < codomain.size(); ++i) {
          _cod.emplace(codomain[i], domain.size() + i);
        }
      }

      std::optional<std::size_t> find(Vertex const& v) const {
        auto const& m  = v.side == Side::domain ? _dom : _cod;
        auto        it = m.find(v.label);
        if (it == m.end()) {
          return std::nullopt;
        }
        return it->second;
      }

     private:
      std::unordered_map<std::string, std::size_t> _dom;
      std::unordered_map<std::string, std::size_t> _cod;
    };
  }  // namespace

  void check_distinct(Labels const& labels, char const* what) {
    if (auto err = first_duplicate(labels, what)) {
      throw *err;
    }
  }

  std::optional<Error> validate(Labels const& domain, Labels const& codomain,
                                std::span<Edge const> edges) {
    if (auto err = first_duplicate(domain, "domain")) {
      return err;
    }
    if (auto err = first_duplicate(codomain, "codomain")) {
      return err;
    }
    VertexIndex index(domain, codomain);
    std::size_t n = domain.size() + codomain.size();
    BoolMatrix  seen(n, n);
    for (auto const& e : edges) {
      auto s = index.find(e.source);
      auto t = index.find(e.target);
      if (!s || !t) {
        return Error(ErrorCode::dangling_edge_endpoint,
                     "edge " + describe(e.source) + " -> " + describe(e.target)
                         + " references an undeclared vertex");
      }
      if (seen.get(*s, *t)) {
        return Error(ErrorCode::duplicate_edge,
                     "edge " + describe(e.source) + " -> " + describe(e.target)
                         + " listed twice");
      }
      seen.set(*s, *t);
    }
    return std::nullopt;
  }

  Pbr::Pbr(Labels domain, Labels codomain)
      : _domain(std::move(domain)), _codomain(std::move(codomain)) {
    check_distinct(_domain, "domain");
    check_distinct(_codomain, "codomain");
    _adjacency = BoolMatrix(num_vertices(), num_vertices());
  }

  Pbr Pbr::from_edges(Labels domain, Labels codomain,
                      std::span<Edge const> edges) {
    if (auto err = validate(domain, codomain, edges)) {
      throw *err;
    }
    VertexIndex index(domain, codomain);
    Pbr         result(std::move(domain), std::move(codomain));
    for (auto const& e : edges) {
      result._adjacency.set(*index.find(e.source), *index.find(e.target));
    }
    return result;
  }

  Pbr Pbr::from_matrix(Labels domain, Labels codomain, BoolMatrix adjacency) {
    Pbr result(std::move(domain), std::move(codomain));
    if (adjacency.rows() != result.num_vertices()
        || adjacency.cols() != result.num_vertices()) {
      throw Error(ErrorCode::incomposable_shapes,
                  "adjacency matrix does not match |domain| + |codomain|");
    }
    result._adjacency = std::move(adjacency);
    return result;
  }

  Vertex Pbr::vertex(std::size_t index) const {
    return index < _domain.size()
               ? Vertex{_domain[index], Side::domain}
               : Vertex{_codomain[index - _domain.size()], Side::codomain};
  }

  std::optional<std::size_t> Pbr::index_of(Vertex const& v) const {
    auto const& labels = v.side == Side::domain ? _domain : _codomain;
    auto        it     = std::find(labels.begin(), labels.end(), v.label);
    if (it == labels.end()) {
      return std::nullopt;
    }
    auto pos = static_cast<std::size_t>(it - labels.begin());
    return v.side == Side::domain ? pos : _domain.size() + pos;
  }

  bool Pbr::has_edge(Vertex const& source, Vertex const& target) const {
    auto s = index_of(source);
    auto t = index_of(target);
    return s && t && has_edge(*s, *t);
  }

  std::vector<Edge> Pbr::edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count());
    for (std::size_t u = 0; u < num_vertices(); ++u) {
      bits::for_each(_adjacency.row(u), [&](std::size_t v) {
        result.push_back({vertex(u), vertex(v)});
      });
    }
    return result;
  }

  void check_composable(Pbr const& alpha, Pbr const& beta) {
    if (alpha.codomain() != beta.domain()) {
      throw Error(ErrorCode::incomposable_shapes,
                  "codomain of the first factor differs from the domain of "
                  "the second");
    }
  }

  Pbr compose(Pbr const& beta, Pbr const& alpha) {
    check_composable(alpha, beta);
    return detail::SequenceGraph({&alpha, &beta}).composite();
  }

  Pbr identity(Labels const& objects) {
    std::size_t n = objects.size();
    BoolMatrix  adj(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      adj.set(i, n + i);
      adj.set(n + i, i);
    }
    return Pbr::from_matrix(objects, objects, std::move(adj));
  }

  Pbr identity_bar(Labels const& objects) {
    std::size_t n   = objects.size();
    BoolMatrix  adj = identity(objects).adjacency();
    for (std::size_t i = 0; i < 2 * n; ++i) {
      adj.set(i, i);
    }
    return Pbr::from_matrix(objects, objects, std::move(adj));
  }

  Pbr identity_hat(Labels const& objects) {
    std::size_t n = objects.size();
    BoolMatrix  adj(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      adj.set(i, n + i);
    }
    return Pbr::from_matrix(objects, objects, std::move(adj));
  }

  Pbr full(Labels const& domain, Labels const& codomain) {
    std::size_t n = domain.size() + codomain.size();
    return Pbr::from_matrix(domain, codomain, BoolMatrix::full(n, n));
  }

  namespace {
    Labels qualified(Labels const& first, Labels second) {
      auto collides = [&] {
        std::unordered_set<std::string> taken(first.begin(), first.end());
        return std::any_of(second.begin(), second.end(), [&](auto const& l) {
          return taken.count(l) != 0;
        });
      };
      while (collides()) {
        for (auto& l : second) {
          l = "1:" + l;
        }
      }
      return second;
    }
  }  // namespace

  Pbr tensor(Pbr const& a, Pbr const& b) {
    Labels domain = a.domain();
    Labels codomain = a.codomain();
    Labels bdom   = qualified(a.domain(), b.domain());
    Labels bcod   = qualified(a.codomain(), b.codomain());
    domain.insert(domain.end(), bdom.begin(), bdom.end());
    codomain.insert(codomain.end(), bcod.begin(), bcod.end());

    std::size_t const ax = a.domain_size(), ay = a.codomain_size();
    std::size_t const bx = b.domain_size();
    std::size_t const nx = domain.size();
    auto from_a = [&](std::size_t i) { return i < ax ? i : nx + (i - ax); };
    auto from_b = [&](std::size_t i) {
      return i < bx ? ax + i : nx + ay + (i - bx);
    };

    std::size_t n = domain.size() + codomain.size();
    BoolMatrix  adj(n, n);
    for (std::size_t u = 0; u < a.num_vertices(); ++u) {
      bits::for_each(a.adjacency().row(u),
                     [&](std::size_t v) { adj.set(from_a(u), from_a(v)); });
    }
    for (std::size_t u = 0; u < b.num_vertices(); ++u) {
      bits::for_each(b.adjacency().row(u),
                     [&](std::size_t v) { adj.set(from_b(u), from_b(v)); });
    }
    return Pbr::from_matrix(std::move(domain), std::move(codomain), std::move(adj));
  }

  Pbr star(Pbr const& a) {
    std::size_t const nx = a.domain_size(), ny = a.codomain_size();
    // Old domain x_i becomes codomain index ny + i; old codomain y_j becomes
    // domain index j.
    auto mirror = [&](std::size_t i) { return i < nx ? ny + i : i - nx; };
    BoolMatrix adj(nx + ny, nx + ny);
    for (std::size_t u = 0; u < a.num_vertices(); ++u) {
      bits::for_each(a.adjacency().row(u),
                     [&](std::size_t v) { adj.set(mirror(u), mirror(v)); });
    }
    return Pbr::from_matrix(a.codomain(), a.domain(), std::move(adj));
  }

  AlephSequence::AlephSequence(std::vector<Pbr> pbrs) : _pbrs(std::move(pbrs)) {
    if (_pbrs.empty()) {
      throw Error(ErrorCode::incomposable_shapes, "empty sequence");
    }
    for (std::size_t i = 0; i + 1 < _pbrs.size(); ++i) {
      check_composable(_pbrs[i], _pbrs[i + 1]);
    }
  }

  Labels const& AlephSequence::object(std::size_t i) const {
    return i == 0 ? _pbrs.front().domain() : _pbrs.at(i - 1).codomain();
  }

  Pbr AlephSequence::composite() const {
    std::vector<Pbr const*> ptrs;
    for (auto const& p : _pbrs) {
      ptrs.push_back(&p);
    }
    return detail::SequenceGraph(std::move(ptrs)).composite();
  }

}  // namespace pbr
