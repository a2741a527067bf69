#include "sequence_graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <utility>

namespace pbr::detail {

  SequenceGraph::SequenceGraph(std::vector<Pbr const*> factors)
      : _factors(std::move(factors)) {
    assert(!_factors.empty());
    _offsets.push_back(0);
    _offsets.push_back(_factors.front()->domain_size());
    for (auto const* f : _factors) {
      _offsets.push_back(_offsets.back() + f->codomain_size());
    }
    _num_vertices = _offsets.back();

    _lifted.reserve(_factors.size());
    for (std::size_t p = 0; p < _factors.size(); ++p) {
      BoolMatrix        lifted(_num_vertices, _num_vertices);
      BoolMatrix const& adj = _factors[p]->adjacency();
      for (std::size_t u = 0; u < adj.rows(); ++u) {
        std::size_t gu = to_global(p, u);
        bits::for_each(adj.row(u), [&](std::size_t w) {
          lifted.set(gu, to_global(p, w));
        });
      }
      _lifted_reverse.push_back(lifted.transpose());
      _lifted.push_back(std::move(lifted));
    }

    _boundary.assign(bits::words_for(_num_vertices), 0);
    for (std::size_t v = 0; v < _num_vertices; ++v) {
      if (is_boundary(v)) {
        bits::set(_boundary, v);
      }
    }
  }

  std::size_t SequenceGraph::object_of(std::size_t v) const noexcept {
    auto it = std::upper_bound(_offsets.begin(), _offsets.end(), v);
    return static_cast<std::size_t>(it - _offsets.begin()) - 1;
  }

  std::size_t SequenceGraph::to_global(std::size_t p,
                                       std::size_t local) const noexcept {
    std::size_t dom = object_size(p);
    return local < dom ? _offsets[p] + local : _offsets[p + 1] + (local - dom);
  }

  std::size_t SequenceGraph::to_local(std::size_t p,
                                      std::size_t v) const noexcept {
    return v < _offsets[p + 1] ? v - _offsets[p]
                               : object_size(p) + (v - _offsets[p + 1]);
  }

  std::vector<WordVec> SequenceGraph::reach(WordVec const& starts,
                                            bool           reverse) const {
    std::size_t const k     = num_factors();
    std::size_t const words = bits::words_for(_num_vertices);
    auto const&       mats  = reverse ? _lifted_reverse : _lifted;

    std::vector<WordVec> result(k, WordVec(words, 0));
    // Each tagged state (vertex, factor) enters the queue at most once.
    std::vector<std::pair<std::size_t, std::size_t>> queue;

    auto extend = [&](std::size_t v, std::size_t q) {
      auto row = mats[q].row(v);
      auto& r  = result[q];
      for (std::size_t w = 0; w < words; ++w) {
        auto fresh = row[w] & ~r[w];
        if (fresh == 0) {
          continue;
        }
        r[w] |= fresh;
        while (fresh != 0) {
          auto tz = static_cast<std::size_t>(std::countr_zero(fresh));
          queue.emplace_back(w * BoolMatrix::word_bits + tz, q);
          fresh &= fresh - 1;
        }
      }
    };

    // Factors whose vertex set contains v: those on either side of X_i.
    auto for_each_factor_at = [&](std::size_t v, auto&& f) {
      std::size_t obj = object_of(v);
      if (obj > 0) {
        f(obj - 1);
      }
      if (obj < k) {
        f(obj);
      }
    };

    bits::for_each(starts, [&](std::size_t s) {
      for_each_factor_at(s, [&](std::size_t q) { extend(s, q); });
    });

    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto [v, p] = queue[head];
      for_each_factor_at(v, [&](std::size_t q) {
        if (q != p) {
          extend(v, q);
        }
      });
    }
    return result;
  }

  Pbr SequenceGraph::composite() const {
    Pbr const&  first = *_factors.front();
    Pbr const&  last  = *_factors.back();
    std::size_t nx    = first.domain_size();
    std::size_t nz    = last.codomain_size();
    std::size_t zoff  = _offsets[num_factors()];

    auto to_result = [&](std::size_t v) { return v < nx ? v : nx + (v - zoff); };

    BoolMatrix adjacency(nx + nz, nx + nz);
    WordVec    start(bits::words_for(_num_vertices), 0);
    bits::for_each(_boundary, [&](std::size_t s) {
      std::fill(start.begin(), start.end(), 0);
      bits::set(start, s);
      auto    reached = reach(start, false);
      WordVec all(start.size(), 0);
      for (auto const& r : reached) {
        bits::unite(all, r);
      }
      for (std::size_t w = 0; w < all.size(); ++w) {
        all[w] &= _boundary[w];
      }
      std::size_t rs = to_result(s);
      bits::for_each(all, [&](std::size_t t) { adjacency.set(rs, to_result(t)); });
    });
    return Pbr::from_matrix(first.domain(), last.codomain(), std::move(adjacency));
  }

}  // namespace pbr::detail
