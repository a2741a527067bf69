#include "pbr/classical.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include <boost/pending/disjoint_sets.hpp>

namespace pbr {

  namespace {
    std::size_t position(Labels const& labels, std::string const& l,
                         char const* what) {
      auto it = std::find(labels.begin(), labels.end(), l);
      if (it == labels.end()) {
        throw Error(ErrorCode::dangling_edge_endpoint,
                    std::string(what) + " label '" + l + "' is not declared");
      }
      return static_cast<std::size_t>(it - labels.begin());
    }

    void check_shapes(Labels const& first_codomain, Labels const& second_domain) {
      if (first_codomain != second_domain) {
        throw Error(ErrorCode::incomposable_shapes,
                    "codomain of the first factor differs from the domain of "
                    "the second");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // BinaryRelation
  ////////////////////////////////////////////////////////////////////////

  BinaryRelation::BinaryRelation(Labels domain, Labels codomain)
      : _domain(std::move(domain)),
        _codomain(std::move(codomain)),
        _matrix(_codomain.size(), _domain.size()) {
    check_distinct(_domain, "domain");
    check_distinct(_codomain, "codomain");
  }

  BinaryRelation BinaryRelation::from_pairs(Labels domain, Labels codomain,
                                            std::span<Pair const> pairs) {
    BinaryRelation result(std::move(domain), std::move(codomain));
    for (auto const& [x, y] : pairs) {
      auto i = position(result._domain, x, "domain");
      auto j = position(result._codomain, y, "codomain");
      if (result._matrix.get(j, i)) {
        throw Error(ErrorCode::duplicate_edge,
                    "pair (" + x + ", " + y + ") listed twice");
      }
      result._matrix.set(j, i);
    }
    return result;
  }

  BinaryRelation BinaryRelation::from_matrix(Labels domain, Labels codomain,
                                             BoolMatrix matrix) {
    BinaryRelation result(std::move(domain), std::move(codomain));
    if (matrix.rows() != result._codomain.size()
        || matrix.cols() != result._domain.size()) {
      throw Error(ErrorCode::incomposable_shapes,
                  "relation matrix must be |codomain| x |domain|");
    }
    result._matrix = std::move(matrix);
    return result;
  }

  BinaryRelation BinaryRelation::identity(Labels const& objects) {
    return from_matrix(objects, objects, BoolMatrix::identity(objects.size()));
  }

  BinaryRelation BinaryRelation::full(Labels const& domain,
                                      Labels const& codomain) {
    return from_matrix(domain, codomain,
                       BoolMatrix::full(codomain.size(), domain.size()));
  }

  std::vector<BinaryRelation::Pair> BinaryRelation::pairs() const {
    std::vector<Pair> result;
    for (std::size_t x = 0; x < _domain.size(); ++x) {
      for (std::size_t y = 0; y < _codomain.size(); ++y) {
        if (related(x, y)) {
          result.emplace_back(_domain[x], _codomain[y]);
        }
      }
    }
    return result;
  }

  BinaryRelation brel_compose(BinaryRelation const& b, BinaryRelation const& a) {
    check_shapes(a.codomain(), b.domain());
    return BinaryRelation::from_matrix(a.domain(), b.codomain(),
                                       b.matrix() * a.matrix());
  }

  BinaryRelation brel_transpose(BinaryRelation const& a) {
    return BinaryRelation::from_matrix(a.codomain(), a.domain(),
                                       a.matrix().transpose());
  }

  Pbr phi1(BinaryRelation const& a) {
    std::size_t nx = a.domain().size();
    std::size_t n  = nx + a.codomain().size();
    BoolMatrix  adj(n, n);
    for (std::size_t y = 0; y < a.codomain().size(); ++y) {
      bits::for_each(a.matrix().row(y),
                     [&](std::size_t x) { adj.set(x, nx + y); });
    }
    return Pbr::from_matrix(a.domain(), a.codomain(), std::move(adj));
  }

  Pbr phi2(BinaryRelation const& a) {
    std::size_t nx = a.domain().size();
    std::size_t n  = nx + a.codomain().size();
    BoolMatrix  adj(n, n);
    for (std::size_t y = 0; y < a.codomain().size(); ++y) {
      bits::for_each(a.matrix().row(y), [&](std::size_t x) {
        adj.set(x, nx + y);
        adj.set(nx + y, x);
      });
    }
    return Pbr::from_matrix(a.domain(), a.codomain(), std::move(adj));
  }

  bool is_in_subcategory_e_hat(Pbr const& p) {
    std::size_t nx = p.domain_size();
    for (std::size_t u = 0; u < p.num_vertices(); ++u) {
      bool ok = true;
      bits::for_each(p.adjacency().row(u), [&](std::size_t v) {
        ok = ok && u < nx && v >= nx;
      });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  RelationKinds relation_kind(BinaryRelation const& a) {
    // Columns are domain elements, rows codomain elements.
    BoolMatrix const& m          = a.matrix();
    BoolMatrix        t          = m.transpose();
    bool              col_one    = true;  // every column exactly one 1
    bool              col_le_one = true;
    bool              row_le_one = true;
    bool              row_ge_one = true;
    for (std::size_t x = 0; x < t.rows(); ++x) {
      auto c = t.row_count(x);
      col_one    = col_one && c == 1;
      col_le_one = col_le_one && c <= 1;
    }
    for (std::size_t y = 0; y < m.rows(); ++y) {
      auto c     = m.row_count(y);
      row_le_one = row_le_one && c <= 1;
      row_ge_one = row_ge_one && c >= 1;
    }
    RelationKinds k;
    k.map                = col_one;
    k.injective_map      = col_one && row_le_one;
    k.partial_injective  = col_le_one && row_le_one;
    k.surjective_map     = col_one && row_ge_one;
    k.partial_surjective = col_le_one && row_ge_one;
    return k;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(Labels domain, Labels codomain,
                       std::vector<std::size_t> block_of)
      : _domain(std::move(domain)), _codomain(std::move(codomain)) {
    check_distinct(_domain, "domain");
    check_distinct(_codomain, "codomain");
    if (block_of.size() != _domain.size() + _codomain.size()) {
      throw Error(ErrorCode::invalid_partition,
                  "block assignment does not cover X ⊔ Y");
    }
    std::unordered_map<std::size_t, std::size_t> renumber;
    _block_of.reserve(block_of.size());
    for (auto id : block_of) {
      auto [it, fresh] = renumber.emplace(id, renumber.size());
      _block_of.push_back(it->second);
    }
    _num_blocks = renumber.size();
  }

  Partition Partition::from_blocks(Labels domain, Labels codomain,
                                   std::span<std::vector<Vertex> const> blocks) {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::size_t    nx    = domain.size();
    std::vector<std::size_t> block_of(nx + codomain.size(), unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw Error(ErrorCode::invalid_partition, "empty block");
      }
      for (auto const& v : blocks[b]) {
        std::size_t i = v.side == Side::domain
                            ? position(domain, v.label, "domain")
                            : nx + position(codomain, v.label, "codomain");
        if (block_of[i] != unset) {
          throw Error(ErrorCode::invalid_partition,
                      "vertex '" + v.label + "' lies in two blocks");
        }
        block_of[i] = b;
      }
    }
    if (std::find(block_of.begin(), block_of.end(), unset) != block_of.end()) {
      throw Error(ErrorCode::invalid_partition, "blocks do not cover X ⊔ Y");
    }
    return Partition(std::move(domain), std::move(codomain), std::move(block_of));
  }

  Partition Partition::identity(Labels const& objects) {
    std::vector<std::size_t> block_of;
    for (int side = 0; side < 2; ++side) {
      for (std::size_t i = 0; i < objects.size(); ++i) {
        block_of.push_back(i);
      }
    }
    return Partition(objects, objects, std::move(block_of));
  }

  Partition Partition::singletons(Labels const& domain, Labels const& codomain) {
    std::vector<std::size_t> block_of(domain.size() + codomain.size());
    for (std::size_t i = 0; i < block_of.size(); ++i) {
      block_of[i] = i;
    }
    return Partition(domain, codomain, std::move(block_of));
  }

  std::vector<std::vector<std::size_t>> Partition::blocks() const {
    std::vector<std::vector<std::size_t>> result(_num_blocks);
    for (std::size_t v = 0; v < _block_of.size(); ++v) {
      result[_block_of[v]].push_back(v);
    }
    return result;
  }

  Vertex Partition::vertex(std::size_t index) const {
    return index < _domain.size()
               ? Vertex{_domain[index], Side::domain}
               : Vertex{_codomain[index - _domain.size()], Side::codomain};
  }

  namespace {
    // Union-find over X ⊔ Y ⊔ Z with a glued along Y to b.
    struct Glued {
      std::size_t                         nx, ny, nz;
      boost::disjoint_sets_with_storage<> sets;

      Glued(Partition const& b, Partition const& a)
          : nx(a.domain().size()),
            ny(a.codomain().size()),
            nz(b.codomain().size()),
            sets(nx + ny + nz) {
        unite_blocks(a, [](std::size_t i) { return i; });
        unite_blocks(b, [this](std::size_t j) { return nx + j; });
      }

      template <typename Map>
      void unite_blocks(Partition const& p, Map to_global) {
        std::vector<std::size_t> first(p.num_blocks(), p.num_vertices());
        for (std::size_t v = 0; v < p.num_vertices(); ++v) {
          auto& f = first[p.block_of(v)];
          if (f == p.num_vertices()) {
            f = v;
          } else {
            sets.union_set(to_global(f), to_global(v));
          }
        }
      }

      std::size_t root(std::size_t v) {
        return sets.find_set(v);
      }
    };
  }  // namespace

  Partition partition_compose(Partition const& b, Partition const& a) {
    check_shapes(a.codomain(), b.domain());
    Glued                    g(b, a);
    std::vector<std::size_t> block_of;
    for (std::size_t x = 0; x < g.nx; ++x) {
      block_of.push_back(g.root(x));
    }
    for (std::size_t z = 0; z < g.nz; ++z) {
      block_of.push_back(g.root(g.nx + g.ny + z));
    }
    return Partition(a.domain(), b.codomain(), std::move(block_of));
  }

  Pbr psi(Partition const& a) {
    std::size_t n = a.num_vertices();
    BoolMatrix  adj(n, n);
    for (auto const& block : a.blocks()) {
      for (auto u : block) {
        for (auto v : block) {
          adj.set(u, v);
        }
      }
    }
    return Pbr::from_matrix(a.domain(), a.codomain(), std::move(adj));
  }

  std::size_t partition_defect(Partition const& b, Partition const& a) {
    check_shapes(a.codomain(), b.domain());
    Glued             g(b, a);
    std::size_t const total = g.nx + g.ny + g.nz;
    std::vector<bool> touches_boundary(total, false);
    for (std::size_t v = 0; v < total; ++v) {
      if (v < g.nx || v >= g.nx + g.ny) {
        touches_boundary[g.root(v)] = true;
      }
    }
    std::vector<bool> counted(total, false);
    std::size_t       result = 0;
    for (std::size_t y = g.nx; y < g.nx + g.ny; ++y) {
      auto r = g.root(y);
      if (!touches_boundary[r] && !counted[r]) {
        counted[r] = true;
        ++result;
      }
    }
    return result;
  }

  DeformedPartition compose_deformed_partition(DeformedPartition const& b,
                                               DeformedPartition const& a) {
    return {partition_compose(b.partition, a.partition),
            a.exponent + b.exponent + partition_defect(b.partition, a.partition)};
  }

}  // namespace pbr
