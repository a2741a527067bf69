#include <doctest.h>

#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace pbr;
using support::set_of;

TEST_CASE("oracle composition on small cases") {
  for (std::size_t n = 0; n <= 3; ++n) {
    support::Rng rng(n);
    Pbr          a = support::random_pbr(rng, n, n);
    CHECK(oracle::naive_compose(identity(set_of(n)), a) == a);
    CHECK(oracle::naive_compose(a, identity(set_of(n))) == a);
  }
  CHECK(oracle::naive_compose(Pbr({"y"}, {}), Pbr({}, {"y"})) == Pbr({}, {}));
}

TEST_CASE("oracle frothy classes on small cases") {
  std::vector<Edge> ea{{cod("y"), cod("y")}};
  std::vector<Edge> eb{{dom("y"), dom("y")}};
  AlephSequence     loops({Pbr::from_edges({}, {"y"}, ea),
                           Pbr::from_edges({"y"}, {}, eb)});
  CHECK(oracle::naive_frothy(loops).size() == 2);
  CHECK(oracle::naive_frothy_classes(loops) == 1);

  support::Rng rng(71);
  Pbr          a = support::random_pbr(rng, 2, 3);
  CHECK(oracle::naive_frothy_classes(AlephSequence({identity(set_of(2)), a})) == 0);
  CHECK(oracle::naive_frothy_classes(AlephSequence({a, identity(set_of(3))})) == 0);

  Pbr big_a = full({}, set_of(4));
  Pbr big_b = full(set_of(4), {});
  CHECK(support::error_of([&] {
          oracle::naive_frothy_classes(AlephSequence({big_a, big_b}));
        }) == ErrorCode::instance_too_large);
}

TEST_CASE("oracle relation and partition composition") {
  auto id = BinaryRelation::identity(set_of(3));
  CHECK(oracle::naive_brel_compose(id, id) == id);
  auto pid = Partition::identity(set_of(2));
  CHECK(oracle::naive_partition_compose(pid, pid) == pid);
}
