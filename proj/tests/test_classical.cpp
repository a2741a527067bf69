#include <doctest.h>

#include "oracle/oracle.hpp"
#include "pbr/classical.hpp"
#include "pbr/deform.hpp"
#include "support.hpp"

using namespace pbr;
using support::error_of;
using support::set_of;

TEST_CASE("relation composition") {
  auto one  = BinaryRelation::full({"a"}, {"a"});
  auto none = BinaryRelation({"a"}, {"a"});
  CHECK(brel_compose(one, one) == one);
  CHECK(brel_compose(one, none) == none);

  support::Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    auto n = [&] { return support::uniform(rng, 0, 6); };
    auto x = n(), y = n(), z = n();
    auto a = support::random_relation(rng, x, y);
    auto b = support::random_relation(rng, y, z);
    CHECK(brel_compose(BinaryRelation::identity(set_of(y)), a) == a);
    REQUIRE(brel_compose(b, a) == oracle::naive_brel_compose(b, a));
    CHECK(brel_transpose(brel_transpose(a)) == a);
    CHECK(brel_transpose(brel_compose(b, a))
          == brel_compose(brel_transpose(a), brel_transpose(b)));
  }
  CHECK(brel_transpose(BinaryRelation::identity(set_of(3)))
        == BinaryRelation::identity(set_of(3)));
  CHECK(error_of([] {
          brel_compose(BinaryRelation({"b"}, {"c"}), BinaryRelation({"a"}, {"a"}));
        }) == ErrorCode::incomposable_shapes);
}

TEST_CASE("relation input validation") {
  std::vector<BinaryRelation::Pair> bad{{"a", "z"}};
  CHECK(error_of([&] { BinaryRelation::from_pairs({"a"}, {"b"}, bad); })
        == ErrorCode::dangling_edge_endpoint);
  std::vector<BinaryRelation::Pair> twice{{"a", "b"}, {"a", "b"}};
  CHECK(error_of([&] { BinaryRelation::from_pairs({"a"}, {"b"}, twice); })
        == ErrorCode::duplicate_edge);
}

TEST_CASE("first inclusion") {
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(phi1(BinaryRelation::identity(set_of(n))) == identity_hat(set_of(n)));
    CHECK(phi1(BinaryRelation(set_of(n), set_of(n + 1))).edge_count() == 0);
  }
  support::Rng rng(22);
  for (int i = 0; i < 500; ++i) {
    auto n = [&] { return support::uniform(rng, 0, 5); };
    auto x = n(), y = n(), z = n();
    auto a = support::random_relation(rng, x, y);
    auto b = support::random_relation(rng, y, z);
    REQUIRE(compose(phi1(b), phi1(a)) == phi1(brel_compose(b, a)));
    CHECK(is_in_subcategory_e_hat(phi1(a)));
  }
}

TEST_CASE("second inclusion is a faithful functor") {
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(phi2(BinaryRelation::identity(set_of(n))) == identity(set_of(n)));
  }
  support::Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    auto n = [&] { return support::uniform(rng, 0, 5); };
    auto x = n(), y = n(), z = n();
    auto a = support::random_relation(rng, x, y);
    auto b = support::random_relation(rng, y, z);
    REQUIRE(compose(phi2(b), phi2(a)) == phi2(brel_compose(b, a)));
  }
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<Pbr> images;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      BoolMatrix m(n, n);
      for (std::size_t c = 0; c < n * n; ++c) {
        if ((mask >> c) & 1U) {
          m.set(c / n, c % n);
        }
      }
      images.push_back(phi2(BinaryRelation::from_matrix(set_of(n), set_of(n), m)));
    }
    std::sort(images.begin(), images.end(),
              [](Pbr const& p, Pbr const& q) { return p.edges() < q.edges(); });
    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
  }
}

TEST_CASE("e-hat subcategory membership") {
  CHECK(!is_in_subcategory_e_hat(identity({"x"})));
  CHECK(is_in_subcategory_e_hat(identity({})));
  for (auto const& p : support::all_pbrs(1, 1)) {
    auto sandwich = compose(identity_hat({"0"}), compose(p, identity_hat({"0"})));
    CHECK(is_in_subcategory_e_hat(p) == (p == sandwich));
  }
}

TEST_CASE("relation kinds") {
  RelationKinds all{true, true, true, true, true};
  CHECK(relation_kind(BinaryRelation::identity(set_of(3))) == all);
  RelationKinds only_partial_injective{false, false, true, false, false};
  CHECK(relation_kind(BinaryRelation(set_of(2), set_of(2)))
        == only_partial_injective);
  RelationKinds empty_codomain{false, false, true, false, true};
  CHECK(relation_kind(BinaryRelation(set_of(2), {})) == empty_codomain);
  CHECK(relation_kind(BinaryRelation::full(set_of(2), set_of(2)))
        == RelationKinds{});

  // A surjection {0,1} -> {0} is a map and surjective (hence also partial
  // surjective) but not injective.
  auto s = BinaryRelation::full(set_of(2), set_of(1));
  CHECK(relation_kind(s) == RelationKinds{true, false, false, true, true});
}

TEST_CASE("partitions") {
  auto id = Partition::identity(set_of(2));
  CHECK(id.num_blocks() == 2);
  CHECK(psi(Partition::identity(set_of(3))) == identity_bar(set_of(3)));
  auto loops = psi(Partition::singletons(set_of(2), set_of(1)));
  CHECK(loops.edge_count() == 3);
  for (std::size_t v = 0; v < 3; ++v) {
    CHECK(loops.has_edge(v, v));
  }
  CHECK(partition_compose(Partition::singletons(set_of(2), set_of(3)),
                          Partition::singletons(set_of(1), set_of(2)))
        == Partition::singletons(set_of(1), set_of(3)));

  std::vector<std::vector<Vertex>> overlapping{{dom("0")}, {dom("0"), cod("0")}};
  CHECK(error_of([&] { Partition::from_blocks({"0"}, {"0"}, overlapping); })
        == ErrorCode::invalid_partition);
  std::vector<std::vector<Vertex>> missing{{dom("0")}};
  CHECK(error_of([&] { Partition::from_blocks({"0"}, {"0"}, missing); })
        == ErrorCode::invalid_partition);
  std::vector<std::vector<Vertex>> good{{cod("0"), dom("0")}};
  CHECK(Partition::from_blocks({"0"}, {"0"}, good) == Partition::identity({"0"}));
}

TEST_CASE("partition composition") {
  support::Rng rng(24);
  for (int i = 0; i < 500; ++i) {
    auto n = [&] { return support::uniform(rng, 0, 5); };
    auto x = n(), y = n(), z = n();
    auto a = support::random_partition(rng, x, y);
    auto b = support::random_partition(rng, y, z);
    CHECK(partition_compose(Partition::identity(set_of(y)), a) == a);
    CHECK(partition_compose(b, Partition::identity(set_of(y))) == b);
    REQUIRE(partition_compose(b, a) == oracle::naive_partition_compose(b, a));
    REQUIRE(compose(psi(b), psi(a)) == psi(partition_compose(b, a)));
  }
}

TEST_CASE("partition defect") {
  Partition one_y({}, {"y"}, {0});
  Partition y_one({"y"}, {}, {0});
  CHECK(partition_defect(y_one, one_y) == 1);

  support::Rng rng(25);
  for (int i = 0; i < 500; ++i) {
    auto n = [&] { return support::uniform(rng, 0, 5); };
    auto x = n(), y = n(), z = n();
    auto a = support::random_partition(rng, x, y);
    auto b = support::random_partition(rng, y, z);
    CHECK(partition_defect(Partition::identity(set_of(y)), a) == 0);
    CHECK(partition_defect(b, Partition::identity(set_of(y))) == 0);
    REQUIRE(partition_defect(b, a) == frothy_class_count(psi(a), psi(b)));

    DeformedPartition da{a, support::uniform(rng, 0, 3)};
    DeformedPartition db{b, support::uniform(rng, 0, 3)};
    auto              dp = compose_deformed_partition(db, da);
    auto              dq = compose_deformed({psi(b), db.exponent}, {psi(a), da.exponent});
    CHECK(psi(dp.partition) == dq.pbr);
    CHECK(dp.exponent == dq.exponent);
  }
}
