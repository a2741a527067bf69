#include <doctest.h>

#include <cmath>
#include <sstream>

#include "pbr/random.hpp"
#include "support.hpp"

using namespace pbr;

TEST_CASE("sampling") {
  Rng rng(51);
  CHECK(sample_relation(0, rng).matrix().empty());
  CHECK(sample_pbr(0, rng) == Pbr({}, {}));

  // n = 8: the edge count is Binomial(64, 1/2) per sample.
  double const trials = 10000;
  double       sum    = 0;
  for (int i = 0; i < trials; ++i) {
    sum += static_cast<double>(sample_relation(8, rng).matrix().count());
  }
  double const mean_error = std::abs(sum / trials - 32.0);
  CHECK(mean_error < 3 * std::sqrt(16.0 / trials));

  double pbr_sum = 0;
  for (int i = 0; i < 2000; ++i) {
    pbr_sum += static_cast<double>(sample_pbr(5, rng).edge_count());
  }
  CHECK(std::abs(pbr_sum / 2000 - 50.0) < 3 * std::sqrt(25.0 / 2000));

  // Tail bits beyond the last column stay clear.
  for (int i = 0; i < 100; ++i) {
    auto m = sample_relation(3, rng).matrix();
    CHECK(m.transpose().transpose() == m);
  }

  Rng r1 = trial_rng(7, 8, 3), r2 = trial_rng(7, 8, 3);
  CHECK(sample_pbr(8, r1) == sample_pbr(8, r2));
  Rng r3 = trial_rng(7, 8, 4);
  Rng r4 = trial_rng(7, 8, 3);
  CHECK(sample_pbr(8, r3) != sample_pbr(8, r4));
}

TEST_CASE("Wilson interval") {
  auto [lo, hi] = wilson_interval(50, 100);
  CHECK(lo == doctest::Approx(0.4038).epsilon(0.001));
  CHECK(hi == doctest::Approx(0.5962).epsilon(0.001));
  auto [zlo, zhi] = wilson_interval(0, 10);
  CHECK(zlo == 0.0);
  CHECK(zhi > 0.0);
  auto [flo, fhi] = wilson_interval(10, 10);
  CHECK(fhi == 1.0);
  CHECK(flo < 1.0);
}

TEST_CASE("mode names") {
  for (auto m : {ExperimentMode::binary_pair, ExperimentMode::binary_triple,
                 ExperimentMode::pbr_pair}) {
    CHECK(parse_mode(to_string(m)) == m);
  }
  CHECK(!parse_mode("nope").has_value());
}

TEST_CASE("single point relations give one quarter") {
  ExperimentConfig cfg{{1}, 10000, 3, ExperimentMode::binary_pair};
  auto             r = run_experiment(cfg);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].ci_low <= 0.25);
  CHECK(r.records[0].ci_high >= 0.25);
}

TEST_CASE("exact frequencies at tiny sizes") {
  // Exhaustive count of full products of two relations on n points.
  for (std::size_t n = 1; n <= 2; ++n) {
    std::size_t const cells = n * n;
    std::size_t       full  = 0;
    auto              rel   = [&](std::uint64_t mask) {
      BoolMatrix m(n, n);
      for (std::size_t c = 0; c < cells; ++c) {
        if ((mask >> c) & 1U) {
          m.set(c / n, c % n);
        }
      }
      return BinaryRelation::from_matrix(support::set_of(n), support::set_of(n), m);
    };
    std::uint64_t const count = std::uint64_t{1} << cells;
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = 0; b < count; ++b) {
        full += brel_compose(rel(a), rel(b)).matrix().is_full();
      }
    }
    double exact = static_cast<double>(full) / static_cast<double>(count * count);
    ExperimentConfig cfg{{n}, 20000, 9, ExperimentMode::binary_pair};
    auto             rec = run_experiment(cfg).records[0];
    CHECK(rec.ci_low <= exact);
    CHECK(rec.ci_high >= exact);
  }
}

TEST_CASE("experiments are deterministic and thread independent") {
  for (auto mode : {ExperimentMode::binary_pair, ExperimentMode::binary_triple,
                    ExperimentMode::pbr_pair}) {
    ExperimentConfig one{{2, 6, 12}, 300, 42, mode, 1};
    ExperimentConfig many{{2, 6, 12}, 300, 42, mode, 4};
    auto             a = run_experiment(one);
    auto             b = run_experiment(many);
    CHECK(a.records == b.records);
    CHECK(a.records == run_experiment(one).records);
    CHECK(a.sufficiency_violations == 0);
    CHECK(a.mechanism_violations == 0);
    for (auto const& rec : a.records) {
      CHECK(rec.full_count <= rec.trials);
      CHECK(rec.fraction >= 0.0);
      CHECK(rec.fraction <= 1.0);
    }
  }
  CHECK(support::error_of([] { run_experiment({{}, 10, 1}); }).has_value());
  CHECK(support::error_of([] { run_experiment({{3}, 0, 1}); }).has_value());
}

TEST_CASE("CSV layout") {
  ExperimentConfig   cfg{{2, 3}, 50, 42, ExperimentMode::pbr_pair};
  std::ostringstream out;
  write_csv(out, run_experiment(cfg));
  std::istringstream in(out.str());
  std::string        line;
  std::getline(in, line);
  CHECK(line == "mode,n,trials,full_count,fraction,ci_low,ci_high,seed");
  int rows = 0;
  while (std::getline(in, line)) {
    CHECK(line.rfind("pbr-pair,", 0) == 0);
    CHECK(line.substr(line.rfind(',') + 1) == "42");
    ++rows;
  }
  CHECK(rows == 2);
}
