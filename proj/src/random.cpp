#include "pbr/random.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

#include "pbr/factor.hpp"

namespace pbr {

  Labels numbered_labels(std::size_t n) {
    Labels labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(std::to_string(i));
    }
    return labels;
  }

  namespace {
    BoolMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
      BoolMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        auto row = m.row(r);
        for (auto& word : row) {
          word = rng();
        }
        if (!row.empty()) {
          row.back() &= m.tail_mask();
        }
      }
      return m;
    }

    struct Counts {
      std::size_t full                   = 0;
      std::size_t sufficiency_fired      = 0;
      std::size_t sufficiency_violations = 0;
      std::size_t mechanism_fired        = 0;
      std::size_t mechanism_violations   = 0;

      Counts& operator+=(Counts const& o) {
        full += o.full;
        sufficiency_fired += o.sufficiency_fired;
        sufficiency_violations += o.sufficiency_violations;
        mechanism_fired += o.mechanism_fired;
        mechanism_violations += o.mechanism_violations;
        return *this;
      }
    };

    bool full(BinaryRelation const& r) {
      return r.matrix().is_full();
    }

    // One sampled product; x ∘ x' applies x' first.
    void trial(ExperimentMode mode, std::size_t n, Rng& rng, Counts& c) {
      switch (mode) {
        case ExperimentMode::binary_pair: {
          auto a  = sample_relation(n, rng);
          auto a1 = sample_relation(n, rng);
          c.full += full(brel_compose(a, a1));
          break;
        }
        case ExperimentMode::binary_triple: {
          auto a       = sample_relation(n, rng);
          auto a1      = sample_relation(n, rng);
          auto a2      = sample_relation(n, rng);
          auto right   = brel_compose(a1, a2);
          bool product = full(brel_compose(a, right));
          c.full += product;
          if (full(right) && full(brel_compose(a, a1))) {
            ++c.mechanism_fired;
            c.mechanism_violations += !product;
          }
          break;
        }
        case ExperimentMode::pbr_pair: {
          auto b       = sample_pbr(n, rng);
          auto a       = sample_pbr(n, rng);
          bool product = compose(b, a).adjacency().is_full();
          c.full += product;
          auto ab = decompose_blocks(a);
          auto bb = decompose_blocks(b);
          bool conditions
              = full(brel_compose(bb.a12, ab.a12))
                && full(brel_compose(ab.a21, bb.a21))
                && full(brel_compose(ab.a21, brel_compose(bb.a11, ab.a12)))
                && full(brel_compose(bb.a12, brel_compose(ab.a22, bb.a21)));
          if (conditions) {
            ++c.sufficiency_fired;
            c.sufficiency_violations += !product;
          }
          break;
        }
      }
    }
  }  // namespace

  BinaryRelation sample_relation(std::size_t n, Rng& rng) {
    auto labels = numbered_labels(n);
    return BinaryRelation::from_matrix(labels, labels, random_matrix(n, n, rng));
  }

  Pbr sample_pbr(std::size_t n, Rng& rng) {
    auto labels = numbered_labels(n);
    return Pbr::from_matrix(labels, labels, random_matrix(2 * n, 2 * n, rng));
  }

  Rng trial_rng(std::uint64_t seed, std::size_t n, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n),
                      static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32)};
    return Rng(seq);
  }

  std::string_view to_string(ExperimentMode mode) {
    switch (mode) {
      case ExperimentMode::binary_pair:
        return "binary-pair";
      case ExperimentMode::binary_triple:
        return "binary-triple";
      case ExperimentMode::pbr_pair:
        return "pbr-pair";
    }
    return "";
  }

  std::optional<ExperimentMode> parse_mode(std::string_view text) {
    for (auto m : {ExperimentMode::binary_pair, ExperimentMode::binary_triple,
                   ExperimentMode::pbr_pair}) {
      if (to_string(m) == text) {
        return m;
      }
    }
    return std::nullopt;
  }

  std::pair<double, double> wilson_interval(std::size_t k, std::size_t n) {
    if (n == 0) {
      return {0.0, 1.0};
    }
    constexpr double z      = 1.959963984540054;
    double const     nn     = static_cast<double>(n);
    double const     p      = static_cast<double>(k) / nn;
    double const     denom  = 1 + z * z / nn;
    double const     centre = (p + z * z / (2 * nn)) / denom;
    double const     half
        = z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn)) / denom;
    return {k == 0 ? 0.0 : std::max(0.0, centre - half),
            k == n ? 1.0 : std::min(1.0, centre + half)};
  }

  ExperimentResult run_experiment(ExperimentConfig const& cfg) {
    if (cfg.sizes.empty() || cfg.samples_per_size == 0) {
      throw Error(ErrorCode::assertion_failure,
                  "experiment needs at least one size and one sample");
    }
    unsigned threads = cfg.threads != 0
                           ? cfg.threads
                           : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::size_t>(threads, cfg.samples_per_size));

    ExperimentResult result;
    result.config        = cfg;
    result.rng_algorithm = "mt19937_64 seeded by seed_seq(seed, n, trial)";
    for (auto n : cfg.sizes) {
      std::vector<Counts>      partial(threads);
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < cfg.samples_per_size; i += threads) {
            Rng rng = trial_rng(cfg.seed, n, i);
            trial(cfg.mode, n, rng, partial[t]);
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
      Counts total;
      for (auto const& c : partial) {
        total += c;
      }
      auto [lo, hi] = wilson_interval(total.full, cfg.samples_per_size);
      result.records.push_back(
          {n, cfg.samples_per_size, total.full,
           static_cast<double>(total.full) / cfg.samples_per_size, lo, hi});
      result.sufficiency_fired += total.sufficiency_fired;
      result.sufficiency_violations += total.sufficiency_violations;
      result.mechanism_fired += total.mechanism_fired;
      result.mechanism_violations += total.mechanism_violations;
    }
    return result;
  }

  void write_csv(std::ostream& out, ExperimentResult const& result) {
    out << "mode,n,trials,full_count,fraction,ci_low,ci_high,seed\n";
    for (auto const& r : result.records) {
      out << to_string(result.config.mode) << ',' << r.n << ',' << r.trials
          << ',' << r.full_count << ',' << r.fraction << ',' << r.ci_low << ','
          << r.ci_high << ',' << result.config.seed << '\n';
    }
  }

}  // namespace pbr
