#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pbr/classical.hpp"
#include "pbr/deform.hpp"
#include "pbr/factor.hpp"
#include "pbr/json_io.hpp"
#include "pbr/oriented.hpp"
#include "pbr/random.hpp"
#include "pbr/render.hpp"

namespace pbr::cli {

  namespace {
    int exit_code(ErrorCode code) {
      switch (code) {
        case ErrorCode::incomposable_shapes:
          return 3;
        case ErrorCode::not_a_brauer_diagram:
          return 1;
        case ErrorCode::closure_violation:
        case ErrorCode::assertion_failure:
        case ErrorCode::instance_too_large:
          return 4;
        default:
          return 2;
      }
    }

    void report(std::ostream& err, std::string_view code,
                std::string const& detail) {
      err << Json{{"error", code}, {"detail", detail}}.dump() << '\n';
    }

    Json read_json(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error(ErrorCode::parse_error, "cannot read '" + path + "'");
      }
      std::stringstream buffer;
      buffer << in.rdbuf();
      return parse_json(buffer.str());
    }

    // Writes to the output file if one was given, else to out.
    void emit(std::string const& output, std::ostream& out,
              std::string const& text) {
      if (output.empty()) {
        out << text;
        return;
      }
      std::ofstream file(output);
      if (!file) {
        throw Error(ErrorCode::parse_error, "cannot write '" + output + "'");
      }
      file << text;
    }

    std::string dump(Json const& j) {
      return j.dump(2) + '\n';
    }
  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Partitioned binary relations: composition, deformation, "
                 "factorization, embeddings and random products"};
    app.require_subcommand(1);

    std::string output;
    auto        add_output = [&](CLI::App* sub) {
      sub->add_option("-o,--output", output, "Write the result here");
    };

    // compose / deform-compose
    std::string first, second;
    bool        left_to_right = false;
    auto add_pair = [&](CLI::App* sub) {
      sub->add_option("first", first, "Outer factor (applied second)")->required();
      sub->add_option("second", second, "Inner factor (applied first)")->required();
      sub->add_flag("--left-to-right", left_to_right,
                    "Read the files in application order: first, then second");
      add_output(sub);
    };
    auto* compose_cmd = app.add_subcommand("compose", "Compose two Pbrs");
    add_pair(compose_cmd);
    auto* deform_cmd = app.add_subcommand(
        "deform-compose", "Deformed composition, reporting the exponent");
    add_pair(deform_cmd);

    std::string input;
    auto add_input = [&](CLI::App* sub, char const* what) {
      sub->add_option("input", input, what)->required();
      add_output(sub);
    };
    auto* factor_cmd = app.add_subcommand(
        "factor", "Polarized factorization left ∘ pure ∘ right");
    add_input(factor_cmd, "Pbr JSON");
    auto* phi1_cmd = app.add_subcommand("embed-phi1",
                                        "Relation to Pbr, forward edges only");
    add_input(phi1_cmd, "Relation JSON");
    auto* phi2_cmd = app.add_subcommand(
        "embed-phi2", "Relation to Pbr, edges in both directions");
    add_input(phi2_cmd, "Relation JSON");
    auto* psi_cmd
        = app.add_subcommand("embed-psi", "Partition to Pbr, blocks as cliques");
    add_input(psi_cmd, "Partition JSON");
    auto* render_cmd = app.add_subcommand("render", "Emit a DOT digraph");
    add_input(render_cmd, "Pbr JSON");

    auto* check_cmd = app.add_subcommand(
        "check", "Test a predicate; exit 0 if it holds, 1 if not");
    check_cmd->add_option("input", input, "Pbr JSON")->required();
    using Predicate = std::function<bool(Pbr const&)>;
    std::vector<std::pair<std::string, Predicate>> const predicates{
        {"pure", is_pure},
        {"left-polarized", is_left_polarized},
        {"right-polarized", is_right_polarized},
        {"oriented-brauer", is_oriented_brauer},
        {"oriented-partial-brauer", is_oriented_partial_brauer},
        {"planar", [](Pbr const& p) { return is_planar(p); }},
        {"in-e-hat-subcategory", is_in_subcategory_e_hat},
    };
    std::vector<bool> chosen(predicates.size(), false);
    auto*             group = check_cmd->add_option_group("predicate");
    for (std::size_t i = 0; i < predicates.size(); ++i) {
      group->add_flag_callback("--" + predicates[i].first,
                               [&chosen, i] { chosen[i] = true; });
    }
    group->require_option(1);

    auto* experiment_cmd = app.add_subcommand(
        "experiment", "Monte Carlo frequency of full random products (CSV)");
    std::string              mode_text = "binary-pair";
    std::vector<std::size_t> sizes{8, 16, 32, 64};
    std::size_t              samples = 1000;
    std::uint64_t            seed    = 42;
    unsigned                 threads = 0;
    experiment_cmd
        ->add_option("--mode", mode_text,
                     "binary-pair, binary-triple or pbr-pair")
        ->check(CLI::IsMember({"binary-pair", "binary-triple", "pbr-pair"}));
    experiment_cmd->add_option("--sizes", sizes, "Comma separated |X| values")
        ->delimiter(',');
    experiment_cmd->add_option("--samples", samples, "Samples per size")
        ->check(CLI::PositiveNumber);
    experiment_cmd->add_option("--seed", seed, "Base seed");
    experiment_cmd->add_option("--threads", threads, "Worker threads (0 = all)");
    add_output(experiment_cmd);

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      report(err, to_string(ErrorCode::parse_error), e.what());
      return 2;
    }

    try {
      auto ordered = [&] {
        // Categorical order by default: `compose b a` is b ∘ a.
        return left_to_right ? std::pair{second, first} : std::pair{first, second};
      };
      if (compose_cmd->parsed()) {
        auto [outer, inner] = ordered();
        Pbr b               = pbr_from_json(read_json(outer));
        Pbr a               = pbr_from_json(read_json(inner));
        emit(output, out, dump(to_json(compose(b, a))));
      } else if (deform_cmd->parsed()) {
        auto [outer, inner] = ordered();
        auto b              = deformed_from_json(read_json(outer));
        auto a              = deformed_from_json(read_json(inner));
        emit(output, out, dump(to_json(compose_deformed(b, a))));
      } else if (factor_cmd->parsed()) {
        auto f = factorize(pbr_from_json(read_json(input)));
        emit(output, out,
             dump({{"left", to_json(f.left)},
                   {"pure", to_json(f.pure.underlying())},
                   {"right", to_json(f.right)}}));
      } else if (phi1_cmd->parsed()) {
        emit(output, out,
             dump(to_json(phi1(relation_from_json(read_json(input))))));
      } else if (phi2_cmd->parsed()) {
        emit(output, out,
             dump(to_json(phi2(relation_from_json(read_json(input))))));
      } else if (psi_cmd->parsed()) {
        emit(output, out,
             dump(to_json(psi(partition_from_json(read_json(input))))));
      } else if (render_cmd->parsed()) {
        emit(output, out, to_dot(pbr_from_json(read_json(input))));
      } else if (check_cmd->parsed()) {
        Pbr p = pbr_from_json(read_json(input));
        for (std::size_t i = 0; i < predicates.size(); ++i) {
          if (chosen[i]) {
            bool holds = predicates[i].second(p);
            out << Json{{"predicate", predicates[i].first}, {"holds", holds}}.dump()
                << '\n';
            return holds ? 0 : 1;
          }
        }
      } else if (experiment_cmd->parsed()) {
        ExperimentConfig cfg;
        cfg.sizes            = sizes;
        cfg.samples_per_size = samples;
        cfg.seed             = seed;
        cfg.mode             = *parse_mode(mode_text);
        cfg.threads          = threads;
        auto result          = run_experiment(cfg);
        std::ostringstream csv;
        write_csv(csv, result);
        emit(output, out, csv.str());
        if (result.sufficiency_violations + result.mechanism_violations > 0) {
          report(err, to_string(ErrorCode::assertion_failure),
                 "a sampled product contradicted a sufficient condition");
          return 4;
        }
      }
    } catch (Error const& e) {
      report(err, to_string(e.code()), e.detail());
      return exit_code(e.code());
    } catch (Json::exception const& e) {
      report(err, to_string(ErrorCode::parse_error), e.what());
      return 2;
    }
    return 0;
  }

}  // namespace pbr::cli
