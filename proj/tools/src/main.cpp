#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace cli = gsp4::cli;

namespace {

int finish(const cli::Report& r) {
  std::cout << r.text();
  return r.failed ? cli::kCheckFailed : cli::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gsp4: parameter classification and verification toolkit"};
  app.require_subcommand(1);

  std::string scenario_path, out_path, involution_path, weyl_group;
  std::uint64_t seed = 1;

  auto* run = app.add_subcommand("run", "Run the requests in a scenario file");
  run->add_option("file", scenario_path, "Scenario (JSON, // comments allowed)")->required();
  run->add_option("--out", out_path, "Also write a JSON report here");
  run->add_option("--seed", seed, "Seed for sampled matrix test points");

  auto* self = app.add_subcommand("selftest", "Run every module property check");
  self->add_option("--seed", seed, "Seed for sampled matrix test points");

  auto* inv = app.add_subcommand("factor-involution", "Factor g in GSO(gram) as a product of involutions");
  inv->add_option("file", involution_path, "JSON with 'gram' and 'g'")->required();

  auto* endo = app.add_subcommand("verify-endoscopy", "Check the endoscopic catalog");
  endo->add_option("--seed", seed, "Seed for sampled matrix test points");

  auto* weyl = app.add_subcommand("enumerate-weyl", "List twisted Weyl elements by Levi");
  weyl->add_option("group", weyl_group, "GSpin5, GSpin4, GSpin4^a, Sp4xGL1 or GL4xGL1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kInputError;
  }

  try {
    if (*run) {
      cli::Report r = cli::run_scenario(cli::load_scenario(scenario_path), seed);
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw cli::InputError("cannot write " + out_path);
        out << r.to_json(seed).dump(2) << '\n';
      }
      return finish(r);
    }
    if (*self) {
      cli::SelftestOptions opts;
      opts.seed = seed;
      return finish(cli::selftest(opts));
    }
    if (*inv) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(cli::read_file(involution_path), nullptr, true, true);
      } catch (const nlohmann::json::parse_error& e) {
        throw cli::InputError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
      }
      return finish(cli::factor_involution(j));
    }
    if (*endo) return finish(cli::verify_endoscopy(seed));
    if (*weyl) {
      gsp4::GroupTag g;
      try {
        g = gsp4::parse_group(weyl_group);
      } catch (const std::invalid_argument& e) {
        throw cli::InputError(e.what());
      }
      return finish(cli::enumerate_weyl(g, true));
    }
  } catch (const cli::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return cli::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kCheckFailed;
  }
  return cli::kOk;
}
