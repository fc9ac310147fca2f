#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "calib/certificate.hpp"
#include "calib/flags.hpp"
#include "calib/suites.hpp"

namespace {

// 0 = all certificates pass, 1 = at least one failure, 2 = bad invocation.
int emit(const calib::RunReport& rep, const std::string& json_path) {
  calib::print_report(rep, std::cout);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << json_path << "\n";
      return 2;
    }
    out << calib::report_to_json(rep);
  }
  return rep.overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic certificates for the flat calibration models"};
  app.require_subcommand(1);

  std::string suite;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "run one certificate suite");
  verify->add_option("suite", suite, "which suite: g2, spin7 or su3")
      ->required()
      ->check(CLI::IsMember({"g2", "spin7", "su3"}));
  verify->add_option("--json", json_path, "also write the report to this JSON file");

  int samples = 200;
  std::uint32_t seed = 42;
  bool only7 = false;
  bool only8 = false;
  auto* ident = app.add_subcommand("identity", "check the pointwise calibration identities");
  ident->add_option("--samples", samples, "number of pseudorandom tuples per identity")
      ->check(CLI::PositiveNumber);
  ident->add_option("--seed", seed, "seed for the tuple generator");
  auto* f7 = ident->add_flag("--n7", only7, "only the 7-dimensional identity");
  auto* f8 = ident->add_flag("--n8", only8, "only the 8-dimensional identity");
  f7->excludes(f8);
  ident->add_option("--json", json_path, "also write the report to this JSON file");

  std::string group;
  std::string out_path;
  auto* search = app.add_subcommand("search-wchain",
                                    "search for the nested invariant complement chain");
  search->add_option("group", group, "which model: g2 or spin7")
      ->required()
      ->check(CLI::IsMember({"g2", "spin7"}));
  search->add_option("--out", out_path, "write the chain to this JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return emit(calib::run_verify_suite(suite), json_path);

    if (ident->parsed()) {
      calib::IdentityOptions opt;
      opt.samples = samples;
      opt.seed = seed;
      opt.run_n7 = !only8;
      opt.run_n8 = !only7;
      return emit(calib::run_identity_suite(opt), json_path);
    }

    const calib::GroupModel& model =
        calib::group_model(group == "g2" ? calib::Group::G2 : calib::Group::Spin7);
    calib::WChainResult res = calib::search_w_chain(model, true);
    if (!res.found) {
      std::cerr << "no chain found (deepest completed level " << res.deepest_completed << ")\n";
      return 1;
    }
    bool verified = true;
    for (const auto& lvl : res.chain.levels)
      verified = verified && calib::verify_transversal(model, lvl.space, lvl.s).pass;
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << "\n";
      return 2;
    }
    out << calib::wchain_to_json(res.chain);
    std::cout << "wrote " << out_path << ", level dimensions (";
    for (std::size_t i = 0; i < res.chain.levels.size(); ++i)
      std::cout << (i ? ", " : "") << res.chain.levels[i].dim;
    std::cout << "), re-verified: " << (verified ? "yes" : "NO") << "\n";
    return verified ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
