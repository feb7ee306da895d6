#include "blfilt/cli.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

bool parse_threshold_pairs(const std::vector<std::string>& raw,
                           std::vector<blfilt::Thresholds>& out, std::string& error) {
  for (std::size_t i = 0; i + 1 < raw.size(); i += 2) {
    try {
      blfilt::UnitRational alpha = blfilt::UnitRational::parse(raw[i]);
      blfilt::UnitRational beta = blfilt::UnitRational::parse(raw[i + 1]);
      if (!(alpha < beta)) {
        error = "thresholds must satisfy alpha < beta, got " + alpha.str() + " and " + beta.str();
        return false;
      }
      out.push_back({alpha, beta});
    } catch (const std::invalid_argument& e) {
      error = e.what();
      return false;
    }
  }
  return true;
}

} // namespace

int main(int argc, char** argv) {
  using blfilt::cli::Command;

  CLI::App app{"Toolkit for crisp and fuzzy filters of finite BL-algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Command cmd;
  app.add_flag("--summary", cmd.summary, "Append a one-paragraph summary to the report");

  const std::vector<std::string> kind_tokens = {"plain", "implicative", "positive_implicative",
                                                "fantastic"};
  std::string kind = "plain";
  std::vector<std::string> threshold_raw;

  CLI::App* validate = app.add_subcommand(
      "validate", "Check the axioms and the derived arithmetic laws of an algebra file");
  validate->add_option("algebra", cmd.algebra_file, "Algebra description file")->required();

  CLI::App* filters =
      app.add_subcommand("filters", "Enumerate the crisp filters of one kind");
  filters->add_option("algebra", cmd.algebra_file, "Algebra description file")->required();
  filters->add_option("--kind", kind, "Filter kind")->check(CLI::IsMember(kind_tokens));

  CLI::App* classify = app.add_subcommand(
      "classify", "Classify a fuzzy set against every threshold variant and filter kind");
  classify->add_option("algebra", cmd.algebra_file, "Algebra description file")->required();
  classify->add_option("fuzzyset", cmd.fuzzyset_file, "Fuzzy set description file")->required();
  classify
      ->add_option("--thresholds", threshold_raw,
                   "Extra threshold pair alpha beta (repeatable)")
      ->type_size(2);

  CLI::App* profile = app.add_subcommand(
      "profile", "Compute the acceptable-threshold profile of a fuzzy set for one kind");
  profile->add_option("algebra", cmd.algebra_file, "Algebra description file")->required();
  profile->add_option("fuzzyset", cmd.fuzzyset_file, "Fuzzy set description file")->required();
  profile->add_option("--kind", kind, "Filter kind")->check(CLI::IsMember(kind_tokens));

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the route equivalences over a full membership grid");
  verify->add_option("algebra", cmd.algebra_file, "Algebra description file")->required();
  verify->add_option("--grid", cmd.grid, "Membership grid denominator")
      ->check(CLI::Range(1, 16));
  verify
      ->add_option("--theorems", cmd.theorems,
                   "Comma-separated suite selection (default: all)")
      ->delimiter(',')
      ->check(CLI::IsMember(blfilt::cli::verify_theorem_tokens()));

  CLI::App* generate = app.add_subcommand(
      "generate", "Enumerate the algebras of a given size up to isomorphism");
  generate->add_option("--size", cmd.size, "Carrier size")->required()->check(CLI::Range(2, 6));

  CLI::App* audit = app.add_subcommand(
      "audit", "Re-check the recorded claims of a corpus directory with two evaluators");
  audit->add_option("corpus", cmd.corpus_dir, "Directory holding *.audit sidecars")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return blfilt::cli::kUsage;
  }

  if (validate->parsed()) cmd.kind = Command::Kind::Validate;
  if (filters->parsed()) cmd.kind = Command::Kind::Filters;
  if (classify->parsed()) cmd.kind = Command::Kind::Classify;
  if (profile->parsed()) cmd.kind = Command::Kind::Profile;
  if (verify->parsed()) cmd.kind = Command::Kind::Verify;
  if (generate->parsed()) cmd.kind = Command::Kind::Generate;
  if (audit->parsed()) cmd.kind = Command::Kind::Audit;

  cmd.filter_kind = *blfilt::parse_kind_token(kind); // token already validated
  std::string error;
  if (!parse_threshold_pairs(threshold_raw, cmd.thresholds, error)) {
    std::cerr << "error: " << error << "\n";
    return blfilt::cli::kUsage;
  }

  blfilt::cli::RunResult result = blfilt::cli::run(cmd);
  std::cout << result.report;
  return result.status;
}
