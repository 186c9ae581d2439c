#include "l2rank/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  l2rank::RunConfig cfg;
  CLI::App app{"Certified first L2-Betti number estimates for finitely presented groups"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("inputs", cfg.inputs, "Presentation files or fixture names");
    sub->add_option("--inline", cfg.inline_presentations, "Presentation text, e.g. \"< a, b | a^2, b^3 >\"");
    sub->add_option("--max-cosets", cfg.max_cosets, "Coset enumeration budget")->capture_default_str();
    sub->add_option("--max-degree", cfg.max_degree, "Largest permutation degree in quotient search")
        ->capture_default_str();
    sub->add_option("--max-quotients", cfg.max_quotients, "Quotients collected by the search")->capture_default_str();
    sub->add_option("--chain", cfg.chain_length, "Chain length")->capture_default_str();
    sub->add_option("--order-cap", cfg.order_cap, "Largest quotient order")->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Seed recorded for reproducibility")->capture_default_str();
    sub->add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--output", cfg.output_path, "Write the report here instead of stdout");
  };

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"betti1", "Abelianization rank and torsion"},
      {"fox", "Fox Jacobian and its augmentation"},
      {"snf", "Smith normal form of an integer matrix or augmented Jacobian"},
      {"sigma", "Sum of reciprocal torsion exponents"},
      {"pt-bound", "Torsion lower bound with irreducibility certificates"},
      {"nrk-check", "Normal rank witness by quotient triviality"},
      {"l2-approx", "Betti ratios along a chain of finite quotients"},
      {"spectral", "Spectral measure of a group ring matrix over a finite quotient"},
      {"dist", "Distance between two marked groups"}};
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    add_common(sub);
    sub->callback([&cfg, name = name] { cfg.command = name; });
    if (name == "nrk-check") sub->add_option("--kill", cfg.kill_words, "Word to kill (repeatable)");
    if (name == "fox" || name == "spectral")
      sub->add_option("--extend", cfg.extension_words, "Extension word (repeatable)");
    if (name == "snf") sub->add_option("--matrix", cfg.matrix, "Integer matrix as JSON rows");
    if (name == "spectral") {
      sub->add_option("--matrix", cfg.matrix, "Group ring matrix, e.g. \"[1 + a; a*b]\"");
      sub->add_option("--quotient-order", cfg.quotient_order, "Use the first quotient of this order");
      sub->add_option("--moments", cfg.moments, "Highest moment checked")->capture_default_str();
      sub->add_option("--eps", cfg.eps_grid, "Epsilon grid for the log bound");
      sub->add_option("--constant", cfg.log_constant, "Constant C for the log bound")->capture_default_str();
    }
    if (name == "dist") {
      sub->add_option("--max-radius", cfg.max_radius, "Largest ball radius")->capture_default_str();
      sub->add_option("--budget", cfg.membership_budget, "Conjugator length for membership search")
          ->capture_default_str();
    }
  }

  CLI11_PARSE(app, argc, argv);
  cfg.format = format == "csv" ? l2rank::OutputFormat::csv
               : format == "text" ? l2rank::OutputFormat::text
                                  : l2rank::OutputFormat::json;
  return l2rank::run_command(cfg, std::cout, std::cerr);
}
