// toric-cy4: topological invariants of the doubled Calabi-Yau fourfold
// attached to a smooth toric Fano fourfold.

#include "toric/batch.hpp"
#include "toric/reference_table.hpp"
#include "toric/report_format.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <map>

int main(int argc, char** argv) {
  CLI::App app{"Doubling-construction invariants of Calabi-Yau fourfolds from toric Fano fourfolds"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "run the pipeline on one or more fan files");
  std::vector<std::string> files;
  std::string emit = "text";
  unsigned jobs = 1;
  std::string reference;
  bool verbose = false;
  compute->add_option("files", files, "fan files")->check(CLI::ExistingFile);
  compute->add_option("--emit", emit, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  compute->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  compute->add_option("--check", reference, "reference table CSV (no,id,chi_M,tau_M,notation)")
      ->check(CLI::ExistingFile);
  compute->add_flag("--verbose,-v", verbose, "print intermediate data");

  CLI11_PARSE(app, argc, argv);

  toric::BatchOptions options;
  options.jobs = jobs;
  options.verbose = verbose;
  if (const char* seed = std::getenv("TORIC_CY4_SEED_CONE")) {
    try {
      options.elimination_cone = std::stoul(seed);
    } catch (const std::exception&) {
      std::cerr << "TORIC_CY4_SEED_CONE must be a nonnegative integer, got '" << seed << "'\n";
      return 1;
    }
  }

  const std::map<std::string, toric::EmitFormat> formats{
      {"text", toric::EmitFormat::Text}, {"json", toric::EmitFormat::Json}, {"csv", toric::EmitFormat::Csv}};

  toric::BatchResult result = toric::run_batch(files, options);
  std::cout << toric::format_items(result.items, formats.at(emit));

  for (const auto& item : result.items) {
    if (!item.ok()) std::cerr << "error: " << item.error << '\n';
    else if (item.report->a_hat != 2)
      std::cerr << "warning: " << item.id() << ": A-hat = " << item.report->a_hat << '\n';
  }

  std::vector<toric::ReferenceCheck> checks;
  checks.push_back(toric::check_embedded_expectations(result.items));
  if (!reference.empty()) {
    try {
      checks.push_back(toric::check_reference(result.items, toric::ReferenceTable::load(reference)));
      std::cerr << checks.back().summary() << '\n';
    } catch (const toric::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
  }
  if (!checks.front().ok()) std::cerr << checks.front().summary() << '\n';

  return toric::exit_status(result, checks);
}
