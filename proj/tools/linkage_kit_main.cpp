// Command-line frontend: reads a job from --job (file or "-" for stdin) or
// from flags, prints the result document on stdout and structured errors on
// stderr. Exit codes: 0 ok, 2 validation, 3 guard exhausted, 4 oracle mismatch.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkage_kit/job.hpp"

namespace lk = linkage_kit;
namespace cli = linkage_kit::cli;

namespace {

int fail(const cli::JobError& e) {
  const int code = cli::exit_code_for(e.kind());
  std::cerr << cli::error_document(e.kind(), e.field(), e.what(), code);
  return code;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9)
      throw cli::JobError(lk::ErrorKind::InvalidJob, "parabolic", "invalid simple root index \"" + item + "\"");
    out.push_back(std::stoul(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong linkage, Verma factor sets and non-criticality obstructions"};

  std::string job_file;
  std::string root_system = "A_1";
  std::size_t embeddings = 1;
  std::string parabolic;
  std::string weight;
  std::string smooth;
  std::string pi_tag;
  std::string convention = "paper";
  std::string command = "linkset";
  std::string format = "json";
  bool oracle = false;
  bool witnesses = false;

  app.add_option("--job", job_file, "Job document (JSON); \"-\" reads stdin. Supersedes the job flags.");
  app.add_option("--root-system", root_system, "Named type such as A_2, B_2xA_1, A_3xT_1");
  app.add_option("--embeddings", embeddings, "Number of embeddings |S|");
  app.add_option("--parabolic", parabolic, "Comma-separated 1-based simple root indices");
  app.add_option("--weight", weight, "Coordinates, ',' within an embedding and ';' between embeddings");
  app.add_option("--smooth", smooth, "Smooth tag of the character");
  app.add_option("--pi-tag", pi_tag, "Central character tag of pi");
  app.add_option("--convention", convention, "Dominance convention")->check(CLI::IsMember({"paper", "shifted"}));
  app.add_option("--command", command, "factors|candidates|obstructions|linkset|dominance|orbit");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--oracle", oracle, "Cross-check against brute-force enumeration");
  app.add_flag("--witnesses", witnesses, "Include witness chains");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitValidation;
  }

  cli::RunOptions options;
  options.format = format == "table" ? cli::OutputFormat::table : cli::OutputFormat::json;

  cli::RunOutcome outcome;
  try {
    options.orbit_guard = cli::orbit_guard_from_env();
    if (!job_file.empty()) {
      std::string text;
      if (job_file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(job_file);
        if (!in) throw cli::JobError(lk::ErrorKind::InvalidJob, "job", "cannot read job file " + job_file);
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw cli::JobError(lk::ErrorKind::InvalidJob, "job", e.what());
      }
      outcome = cli::run_document(doc, options);
    } else {
      cli::JobSpec job;
      job.root_system = lk::CartanSpec::named(root_system);
      job.embeddings = embeddings;
      job.parabolic = parse_index_list(parabolic);
      if (!weight.empty()) job.weight = cli::parse_weight_text(weight);
      job.smooth_tag = smooth;
      job.pi_tag = pi_tag;
      job.convention = lk::parse_convention(convention);
      job.command = cli::parse_command(command);
      job.oracle = oracle;
      job.witnesses = witnesses;
      outcome = cli::run(job, options);
    }
  } catch (const cli::JobError& e) {
    return fail(e);
  } catch (const lk::Error& e) {
    return fail(cli::JobError(e.kind(), "", e.what()));
  }

  std::cout << outcome.output;
  std::cerr << outcome.error;
  return outcome.exit_code;
}
