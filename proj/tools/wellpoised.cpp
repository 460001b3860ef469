#include <iostream>
#include <sstream>
#include <CLI11.hpp>
#include "wellpoised/cli.hpp"

int main(int argc, char** argv) {
  wp::cli::JobSpec job;
  std::string format = "text", index_set;
  CLI::App app{"Semi-canonical embeddings and well-poisedness checks"};
  app.add_option("command", job.command, "operation to run")
      ->required()
      ->check(CLI::IsMember(wp::cli::commands()));
  app.add_option("-i,--input", job.input, "job file (JSON)")->required();
  app.add_option("-w,--weights", job.weights, "weight file overriding the job's weights");
  app.add_option("--cap", job.cap, "largest Veronese level tried by quotients")->check(CLI::PositiveNumber);
  app.add_option("--parallel", job.parallel, "worker threads for per-cone checks")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--index-set", index_set, "comma separated minimizing set, e.g. 0,2");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  job.format = format == "machine" ? wp::cli::Format::Machine : wp::cli::Format::Text;
  if (!index_set.empty()) {
    std::stringstream ss(index_set);
    std::string item;
    try {
      while (std::getline(ss, item, ',')) job.index_set.push_back(std::stoul(item));
    } catch (const std::exception&) {
      std::cerr << "error: Parse: bad --index-set '" << index_set << "'\n";
      return 2;
    }
  }
  return wp::cli::run(job, std::cout, std::cerr);
}
