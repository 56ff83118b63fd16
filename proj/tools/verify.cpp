// SPDX-License-Identifier: Apache-2.0
// verify: list and run the registered checks.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "thetakit/checks.hpp"

using namespace thetakit;

namespace {

constexpr int kUsage = 2;

void print_line(const CheckReport& r) {
  std::cout << to_string(r.status) << "  " << r.id << "  (" << static_cast<long>(r.runtime_ms) << " ms)";
  if (r.status != CheckStatus::Pass) std::cout << "\n    expected " << r.expected.dump() << "\n    computed " << r.computed.dump();
  for (const auto& n : r.notes) std::cout << "\n    note: " << n;
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run the registered verification checks"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List registered checks, sorted by id");

  auto* run = app.add_subcommand("run", "Run one check and print its JSON report");
  std::string id;
  CheckOptions run_opts;
  std::optional<uint64_t> prime;
  std::optional<std::string> field;
  run->add_option("id", id, "Check id")->required();
  run->add_option("--prime", prime, "Primary prime for modular computations");
  run->add_option("--seed", run_opts.seed, "Seed for sampled data");
  run->add_option("--field", field, "Coefficient field")->check(CLI::IsMember({"Q", "Fp"}));

  auto* all = app.add_subcommand("all", "Run every check");
  std::string json_path;
  unsigned workers = 1;
  CheckOptions all_opts;
  all->add_option("--json", json_path, "Write the JSON report to this file");
  all->add_option("--workers", workers, "Parallel workers")->check(CLI::PositiveNumber);
  all->add_option("--seed", all_opts.seed, "Seed for sampled data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*list) {
      for (const auto& d : list_checks())
        std::cout << d.id << "\t" << d.module << "\t" << to_string(d.field) << "\t" << d.paper_anchor << "\n";
      return 0;
    }
    if (*run) {
      run_opts.prime = prime;
      run_opts.field = field;
      CheckReport r = run_check(id, run_opts);
      std::cout << r.to_json().dump(2) << "\n";
      return r.status == CheckStatus::Fail ? 1 : 0;
    }
    RunSummary s = run_all(list_checks(), all_opts, workers);
    for (const auto& r : s.reports) print_line(r);
    std::cout << s.pass << " pass, " << s.fail << " fail, " << s.inconclusive << " inconclusive\n";
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) {
        std::cerr << "cannot write " << json_path << "\n";
        return kUsage;
      }
      out << s.to_json(all_opts).dump(2) << "\n";
    }
    return s.fail ? 1 : 0;
  } catch (const CheckError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
