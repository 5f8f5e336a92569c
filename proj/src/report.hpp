#pragma once

#include <string>
#include <vector>

namespace lch {

struct Report {
  int code = 0;  // 0 ok, 2 usage, 3 validation, 4 underdetermined, 5 internal
  std::string text;
};

// executes one CLI-style invocation: argv[0] is the subcommand
// (fusion, sigma-classes, center, almost-eval, family, chartab,
// verify-scalars, value-table, ingest-check, help)
Report run_command(const std::string& data_dir, const std::vector<std::string>& argv);

}  // namespace lch
