#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "heckeo/block/rank_one.hpp"
#include "heckeo/cli/report.hpp"
#include "heckeo/weyl/weyl_group.hpp"

namespace heckeo::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; `config_env` is the value of HECKEO_CONFIG (or null).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* config_env);

/// Suite "hecke", "k0", "block" or "all" for a Cartan type (ignored by "block").
/// Throws std::invalid_argument for unknown suites.
VerificationReport verify_suite(const std::string& suite, const std::string& type, const GroupOptions& options);
VerificationReport block_report(BlockSuite suite);

/// functor,module,degree,dimension
std::string homology_csv(const RankOneBlock& block);

}  // namespace heckeo::cli
