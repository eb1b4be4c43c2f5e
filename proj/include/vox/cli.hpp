#pragma once

#include <string>
#include <vector>

#include "vox/harness.hpp"

namespace vox::cli {

// Entry point for the voxbench binary; args excludes argv[0].
// Exit codes: 0 success, 1 usage/config error, 2 partial or failed experiment.
int run(const std::vector<std::string>& args);

// Experiment config resolution with flag > config file > default precedence;
// shared by the experiment subcommands and exposed for tests.
harness::Config resolve_config(const std::string& experiment,
                               const std::vector<std::string>& args);

}  // namespace vox::cli
