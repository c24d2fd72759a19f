// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unclogic {

/// Command-line front end. Exit codes: 0 success, 1 evaluation error,
/// 2 parse/usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace unclogic
