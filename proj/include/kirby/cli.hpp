#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kirby::cli {

/// Exit statuses of dispatch().
enum Status : int { Ok = 0, CheckFailed = 1, UsageError = 2, InputError = 3 };

/// Runs one subcommand. args excludes the program name. Usage errors go to
/// err; machine-readable output (--json) and human text go to out.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace kirby::cli
