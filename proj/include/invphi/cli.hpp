#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invphi::cli {

// Dispatches the subcommands documented in the README. Returns 0 on success,
// 1 on usage errors, 2 on domain/overflow errors. Output documents go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invphi::cli
