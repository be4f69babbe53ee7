#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pomax {

// The full command surface behind the `pomax` binary; argv without the
// program name. Returns the process exit code: 0 ok, 2 parse/format error,
// 3 validation error, 4 bound exceeded without --force.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace pomax
