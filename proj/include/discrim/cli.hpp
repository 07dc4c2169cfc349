#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace discrim {

/*
 * Entry point of the `discrim` tool. `args` excludes the program name.
 * Reports go to `out` (or the --out file), diagnostics to `err` as one JSON
 * object. Returns 0 on success, 2 on bad input or violated preconditions,
 * 1 on internal errors.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace discrim
