#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace warpdeg {

// Runs the command-line front end. Exit status: 0 on success (and when all
// verified claims hold), 1 when a claim fails, 2 on input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace warpdeg
