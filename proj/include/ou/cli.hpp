#pragma once

#include <istream>
#include <ostream>

namespace ou::cli {

/// Entry point of the `ou` tool. Exit codes: 0 success, 1 domain error
/// (cyclic diagram, cap exceeded, not a divisor, ...), 2 usage or input error.
/// Diagrams named "-" are read from `in`.
int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ou::cli
