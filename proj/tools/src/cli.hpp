#pragma once

namespace disclab::cli {

// Parses argv, runs one subcommand and returns the process exit code:
// 0 ok, 2 input or schema error, 3 inconclusive verdict, 4 numerical failure.
int run(int argc, char** argv);

} // namespace disclab::cli
