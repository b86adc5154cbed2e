#pragma once

#include <ostream>

namespace toriclog {

// verify --fan <path|builtin:NAME> --bundle <path|builtin:NAME>
//        [--report <path>] [--checks lemma1,cocycle,connection,prop3]
//        [--list-builtins]
// Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toriclog
