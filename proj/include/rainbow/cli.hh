#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::cli
{
    enum ExitCode : int
    {
        success = 0,
        usage_error = 1,
        invalid_instance = 2,
        no_matching = 3,
        // A self-check failed: the solver and the oracle disagree, or a theorem looks violated.
        internal_error = 4,
    };

    /// Runs one command. `args` excludes the program name; standard input for
    /// commands reading "-" comes from `in`.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}
