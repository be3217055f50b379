#pragma once

#include "cornerjet/cli/app.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace cornerjet::testing {

struct CliResult
{
    int code;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = cornerjet::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace cornerjet::testing
