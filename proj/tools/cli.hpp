#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "susyp/specfun.hpp"

namespace susyp::cli {

enum ExitCode { kOk = 0, kUsage = 1, kRejected = 2, kUncertified = 3 };

struct Grid {
    double lo = 0.0, hi = 0.0;
    std::size_t n = 0;
};

// "re", "re+imi", "re-imi", "imi", "i", "-i".
cplx parse_complex(const std::string& s);
// "lo:hi:n" with n >= 2 and lo < hi.
Grid parse_grid(const std::string& s);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace susyp::cli
