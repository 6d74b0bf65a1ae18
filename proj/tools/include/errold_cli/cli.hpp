#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace errold::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitError = 2;

// `args` excludes the program name. The report goes to `out`; usage text and
// error messages go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace errold::cli
