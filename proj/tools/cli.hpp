#pragma once

// Command-line front end. run() takes the arguments without the program name
// and returns the process exit code:
//   0  the property holds, or the command completed
//   1  the property fails
//   2  input error (bad flags, malformed file, value outside a domain)
//   3  resource cap or search budget exceeded
//   4  internal consistency failure

#include <iosfwd>
#include <string>
#include <vector>

namespace z4rds::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchema = 1;

enum ExitCode : int { kOk = 0, kFails = 1, kInputError = 2, kResourceCap = 3, kInternal = 4 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z4rds::cli
