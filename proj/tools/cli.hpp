#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maip::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFailure = 1;
inline constexpr int kInputError = 2;

// Runs `maip <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maip::cli
