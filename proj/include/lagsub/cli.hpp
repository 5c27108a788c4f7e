#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lagsub::cli {

// Exit statuses: 0 success, 1 domain error or failed verification, 2 usage
// error.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

extern const char* const kGrammar;

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagsub::cli
