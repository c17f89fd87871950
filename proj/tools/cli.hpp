#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gaussmix::cli {

/// Process exit codes. Verdicts never change the exit code; only failures do.
enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 2,
  kDomainError = 3,
  kUnwritableOutput = 4,
  kDisagreement = 5,
};

inline constexpr std::uint64_t kDefaultSeed = 20110615;
inline constexpr const char* kSeedEnvVar = "GAUSSMIX_SEED";

/// Runs the command line tool; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Decimal with 12 significant digits, '.' separator, locale independent.
std::string format_number(double x);

}  // namespace gaussmix::cli
