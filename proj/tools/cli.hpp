#pragma once

#include <optional>
#include <string>

namespace xilab::tools {

// Exit codes of run().
constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;

// Precision used when neither --bits nor XI_LAB_PRECISION_BITS is set: the
// n-scaled default when the subcommand takes n, otherwise `fallback`.
long resolve_bits(std::optional<long> flag, std::optional<long> n, long fallback);

int run(int argc, const char* const* argv);

}  // namespace xilab::tools
