#pragma once

// The `vc` command line. Output goes to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 a bound or invariant violation (reported with the
// data needed to reproduce it), 2 a usage or input error.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "vc/certificate.hpp"
#include "vc/count.hpp"
#include "vc/groups.hpp"

namespace vc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  int max_nvars = 3;
  CountOptions count;
};

/// Samples `samples` normal-form words with 1..max_nvars variables and
/// exponents uniform in [0, |G|), runs the full reduction chain on each and
/// collects the failing reports. The corpus depends only on the seed and the
/// group name.
Json verify_group(const GroupTable& g, const VerifyOptions& options, bool& holds);

/// Seed of the corpus for one group: mixes the user seed with the name.
std::uint64_t corpus_seed(std::uint64_t seed, const std::string& group_name);

}  // namespace vc::cli
