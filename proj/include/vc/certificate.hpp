#pragma once

// Certificates: auditable traces of the reduction pipeline and the
// centralizer-sum recursion. A certificate can be replayed against the group
// it was produced for; replay recomputes every summand from the Cayley table.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vc/groups.hpp"

namespace vc {

enum class Mode { Exact, Bound };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// A triangular substitution u applied to the word; the counted word w
/// becomes w' with w = w'(u).
struct SubstitutionStep {
  std::vector<std::string> words;       // u_1, ..., u_n
  std::vector<int> ordering;            // triangular ordering witness
  std::vector<std::int64_t> exponents;  // m_i, the unit exponent of x_i in u_i
  std::int64_t modulus = 0;
  std::vector<int> renaming;            // new x_i = old x_{renaming[i-1]}
};

/// Choice of the commutator pair with the smallest p-part.
struct PairChoiceStep {
  int r = 0, s = 0;       // original indices
  std::int64_t k = 0;     // k_rs
  int valuation = 0;      // v_p(k)
  std::vector<int> renaming;  // new x_i = old x_{renaming[i-1]}
};

/// k'_ij with k'_ij * k = k_ij (mod modulus), for 2 <= i < j <= n.
struct CongruenceStep {
  struct Solution {
    int i = 0, j = 0;
    std::int64_t target = 0;  // k_ij
    std::int64_t solution = 0;
  };
  std::int64_t modulus = 0;
  std::int64_t k = 0;
  std::vector<Solution> solutions;
};

/// u_{n-1} = x_{n-1} v_n, u_n = x_n v_{n-1}, and the merged word
/// x1^m v' [x_{n-1}, x_n]^k.
struct MergeStep {
  std::string u_prev;
  std::string u_last;
  std::string v_prime;
  std::string merged;
  std::string reduced;  // w'' = x1^m v' over n-2 variables
};

/// w' = x1^m [x1, v1'] v2'; the restricted count uses w'' = x1^m v2'.
struct SplitStep {
  std::int64_t m = 0;
  bool degenerate = false;
  std::string w_prime;
  std::string v1_prime;
  std::string w_doubleprime;
};

struct BaseCaseStep {
  int nvars = 0;
  std::int64_t m = 0;
  std::uint64_t derived_solutions = 0;  // |{g in G' : g^m = 1}|
  std::uint64_t value = 0;
};

struct Certificate;

struct Summand {
  Element g = 0;
  Element power = 0;                 // g^k
  std::uint64_t centralizer_size = 0;  // |C_G(g^k)|
  std::uint64_t image_size = 0;        // |[g^k, G]|
  std::size_t inner_index = 0;       // index into RecursionLevel::inner
  std::uint64_t inner = 0;
  std::uint64_t term = 0;
};

struct InnerCount {
  std::vector<Element> kernel;  // [g^k, G]
  std::size_t quotient_order = 0;
  std::uint64_t value = 0;
  std::shared_ptr<const Certificate> certificate;  // exact mode only
};

struct RecursionLevel {
  int nvars = 0;
  std::int64_t k = 0;
  std::vector<Summand> summands;
  std::vector<InnerCount> inner;
  std::uint64_t total = 0;
};

using Step = std::variant<SubstitutionStep, PairChoiceStep, CongruenceStep, MergeStep, SplitStep,
                          BaseCaseStep, RecursionLevel>;

struct Certificate {
  Mode mode = Mode::Exact;
  std::string word;
  std::string group;
  int nvars = 0;
  std::vector<Step> steps;
  std::uint64_t value = 0;
  std::uint64_t bound = 0;
  bool holds = false;
};

using Json = nlohmann::ordered_json;

Json to_json(const Certificate& cert);

struct ReplayResult {
  bool ok = true;
  std::string message;
};

/// Recomputes every BaseCaseStep and RecursionLevel from the group's table
/// (quotients are rebuilt from the recorded kernels) and checks that the
/// recorded values, totals and final value are reproduced exactly.
ReplayResult replay(const GroupTable& g, const Certificate& cert);

}  // namespace vc
