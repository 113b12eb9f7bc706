#pragma once

// Verbal maps and brute-force solution counting.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vc/groups.hpp"
#include "vc/words.hpp"

namespace vc {

inline constexpr std::uint64_t kDefaultEvaluationCap = 1'000'000'000;

/// S = S_1 x ... x S_n, one element mask per coordinate.
struct Restriction {
  std::vector<ElementMask> masks;

  static Restriction full(const GroupTable& g, int nvars);
  /// G' x G^(n-1).
  static Restriction derived_first(const GroupTable& g, int nvars);

  int nvars() const noexcept { return static_cast<int>(masks.size()); }
  /// prod |S_i|; throws CapExceeded if it does not fit in 64 bits.
  std::uint64_t search_space() const;
};

/// Parses "COORD:full|derived|center" items separated by commas, e.g.
/// "1:derived". Unlisted coordinates are full.
Restriction parse_restriction(std::string_view spec, const GroupTable& g, int nvars);

struct CountOptions {
  std::uint64_t cap = kDefaultEvaluationCap;
  bool force = false;
  unsigned workers = 1;
};

struct CountResult {
  std::uint64_t count = 0;
  std::uint64_t search_space = 0;
  std::uint64_t bound = 0;  // |G|^(n-1)
  bool bound_ok = false;
};

/// |G|^(n-1) for n >= 1. Throws CapExceeded if it overflows 64 bits.
std::uint64_t power_bound(const GroupTable& g, int nvars);

/// Walks the tree: powers by square-and-multiply, [a,b] = a^-1 b^-1 a b.
Element evaluate_word(const GroupTable& g, const Word& w, std::span<const Element> tuple);

/// A word compiled against one group into a straight-line stack program.
/// Agrees with evaluate_word on every tuple; used in counting loops.
class EvalPlan {
 public:
  EvalPlan(const GroupTable& g, const Word& w);

  int nvars() const noexcept { return nvars_; }
  std::size_t stack_depth() const noexcept { return depth_; }

  /// `scratch` must hold at least stack_depth() elements.
  Element run(std::span<const Element> tuple, std::span<Element> scratch) const;
  Element operator()(std::span<const Element> tuple) const;

 private:
  enum class Op : std::uint8_t { Var, Identity, Mul, Inv, Pow, Comm };
  struct Instr {
    Op op;
    std::uint32_t arg;  // variable index (0-based) or power table index
  };

  void compile(const NodePtr& node, std::size_t depth);

  const GroupTable* group_;
  int nvars_;
  std::vector<Instr> code_;
  std::vector<std::vector<Element>> pow_tables_;
  std::size_t depth_ = 0;
};

/// Exact number of tuples in S with w = 1. The outermost coordinate is split
/// across workers; the result does not depend on the worker count.
/// Throws CapExceeded if the search space exceeds the cap (unless forced).
CountResult count_solutions(const GroupTable& g, const Word& w, const Restriction& r,
                            const CountOptions& options = {});

CountResult count_solutions(const GroupTable& g, const Word& w, const CountOptions& options = {});

/// fiber[x] = |{t in G^n : w(t) = x}|.
std::vector<std::uint64_t> fiber_histogram(const GroupTable& g, const Word& w,
                                           const CountOptions& options = {});

}  // namespace vc
