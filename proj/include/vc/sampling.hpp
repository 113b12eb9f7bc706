#pragma once

// Seeded generators for test corpora. Every draw goes through Rng::below, so a
// seed yields the same corpus on every platform and standard library.

#include <cstdint>
#include <random>
#include <vector>

#include "vc/nf2.hpp"
#include "vc/words.hpp"

namespace vc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Random word tree whose unreduced letter expansion has at most
/// `max_letters` letters, mixing products, inverses, small powers and
/// commutators.
Word random_word(Rng& rng, int nvars, int max_letters);

/// Normal form with every exponent uniform in [0, modulus).
NormalForm2 random_normal_form(Rng& rng, int nvars, std::int64_t modulus);

/// x1^m prod_{2<=i<j<=n} [xi,xj]^kij with exponents uniform in [0, modulus).
NormalForm2 random_theorem7_form(Rng& rng, int nvars, std::int64_t modulus);

/// Substitution that is triangular for the prime p under a random variable
/// ordering: u_{s(t)} = x_{s(t)}^m * v * [x_{s(t)}, y]^c with m a unit mod p
/// below `modulus`, and v, y words in the variables placed after s(t).
Substitution random_triangular_substitution(Rng& rng, int nvars, std::int64_t p,
                                            std::int64_t modulus);

}  // namespace vc
