#include "vc/sampling.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "vc/error.hpp"

namespace vc {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::below needs a positive bound");
  // Rejection sampling: discard the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

Word random_tree(Rng& rng, int nvars, int budget) {
  auto letter = [&] {
    Word x = Word::var(nvars, static_cast<int>(rng.range(1, nvars)));
    return rng.chance(1, 3) ? Word::inverse(x) : x;
  };
  if (budget <= 1 || rng.chance(1, 4)) return letter();
  switch (rng.below(4)) {
    case 0: {  // product of 2-3 factors
      int parts = budget >= 3 ? static_cast<int>(rng.range(2, 3)) : 2;
      std::vector<Word> factors;
      int left = budget;
      for (int i = 0; i < parts; ++i) {
        int share = i + 1 == parts ? left : static_cast<int>(rng.range(1, left - (parts - i - 1)));
        factors.push_back(random_tree(rng, nvars, share));
        left -= share;
      }
      return Word::product(factors);
    }
    case 1: {  // small power, possibly negative
      std::int64_t e = rng.range(2, 3) * (rng.chance(1, 2) ? -1 : 1);
      int inner = budget / static_cast<int>(e < 0 ? -e : e);
      if (inner < 1) return letter();
      return Word::power(random_tree(rng, nvars, inner), e);
    }
    case 2: {  // commutator costs twice its arguments
      if (budget < 4) return letter();
      int half = budget / 2;
      int a = static_cast<int>(rng.range(1, half - 1));
      return Word::commutator(random_tree(rng, nvars, a), random_tree(rng, nvars, half - a));
    }
    default:
      return Word::inverse(random_tree(rng, nvars, budget));
  }
}

}  // namespace

Word random_word(Rng& rng, int nvars, int max_letters) {
  return random_tree(rng, nvars, static_cast<int>(rng.range(1, max_letters)));
}

NormalForm2 random_normal_form(Rng& rng, int nvars, std::int64_t modulus) {
  NormalForm2 nf(nvars);
  for (int i = 1; i <= nvars; ++i) nf.set_gen(i, rng.range(0, modulus - 1));
  for (int i = 1; i <= nvars; ++i)
    for (int j = i + 1; j <= nvars; ++j) nf.set_comm(i, j, rng.range(0, modulus - 1));
  return reduce_exponents_mod(nf, modulus);
}

NormalForm2 random_theorem7_form(Rng& rng, int nvars, std::int64_t modulus) {
  NormalForm2 nf(nvars);
  nf.set_gen(1, rng.range(0, modulus - 1));
  for (int i = 2; i <= nvars; ++i)
    for (int j = i + 1; j <= nvars; ++j) nf.set_comm(i, j, rng.range(0, modulus - 1));
  return reduce_exponents_mod(nf, modulus);
}

Substitution random_triangular_substitution(Rng& rng, int nvars, std::int64_t p,
                                            std::int64_t modulus) {
  std::vector<int> order(static_cast<std::size_t>(nvars));
  std::iota(order.begin(), order.end(), 1);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  std::vector<Word> images(static_cast<std::size_t>(nvars), Word::identity(nvars));
  for (std::size_t t = 0; t < order.size(); ++t) {
    const int var = order[t];
    std::vector<int> later(order.begin() + static_cast<std::ptrdiff_t>(t) + 1, order.end());
    std::int64_t m;
    do {
      m = rng.range(1, std::max<std::int64_t>(1, modulus - 1));
    } while (m % p == 0);

    std::vector<Word> factors{Word::power(Word::var(nvars, var), m)};
    if (!later.empty()) {
      auto later_letter = [&] {
        Word y = Word::var(nvars, later[rng.below(later.size())]);
        return rng.chance(1, 2) ? Word::inverse(y) : y;
      };
      int letters = static_cast<int>(rng.range(0, 3));
      for (int i = 0; i < letters; ++i) factors.push_back(later_letter());
      if (rng.chance(1, 2))
        factors.push_back(Word::power(Word::commutator(Word::var(nvars, var), later_letter()),
                                      rng.range(1, 3)));
    }
    images[static_cast<std::size_t>(var - 1)] =
        factors.size() == 1 ? factors.front() : Word::product(factors);
  }
  return Substitution::of(std::move(images));
}

}  // namespace vc
