#pragma once

// Class-2 normal forms.
//
// Every word w(x1..xn) agrees, on every group of nilpotency class <= 2, with a
// unique word
//
//     x1^k1 ... xn^kn  prod_{i<j} [xi,xj]^kij
//
// The exponents are the coordinates of w in the free class-2 nilpotent group.
// Products, inverses, powers and commutators act on coordinates by
//
//     (a, c)(b, d)  = (a + b, c + d - a_j b_i)           for i < j
//     (a, c)^k      = (k a,  k c - C(k,2) a_i a_j)       for all integers k
//
// which follow from yx = xy[y,x] and (xy)^k = x^k y^k [y,x]^C(k,2).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vc/words.hpp"

namespace vc {

class NormalForm2 {
 public:
  explicit NormalForm2(int nvars = 1);

  int nvars() const noexcept { return nvars_; }
  const std::optional<std::int64_t>& modulus() const noexcept { return modulus_; }

  /// k_i, 1-based.
  std::int64_t gen(int i) const { return gen_.at(static_cast<std::size_t>(i - 1)); }
  /// k_ij, requires 1 <= i < j <= nvars.
  std::int64_t comm(int i, int j) const { return comm_.at(pair_index(i, j)); }

  void set_gen(int i, std::int64_t value);
  void set_comm(int i, int j, std::int64_t value);

  const std::vector<std::int64_t>& gen_exponents() const noexcept { return gen_; }
  bool has_commutators() const;
  bool is_identity() const;

  /// x_i as a normal form.
  static NormalForm2 generator(int nvars, int i);

  /// Class-2 group law on exact coordinates. Both operands must be exact.
  friend NormalForm2 operator*(const NormalForm2& a, const NormalForm2& b);
  NormalForm2 inverse() const;
  NormalForm2 pow(std::int64_t k) const;
  static NormalForm2 commutator(const NormalForm2& a, const NormalForm2& b);

  /// Same exponents over more (or equally many) variables.
  NormalForm2 widened(int nvars) const;

  /// The word x1^k1 ... xn^kn prod [xi,xj]^kij (zero exponents omitted).
  Word to_word() const;

  friend bool operator==(const NormalForm2&, const NormalForm2&) = default;

  static std::size_t pair_count(int nvars) {
    return static_cast<std::size_t>(nvars) * static_cast<std::size_t>(nvars - 1) / 2;
  }

 private:
  std::size_t pair_index(int i, int j) const;

  friend NormalForm2 reduce_exponents_mod(const NormalForm2&, std::int64_t);

  int nvars_;
  std::vector<std::int64_t> gen_;
  std::vector<std::int64_t> comm_;  // row-major over pairs i<j
  std::optional<std::int64_t> modulus_;
};

/// Normal form of w over exact integers. Recurses over the tree, so powers
/// with large exponents cost O(log) rather than O(exponent).
/// Throws std::overflow_error if an exponent leaves int64.
NormalForm2 collect(const Word& w);

/// Normal form of a letter sequence, collected one letter at a time: each new
/// letter x_i^e is moved left past the x_j (j > i) already collected, picking
/// up [xi,xj]^(-e k_j). Independent of the tree route in collect().
NormalForm2 collect_letters(const LetterSeq& letters, int nvars);

/// All exponents reduced into [0, M). Throws InputError if M < 1.
NormalForm2 reduce_exponents_mod(const NormalForm2& nf, std::int64_t modulus);

/// Splits nf = x1^k1 [x1, v1'] v2' where v1' = prod_{j>1} xj^k1j. Returns v1'
/// (a word over the same variables) and v2' with x1's exponent kept, i.e. the
/// normal form x1^k1 (rest) with every k1j cleared.
std::pair<Word, NormalForm2> split_x1(const NormalForm2& nf);

/// "x1^2 x2^1 [x1,x2]^7"; the identity renders as "1".
std::string format_normal_form(const NormalForm2& nf);

}  // namespace vc
