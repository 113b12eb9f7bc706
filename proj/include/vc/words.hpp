#pragma once

// Group words in the free group on x1, ..., xn.
//
// A Word is an immutable expression tree. Nodes are shared between words, so
// copying a Word and building larger words from smaller ones is cheap.
//
// Commutator convention: [a,b] = a^-1 b^-1 a b.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace vc {

enum class NodeKind { Empty, Var, Inverse, Product, Power, Commutator };

struct WordNode;
using NodePtr = std::shared_ptr<const WordNode>;

struct WordNode {
  NodeKind kind = NodeKind::Empty;
  int var = 0;                    // Var: 1-based variable index
  std::int64_t exponent = 0;      // Power
  std::vector<NodePtr> children;  // Inverse: 1, Product: any, Power: 1, Commutator: 2
};

class Word {
 public:
  /// The identity word over `nvars` variables.
  explicit Word(int nvars = 1);

  static Word identity(int nvars) { return Word(nvars); }
  /// Wraps an existing tree. Throws InputError if it uses a variable > nvars.
  static Word from_root(int nvars, NodePtr root);
  static Word var(int nvars, int index);
  static Word inverse(const Word& w);
  static Word product(const std::vector<Word>& factors);
  static Word power(const Word& base, std::int64_t exponent);
  static Word commutator(const Word& a, const Word& b);

  /// Reinterpret the same tree over a different number of variables.
  /// Throws InputError if a used variable would fall out of range.
  Word with_nvars(int nvars) const;

  int nvars() const noexcept { return nvars_; }
  const NodePtr& root() const noexcept { return root_; }
  NodeKind kind() const noexcept { return root_->kind; }

  /// Largest variable index occurring in the tree (0 for the empty word).
  int max_var() const;

  friend bool operator==(const Word& a, const Word& b);
  friend Word operator*(const Word& a, const Word& b) { return product({a, b}); }

 private:
  int nvars_;
  NodePtr root_;
};

/// One letter x_var^sign of a flattened word.
struct Letter {
  int var = 0;
  int sign = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using LetterSeq = std::vector<Letter>;

/// Images u_1, ..., u_n of x_1, ..., x_n, each a word over y_1, ..., y_k.
struct Substitution {
  int nvars_in = 1;
  std::vector<Word> words;

  /// Throws InputError if the words disagree on their variable count.
  static Substitution of(std::vector<Word> words);
  /// The substitution x_i -> x_{perm[i-1]}.
  static Substitution permutation(const std::vector<int>& perm);
};

/// Parses the word grammar
///   word := term+ ; term := atom ("^" signed_int)? ;
///   atom := var | "1" | "[" word "," word "]" | "(" word ")" ; var := "x" digit+
/// Whitespace between terms is optional. "1" denotes the identity word.
/// The result is normalized (see normalize).
Word parse_word(std::string_view text, int nvars);

/// Like parse_word, with nvars taken as the largest index used (at least 1).
Word parse_word(std::string_view text);

/// Canonical rendering; parse_word(format_word(w)) == normalize(w).
std::string format_word(const Word& w);

/// Flattens products, drops identity factors, unwraps singleton products and
/// rewrites Inverse(w) as Power(w, -1). This is the shape the parser produces.
Word normalize(const Word& w);

/// Expands the tree into letters and freely reduces. Throws CapExceeded if
/// the expansion would exceed `max_letters` letters.
LetterSeq flatten_reduce(const Word& w, std::size_t max_letters = std::size_t{1} << 24);

/// Free reduction of an arbitrary letter sequence.
LetterSeq free_reduce(const LetterSeq& letters);

/// Word built from a letter sequence (a product of variables and inverses).
Word word_from_letters(const LetterSeq& letters, int nvars);

/// w(u_1, ..., u_n). Throws InputError on arity mismatch.
Word substitute(const Word& w, const Substitution& s);

/// Image of w in F/F' = Z^n.
std::vector<std::int64_t> abelianized_exponents(const Word& w);

}  // namespace vc
