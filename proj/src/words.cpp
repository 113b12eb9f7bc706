#include "vc/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "vc/error.hpp"
#include "vc/checked.hpp"

namespace vc {

namespace {

NodePtr make_node(NodeKind kind, std::vector<NodePtr> children = {}, int var = 0,
                  std::int64_t exponent = 0) {
  auto node = std::make_shared<WordNode>();
  node->kind = kind;
  node->var = var;
  node->exponent = exponent;
  node->children = std::move(children);
  return node;
}

const NodePtr& empty_node() {
  static const NodePtr node = make_node(NodeKind::Empty);
  return node;
}

bool nodes_equal(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->var != b->var || a->exponent != b->exponent ||
      a->children.size() != b->children.size())
    return false;
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!nodes_equal(a->children[i], b->children[i])) return false;
  return true;
}

int max_var_of(const NodePtr& node) {
  int best = node->kind == NodeKind::Var ? node->var : 0;
  for (const auto& child : node->children) best = std::max(best, max_var_of(child));
  return best;
}

void require_same_arity(const Word& a, const Word& b) {
  if (a.nvars() != b.nvars())
    throw InputError("words over " + std::to_string(a.nvars()) + " and " +
                     std::to_string(b.nvars()) + " variables cannot be combined");
}

// ---------------------------------------------------------------- parsing

class Parser {
 public:
  Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

  NodePtr parse_all() {
    auto node = parse_word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_atom_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == 'x' || c == '[' || c == '(' || c == '1';
  }

  NodePtr parse_word() {
    std::vector<NodePtr> terms;
    while (at_atom_start()) terms.push_back(parse_term());
    if (terms.empty()) fail("expected a term");
    if (terms.size() == 1) return terms.front();
    return make_node(NodeKind::Product, std::move(terms));
  }

  NodePtr parse_term() {
    NodePtr atom = parse_atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      return make_node(NodeKind::Power, {atom}, 0, parse_signed());
    }
    return atom;
  }

  std::int64_t parse_signed() {
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    std::uint64_t magnitude = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, magnitude);
    (void)ptr;
    const auto limit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    if (ec != std::errc() || magnitude > limit) {
      pos_ = start;
      fail("exponent out of range");
    }
    auto value = static_cast<std::int64_t>(magnitude);
    return negative ? -value : value;
  }

  NodePtr parse_atom() {
    skip_space();
    char c = text_[pos_];
    if (c == 'x') return parse_var();
    if (c == '1') {
      ++pos_;
      return empty_node();
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_word();
      expect(')');
      return inner;
    }
    // c == '['
    ++pos_;
    NodePtr a = parse_word();
    expect(',');
    NodePtr b = parse_word();
    expect(']');
    return make_node(NodeKind::Commutator, {a, b});
  }

  NodePtr parse_var() {
    std::size_t start = pos_;
    ++pos_;  // 'x'
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected variable index after 'x'");
    }
    int index = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, index);
    (void)ptr;
    if (ec != std::errc() || index < 1 || (nvars_ > 0 && index > nvars_)) {
      pos_ = start;
      fail("variable index out of range 1.." + std::to_string(nvars_));
    }
    return make_node(NodeKind::Var, {}, index);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view text_;
  int nvars_;  // 0: unbounded
  std::size_t pos_ = 0;
};

// ------------------------------------------------------------- formatting

void format_node(const NodePtr& node, std::ostringstream& out);

// Atoms can carry an exponent without parentheses.
bool is_atom(const NodePtr& node) {
  return node->kind == NodeKind::Var || node->kind == NodeKind::Commutator ||
         node->kind == NodeKind::Empty;
}

void format_as_atom(const NodePtr& node, std::ostringstream& out) {
  if (is_atom(node)) {
    format_node(node, out);
  } else {
    out << '(';
    format_node(node, out);
    out << ')';
  }
}

void format_node(const NodePtr& node, std::ostringstream& out) {
  switch (node->kind) {
    case NodeKind::Empty:
      out << '1';
      break;
    case NodeKind::Var:
      out << 'x' << node->var;
      break;
    case NodeKind::Inverse:
      format_as_atom(node->children[0], out);
      out << "^-1";
      break;
    case NodeKind::Power:
      format_as_atom(node->children[0], out);
      out << '^' << node->exponent;
      break;
    case NodeKind::Commutator:
      out << '[';
      format_node(node->children[0], out);
      out << ',';
      format_node(node->children[1], out);
      out << ']';
      break;
    case NodeKind::Product: {
      if (node->children.empty()) {
        out << '1';
        break;
      }
      bool first = true;
      for (const auto& child : node->children) {
        if (!first) out << ' ';
        first = false;
        // A nested product must stay grouped to survive a round trip.
        if (child->kind == NodeKind::Product)
          format_as_atom(child, out);
        else
          format_node(child, out);
      }
      break;
    }
  }
}

NodePtr normalize_node(const NodePtr& node) {
  switch (node->kind) {
    case NodeKind::Empty:
    case NodeKind::Var:
      return node;
    case NodeKind::Inverse:
      return make_node(NodeKind::Power, {normalize_node(node->children[0])}, 0, -1);
    case NodeKind::Power:
      return make_node(NodeKind::Power, {normalize_node(node->children[0])}, 0, node->exponent);
    case NodeKind::Commutator:
      return make_node(NodeKind::Commutator,
                       {normalize_node(node->children[0]), normalize_node(node->children[1])});
    case NodeKind::Product: {
      std::vector<NodePtr> factors;
      for (const auto& child : node->children) {
        NodePtr c = normalize_node(child);
        if (c->kind == NodeKind::Empty) continue;
        if (c->kind == NodeKind::Product)
          factors.insert(factors.end(), c->children.begin(), c->children.end());
        else
          factors.push_back(std::move(c));
      }
      if (factors.empty()) return empty_node();
      if (factors.size() == 1) return factors.front();
      return make_node(NodeKind::Product, std::move(factors));
    }
  }
  return node;
}

// ------------------------------------------------------------- flattening

class Flattener {
 public:
  explicit Flattener(std::size_t max_letters) : max_letters_(max_letters) {}

  // Appends node^sign to out, freely reducing as it goes.
  void emit(const NodePtr& node, int sign, LetterSeq& out) {
    switch (node->kind) {
      case NodeKind::Empty:
        return;
      case NodeKind::Var:
        push(Letter{node->var, sign}, out);
        return;
      case NodeKind::Inverse:
        emit(node->children[0], -sign, out);
        return;
      case NodeKind::Product:
        if (sign > 0) {
          for (const auto& c : node->children) emit(c, 1, out);
        } else {
          for (auto it = node->children.rbegin(); it != node->children.rend(); ++it)
            emit(*it, -1, out);
        }
        return;
      case NodeKind::Power: {
        std::int64_t e = node->exponent;
        if (e == 0) return;
        int s = (e > 0) == (sign > 0) ? 1 : -1;
        // Flatten the base once and repeat its letters.
        LetterSeq base;
        emit(node->children[0], s, base);
        base = free_reduce(base);
        std::uint64_t reps = e > 0 ? static_cast<std::uint64_t>(e)
                                   : static_cast<std::uint64_t>(-(e + 1)) + 1;
        if (!base.empty() && reps > max_letters_ / base.size())
          throw CapExceeded("word expansion exceeds " + std::to_string(max_letters_) + " letters");
        for (std::uint64_t r = 0; r < reps && !base.empty(); ++r)
          for (const auto& l : base) push(l, out);
        return;
      }
      case NodeKind::Commutator: {
        // ([a,b])^-1 = [b,a]
        const NodePtr& a = node->children[sign > 0 ? 0 : 1];
        const NodePtr& b = node->children[sign > 0 ? 1 : 0];
        emit(a, -1, out);
        emit(b, -1, out);
        emit(a, 1, out);
        emit(b, 1, out);
        return;
      }
    }
  }

 private:
  void push(Letter l, LetterSeq& out) {
    if (!out.empty() && out.back().var == l.var && out.back().sign == -l.sign) {
      out.pop_back();
      return;
    }
    if (out.size() >= max_letters_)
      throw CapExceeded("word expansion exceeds " + std::to_string(max_letters_) + " letters");
    out.push_back(l);
  }

  std::size_t max_letters_;
};

NodePtr substitute_node(const NodePtr& node, const std::vector<NodePtr>& images) {
  switch (node->kind) {
    case NodeKind::Empty:
      return node;
    case NodeKind::Var:
      return images[static_cast<std::size_t>(node->var - 1)];
    default: {
      std::vector<NodePtr> children;
      children.reserve(node->children.size());
      for (const auto& c : node->children) children.push_back(substitute_node(c, images));
      return make_node(node->kind, std::move(children), node->var, node->exponent);
    }
  }
}

void accumulate_exponents(const NodePtr& node, std::int64_t scale, std::vector<std::int64_t>& out) {
  switch (node->kind) {
    case NodeKind::Empty:
    case NodeKind::Commutator:
      return;
    case NodeKind::Var: {
      auto& slot = out[static_cast<std::size_t>(node->var - 1)];
      slot = checked::add(slot, scale);
      return;
    }
    case NodeKind::Inverse:
      accumulate_exponents(node->children[0], checked::neg(scale), out);
      return;
    case NodeKind::Power:
      accumulate_exponents(node->children[0], checked::mul(scale, node->exponent), out);
      return;
    case NodeKind::Product:
      for (const auto& c : node->children) accumulate_exponents(c, scale, out);
      return;
  }
}

}  // namespace

// ------------------------------------------------------------------ Word

Word Word::from_root(int nvars, NodePtr root) {
  Word w(nvars);
  int used = max_var_of(root);
  if (used > nvars)
    throw InputError("word uses x" + std::to_string(used) + " but only " + std::to_string(nvars) +
                     " variables are declared");
  w.root_ = std::move(root);
  return w;
}

Word::Word(int nvars) : nvars_(nvars), root_(empty_node()) {
  if (nvars < 0) throw InputError("negative variable count");
}

Word Word::var(int nvars, int index) {
  if (index < 1 || index > nvars)
    throw InputError("variable x" + std::to_string(index) + " out of range 1.." +
                     std::to_string(nvars));
  return from_root(nvars, make_node(NodeKind::Var, {}, index));
}

Word Word::inverse(const Word& w) {
  return from_root(w.nvars_, make_node(NodeKind::Inverse, {w.root_}));
}

Word Word::product(const std::vector<Word>& factors) {
  if (factors.empty()) throw InputError("empty product needs an explicit arity; use Word::identity");
  std::vector<NodePtr> children;
  children.reserve(factors.size());
  for (const auto& f : factors) {
    require_same_arity(factors.front(), f);
    children.push_back(f.root_);
  }
  return from_root(factors.front().nvars_, make_node(NodeKind::Product, std::move(children)));
}

Word Word::power(const Word& base, std::int64_t exponent) {
  return from_root(base.nvars_, make_node(NodeKind::Power, {base.root_}, 0, exponent));
}

Word Word::commutator(const Word& a, const Word& b) {
  require_same_arity(a, b);
  return from_root(a.nvars_, make_node(NodeKind::Commutator, {a.root_, b.root_}));
}

Word Word::with_nvars(int nvars) const { return from_root(nvars, root_); }

int Word::max_var() const { return max_var_of(root_); }

bool operator==(const Word& a, const Word& b) {
  return a.nvars_ == b.nvars_ && nodes_equal(a.root_, b.root_);
}

Substitution Substitution::of(std::vector<Word> words) {
  Substitution s;
  s.nvars_in = words.empty() ? 0 : words.front().nvars();
  for (const auto& w : words)
    if (w.nvars() != s.nvars_in) throw InputError("substitution words disagree on arity");
  s.words = std::move(words);
  return s;
}

Substitution Substitution::permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<Word> words;
  words.reserve(perm.size());
  for (int target : perm) words.push_back(Word::var(n, target));
  return of(std::move(words));
}

// -------------------------------------------------------------- free API

Word parse_word(std::string_view text, int nvars) {
  if (nvars < 1) throw InputError("nvars must be positive");
  return Word::from_root(nvars, normalize_node(Parser(text, nvars).parse_all()));
}

Word parse_word(std::string_view text) {
  NodePtr root = normalize_node(Parser(text, 0).parse_all());
  return Word::from_root(std::max(1, max_var_of(root)), root);
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  format_node(w.root(), out);
  return out.str();
}

Word normalize(const Word& w) { return Word::from_root(w.nvars(), normalize_node(w.root())); }

LetterSeq flatten_reduce(const Word& w, std::size_t max_letters) {
  LetterSeq out;
  Flattener(max_letters).emit(w.root(), 1, out);
  return out;
}

LetterSeq free_reduce(const LetterSeq& letters) {
  LetterSeq out;
  out.reserve(letters.size());
  for (const auto& l : letters) {
    if (!out.empty() && out.back().var == l.var && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word word_from_letters(const LetterSeq& letters, int nvars) {
  if (letters.empty()) return Word::identity(nvars);
  std::vector<Word> factors;
  factors.reserve(letters.size());
  for (const auto& l : letters) {
    Word x = Word::var(nvars, l.var);
    factors.push_back(l.sign > 0 ? x : Word::power(x, -1));
  }
  return factors.size() == 1 ? factors.front() : Word::product(factors);
}

Word substitute(const Word& w, const Substitution& s) {
  if (static_cast<int>(s.words.size()) != w.nvars())
    throw InputError("substitution supplies " + std::to_string(s.words.size()) +
                     " words for a word in " + std::to_string(w.nvars()) + " variables");
  std::vector<NodePtr> images;
  images.reserve(s.words.size());
  for (const auto& u : s.words) images.push_back(u.root());
  return Word::from_root(s.nvars_in, substitute_node(w.root(), images));
}

std::vector<std::int64_t> abelianized_exponents(const Word& w) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(w.nvars()), 0);
  accumulate_exponents(w.root(), 1, out);
  return out;
}

}  // namespace vc
