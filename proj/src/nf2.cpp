#include "vc/nf2.hpp"

#include <sstream>

#include "vc/checked.hpp"
#include "vc/error.hpp"

namespace vc {

namespace {

void require_exact(const NormalForm2& nf) {
  if (nf.modulus()) throw InputError("class-2 arithmetic expects exact (unreduced) normal forms");
}

NormalForm2 collect_node(const NodePtr& node, int nvars) {
  switch (node->kind) {
    case NodeKind::Empty:
      return NormalForm2(nvars);
    case NodeKind::Var:
      return NormalForm2::generator(nvars, node->var);
    case NodeKind::Inverse:
      return collect_node(node->children[0], nvars).inverse();
    case NodeKind::Power:
      return collect_node(node->children[0], nvars).pow(node->exponent);
    case NodeKind::Commutator:
      return NormalForm2::commutator(collect_node(node->children[0], nvars),
                                     collect_node(node->children[1], nvars));
    case NodeKind::Product: {
      NormalForm2 acc(nvars);
      for (const auto& c : node->children) acc = acc * collect_node(c, nvars);
      return acc;
    }
  }
  return NormalForm2(nvars);
}

}  // namespace

NormalForm2::NormalForm2(int nvars)
    : nvars_(nvars), gen_(static_cast<std::size_t>(nvars), 0), comm_(pair_count(nvars), 0) {
  if (nvars < 0) throw InputError("negative variable count");
}

std::size_t NormalForm2::pair_index(int i, int j) const {
  if (i < 1 || j > nvars_ || i >= j)
    throw InputError("commutator index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") invalid for " + std::to_string(nvars_) + " variables");
  // Pairs (1,2)..(1,n), (2,3)..(2,n), ...
  auto n = static_cast<std::size_t>(nvars_);
  auto a = static_cast<std::size_t>(i - 1);
  auto b = static_cast<std::size_t>(j - 1);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

void NormalForm2::set_gen(int i, std::int64_t value) {
  gen_.at(static_cast<std::size_t>(i - 1)) = modulus_ ? mod_floor(value, *modulus_) : value;
}

void NormalForm2::set_comm(int i, int j, std::int64_t value) {
  comm_.at(pair_index(i, j)) = modulus_ ? mod_floor(value, *modulus_) : value;
}

bool NormalForm2::has_commutators() const {
  for (auto c : comm_)
    if (c != 0) return true;
  return false;
}

bool NormalForm2::is_identity() const {
  for (auto g : gen_)
    if (g != 0) return false;
  return !has_commutators();
}

NormalForm2 NormalForm2::generator(int nvars, int i) {
  NormalForm2 nf(nvars);
  nf.set_gen(i, 1);
  return nf;
}

NormalForm2 operator*(const NormalForm2& a, const NormalForm2& b) {
  require_exact(a);
  require_exact(b);
  if (a.nvars_ != b.nvars_) throw InputError("normal forms over different variable counts");
  NormalForm2 r(a.nvars_);
  const int n = a.nvars_;
  for (int i = 1; i <= n; ++i) r.gen_[static_cast<std::size_t>(i - 1)] = checked::add(a.gen(i), b.gen(i));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // Moving b's x_i^{b_i} left past a's x_j^{a_j} yields [x_i,x_j]^{-a_j b_i}.
      std::int64_t v = checked::add(a.comm(i, j), b.comm(i, j));
      v = checked::sub(v, checked::mul(a.gen(j), b.gen(i)));
      r.comm_[r.pair_index(i, j)] = v;
    }
  }
  return r;
}

NormalForm2 NormalForm2::inverse() const { return pow(-1); }

NormalForm2 NormalForm2::pow(std::int64_t k) const {
  require_exact(*this);
  NormalForm2 r(nvars_);
  const std::int64_t c2 = checked::choose2(k);
  for (int i = 1; i <= nvars_; ++i) r.gen_[static_cast<std::size_t>(i - 1)] = checked::mul(k, gen(i));
  for (int i = 1; i <= nvars_; ++i) {
    for (int j = i + 1; j <= nvars_; ++j) {
      std::int64_t v = checked::mul(k, comm(i, j));
      v = checked::sub(v, checked::mul(c2, checked::mul(gen(i), gen(j))));
      r.comm_[r.pair_index(i, j)] = v;
    }
  }
  return r;
}

NormalForm2 NormalForm2::commutator(const NormalForm2& a, const NormalForm2& b) {
  return a.inverse() * b.inverse() * a * b;
}

NormalForm2 NormalForm2::widened(int nvars) const {
  if (nvars < nvars_) throw InputError("cannot narrow a normal form");
  NormalForm2 r(nvars);
  r.modulus_ = modulus_;
  for (int i = 1; i <= nvars_; ++i) r.gen_[static_cast<std::size_t>(i - 1)] = gen(i);
  for (int i = 1; i <= nvars_; ++i)
    for (int j = i + 1; j <= nvars_; ++j) r.comm_[r.pair_index(i, j)] = comm(i, j);
  return r;
}

Word NormalForm2::to_word() const {
  std::vector<Word> factors;
  for (int i = 1; i <= nvars_; ++i)
    if (gen(i) != 0) factors.push_back(Word::power(Word::var(nvars_, i), gen(i)));
  for (int i = 1; i <= nvars_; ++i)
    for (int j = i + 1; j <= nvars_; ++j)
      if (comm(i, j) != 0)
        factors.push_back(Word::power(
            Word::commutator(Word::var(nvars_, i), Word::var(nvars_, j)), comm(i, j)));
  if (factors.empty()) return Word::identity(nvars_);
  if (factors.size() == 1) return factors.front();
  return Word::product(factors);
}

NormalForm2 collect(const Word& w) { return collect_node(w.root(), w.nvars()); }

NormalForm2 collect_letters(const LetterSeq& letters, int nvars) {
  NormalForm2 nf(nvars);
  for (const auto& l : letters) {
    for (int j = l.var + 1; j <= nvars; ++j)
      nf.set_comm(l.var, j, checked::sub(nf.comm(l.var, j), checked::mul(l.sign, nf.gen(j))));
    nf.set_gen(l.var, checked::add(nf.gen(l.var), l.sign));
  }
  return nf;
}

NormalForm2 reduce_exponents_mod(const NormalForm2& nf, std::int64_t modulus) {
  if (modulus < 1) throw InputError("modulus must be positive");
  NormalForm2 r = nf;
  r.modulus_ = modulus;
  for (auto& g : r.gen_) g = mod_floor(g, modulus);
  for (auto& c : r.comm_) c = mod_floor(c, modulus);
  return r;
}

std::pair<Word, NormalForm2> split_x1(const NormalForm2& nf) {
  const int n = nf.nvars();
  std::vector<Word> factors;
  NormalForm2 rest = nf;
  for (int j = 2; j <= n; ++j) {
    if (nf.comm(1, j) == 0) continue;
    factors.push_back(Word::power(Word::var(n, j), nf.comm(1, j)));
    rest.set_comm(1, j, 0);
  }
  Word v1 = factors.empty()        ? Word::identity(n)
            : factors.size() == 1 ? factors.front()
                                  : Word::product(factors);
  return {v1, rest};
}

std::string format_normal_form(const NormalForm2& nf) { return format_word(nf.to_word()); }

}  // namespace vc
