#pragma once

// Reduction machinery for counting solutions of w = 1 in class-2 p-groups.
//
//  * check_triangular: substitutions u_i = x_i^{m_i} v_i (v_i in later
//    variables, m_i a unit mod p) induce bijections of G^n, so they leave
//    solution counts unchanged.
//  * theorem8_reduce: rewrites a general word as w = w'(u) with
//    w' = x1^m v', v' a product of commutators, and drops the [x1, v1'] part,
//    giving N(G, w) = N(G, w') >= N(G' x G^(n-1), w'').
//  * theorem7_count: evaluates N(G' x G^(n-1), w) for
//    w = x1^m prod_{2<=i<j<=n} [xi,xj]^kij by the centralizer sum
//      sum_g |C_G(g^k)| |[g^k,G]|^(n-2) N(Q' x Q^(n-3), w''),  Q = G/[g^k,G],
//    either exactly (recursing into Q) or as the lower bound |Q|^(n-3).

#include <cstdint>
#include <string>
#include <vector>

#include "vc/certificate.hpp"
#include "vc/count.hpp"
#include "vc/groups.hpp"
#include "vc/nf2.hpp"
#include "vc/words.hpp"

namespace vc {

struct TriangularCheck {
  bool triangular = false;
  /// Variables in order; u of ordering[t] only involves ordering[t..].
  std::vector<int> ordering;
  /// exponents[i-1] = m_i, the exponent of x_i in u_i.
  std::vector<std::int64_t> exponents;
  std::string reason;
};

/// Works on the class-2 normal forms of the u_i: u_i must have exponent
/// m_i prime to p on x_i, and every other generator or commutator it involves
/// must use only variables placed after x_i. [x_i, later] factors are allowed;
/// the induced map stays bijective on class-2 p-groups.
TriangularCheck check_triangular(const Substitution& s, std::int64_t p);

/// Exhaustively checks that f_u permutes G^n and maps the restriction S onto
/// itself. Throws CapExceeded if |G|^n exceeds `cap`.
bool induces_bijection(const GroupTable& g, const Substitution& s, std::uint64_t cap = 1'000'000);
bool preserves_restriction(const GroupTable& g, const Substitution& s, const Restriction& r,
                           std::uint64_t cap = 1'000'000);

struct Theorem8Result {
  bool degenerate = false;
  std::vector<int> renaming;         // new x_i = old x_{renaming[i-1]}
  Word renamed;                      // w with the renaming applied
  Substitution substitution;         // u, identity in the degenerate case
  std::int64_t m = 0;
  std::vector<std::int64_t> k;       // exponents of u_1 = x1^k1 ... xn^kn
  NormalForm2 w_prime;               // x1^m v', reduced mod M
  Word v1_prime;
  NormalForm2 w_doubleprime;         // x1^m v2', reduced mod M
  std::vector<Step> steps;
};

/// Throws InputError unless p is prime and M a positive power of p.
/// Throws InvariantViolation if the solved w' fails to re-collect to w.
Theorem8Result theorem8_reduce(const Word& w, std::int64_t p, std::int64_t modulus);

struct Theorem7Result {
  std::uint64_t value = 0;
  Certificate certificate;
};

/// nf must have k_j = 0 for j >= 2 and k_1j = 0 (modulo |G|).
/// Throws InputError on precondition violations or if G is not a class-2 p-group.
Theorem7Result theorem7_count(const GroupTable& g, const NormalForm2& nf, Mode mode,
                              unsigned workers = 1);

struct ChainLink {
  std::string name;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  std::string relation;  // "=", ">=" or "<="
  bool holds = false;
};

struct VerifyReport {
  std::string group;
  std::string word;
  int nvars = 0;
  std::uint64_t count_w = 0;              // N(G, w)
  std::uint64_t count_w_prime = 0;        // N(G, w')
  std::uint64_t count_w_doubleprime = 0;  // N(G' x G^(n-1), w'')
  std::uint64_t theorem7_exact = 0;
  std::uint64_t theorem7_bound = 0;
  std::uint64_t bound = 0;                // |G|^(n-1)
  Theorem8Result reduction;
  Certificate exact_certificate;
  Certificate bound_certificate;
  std::vector<ChainLink> links;
  bool holds = false;
};

/// Runs the reduction and both recursion modes, brute-forces N(G,w), N(G,w')
/// and N(G' x G^(n-1), w''), and checks each link of
///   N(G,w) = N(G,w') >= N(G' x G^(n-1), w'') >= |G|^(n-1)
/// together with recursion exactness, bound soundness and certificate replay.
VerifyReport verify_amit(const GroupTable& g, const Word& w, const CountOptions& options = {});

Json to_json(const VerifyReport& report);

}  // namespace vc
