#include <cctype>
#include <charconv>

#include "vc/checked.hpp"
#include "vc/error.hpp"
#include "vc/groups.hpp"

namespace vc {

namespace {

void require_prime(std::int64_t p, std::string_view builder) {
  if (!is_prime(p))
    throw InputError(std::string(builder) + ": parameter " + std::to_string(p) + " is not prime");
}

std::size_t checked_order(std::int64_t base, std::int64_t exponent, std::size_t cap) {
  if (exponent < 0 || exponent > 62) throw InputError("exponent parameter out of range");
  std::size_t order = 1;
  for (std::int64_t i = 0; i < exponent; ++i) {
    order *= static_cast<std::size_t>(base);
    if (order > cap)
      throw CapExceeded("requested group order exceeds cap " + std::to_string(cap));
  }
  return order;
}

template <typename Mul>
std::vector<Element> tabulate(std::size_t n, Mul mul) {
  std::vector<Element> t(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a * n + b] = mul(a, b);
  return t;
}

GroupTable cyclic(std::size_t n, std::optional<std::int64_t> prime, std::string name,
                  std::size_t cap) {
  auto table = tabulate(n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); });
  return GroupTable(std::move(name), std::move(table), n, prime, {},
                    {.unsafe = !prime && n != 1, .order_cap = cap});
}

GroupTable elementary_abelian(std::int64_t p, std::int64_t k, std::size_t cap) {
  const std::size_t n = checked_order(p, k, cap);
  const auto q = static_cast<Element>(p);
  // Base-p digits added without carry.
  auto table = tabulate(n, [&](Element a, Element b) {
    Element r = 0, place = 1;
    for (std::int64_t i = 0; i < k; ++i, a /= q, b /= q, place *= q) r += ((a % q + b % q) % q) * place;
    return r;
  });
  return GroupTable("elementary_abelian(" + std::to_string(p) + "," + std::to_string(k) + ")",
                    std::move(table), n, p, {}, {.order_cap = cap});
}

// Upper unitriangular 3x3 matrices over Z/p: (a, b, c) <-> [[1,a,c],[0,1,b],[0,0,1]].
GroupTable heisenberg(std::int64_t p, std::string name, std::size_t cap) {
  const std::size_t n = checked_order(p, 3, cap);
  const auto q = static_cast<Element>(p);
  auto table = tabulate(n, [q](Element x, Element y) {
    Element a1 = x / (q * q), b1 = (x / q) % q, c1 = x % q;
    Element a2 = y / (q * q), b2 = (y / q) % q, c2 = y % q;
    Element a = (a1 + a2) % q, b = (b1 + b2) % q, c = (c1 + c2 + a1 * b2) % q;
    return a * q * q + b * q + c;
  });
  return GroupTable(std::move(name), std::move(table), n, p, {}, {.order_cap = cap});
}

// Z/p^2 semidirect Z/p with b acting on a by a -> a^(1+p); element i + p^2 j = a^i b^j.
GroupTable extraspecial_exp_p2(std::int64_t p, std::size_t cap) {
  const std::size_t n = checked_order(p, 3, cap);
  const auto q = static_cast<std::int64_t>(p), q2 = q * q;
  std::vector<std::int64_t> twist(static_cast<std::size_t>(q), 1);  // (1+p)^j mod p^2
  for (std::size_t j = 1; j < twist.size(); ++j) twist[j] = twist[j - 1] * (1 + q) % q2;
  auto table = tabulate(n, [&](Element x, Element y) {
    std::int64_t i1 = x % q2, j1 = x / q2, i2 = y % q2, j2 = y / q2;
    std::int64_t i = (i1 + i2 * twist[static_cast<std::size_t>(j1)]) % q2, j = (j1 + j2) % q;
    return static_cast<Element>(i + q2 * j);
  });
  return GroupTable("extraspecial_exp_p2(" + std::to_string(p) + ")", std::move(table), n, p, {},
                    {.order_cap = cap});
}

// r^i s^j with s r s = r^-1; element i + 4j.
GroupTable dihedral8(std::size_t cap) {
  auto table = tabulate(8, [](Element x, Element y) {
    Element i1 = x % 4, j1 = x / 4, i2 = y % 4, j2 = y / 4;
    Element i = (j1 ? i1 + 4 - i2 : i1 + i2) % 4;
    return i + 4 * ((j1 + j2) % 2);
  });
  std::vector<std::string> labels{"1", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"};
  return GroupTable("D4", std::move(table), 8, 2, std::move(labels), {.order_cap = cap});
}

// Elements 1,-1,i,-i,j,-j,k,-k; index = 2*unit + (negative ? 1 : 0).
GroupTable quaternion8(std::size_t cap) {
  // unit_mul[u][v] = (sign, unit) of u*v for units 1,i,j,k.
  static constexpr int kUnitMul[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  auto table = tabulate(8, [](Element x, Element y) {
    const int* r = kUnitMul[x / 2][y / 2];
    int sign = r[0] * ((x % 2) ? -1 : 1) * ((y % 2) ? -1 : 1);
    return static_cast<Element>(2 * r[1] + (sign < 0 ? 1 : 0));
  });
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return GroupTable("Q8", std::move(table), 8, 2, std::move(labels), {.order_cap = cap});
}

std::vector<std::int64_t> parse_params(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos == text.size()) break;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc()) throw ParseError("bad group parameter list '" + std::string(text) + "'", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    out.push_back(v);
  }
  return out;
}

GroupTable single_group(std::string_view spec, std::size_t cap) {
  if (spec.empty()) throw InputError("empty group name");
  if (auto open = spec.find('('); open != std::string_view::npos) {
    if (spec.back() != ')') throw ParseError("unterminated parameter list in '" + std::string(spec) + "'", spec.size());
    auto params = parse_params(spec.substr(open + 1, spec.size() - open - 2));
    return build_catalog_group(spec.substr(0, open), params, cap);
  }
  if (spec == "Q8" || spec == "quaternion8") return quaternion8(cap);
  if (spec == "D4" || spec == "D8" || spec == "dihedral8") return dihedral8(cap);
  if (spec == "trivial" || spec == "C1") return build_catalog_group("trivial", {}, cap);
  if (spec.size() > 1 && spec[0] == 'C') {
    std::int64_t n = 0;
    auto [ptr, ec] = std::from_chars(spec.data() + 1, spec.data() + spec.size(), n);
    if (ec == std::errc() && ptr == spec.data() + spec.size() && n >= 1) {
      if (static_cast<std::size_t>(n) > cap)
        throw CapExceeded("requested group order exceeds cap " + std::to_string(cap));
      return cyclic(static_cast<std::size_t>(n), prime_power_base(n), "C" + std::to_string(n), cap);
    }
  }
  throw InputError("unknown group '" + std::string(spec) + "'");
}

}  // namespace

GroupTable build_catalog_group(std::string_view builder, std::span<const std::int64_t> params,
                               std::size_t cap) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count)
      throw InputError(std::string(builder) + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (builder == "trivial") {
    expect(0);
    return cyclic(1, std::nullopt, "trivial", cap);
  }
  if (builder == "cyclic") {
    expect(2);
    require_prime(params[0], builder);
    if (params[1] < 1) throw InputError("cyclic: exponent must be at least 1");
    std::size_t n = checked_order(params[0], params[1], cap);
    return cyclic(n, params[0], "C" + std::to_string(n), cap);
  }
  if (builder == "elementary_abelian") {
    expect(2);
    require_prime(params[0], builder);
    if (params[1] < 1) throw InputError("elementary_abelian: rank must be at least 1");
    return elementary_abelian(params[0], params[1], cap);
  }
  if (builder == "heisenberg") {
    expect(1);
    require_prime(params[0], builder);
    return heisenberg(params[0], "heisenberg(" + std::to_string(params[0]) + ")", cap);
  }
  if (builder == "extraspecial_exp_p") {
    expect(1);
    require_prime(params[0], builder);
    if (params[0] == 2) throw InputError("extraspecial_exp_p: no extraspecial group of exponent 2");
    return heisenberg(params[0], "extraspecial_exp_p(" + std::to_string(params[0]) + ")", cap);
  }
  if (builder == "extraspecial_exp_p2") {
    expect(1);
    require_prime(params[0], builder);
    if (params[0] == 2)
      throw InputError("extraspecial_exp_p2: for p = 2 use dihedral8 or quaternion8");
    return extraspecial_exp_p2(params[0], cap);
  }
  if (builder == "dihedral8") {
    expect(0);
    return dihedral8(cap);
  }
  if (builder == "quaternion8") {
    expect(0);
    return quaternion8(cap);
  }
  throw InputError("unknown catalog builder '" + std::string(builder) + "'");
}

GroupTable group_from_name(std::string_view spec, std::size_t cap) {
  // Factors are separated by an 'x' that follows a digit or ')'.
  std::vector<std::string_view> factors;
  std::size_t start = 0;
  for (std::size_t i = 1; i + 1 < spec.size(); ++i) {
    char prev = spec[i - 1];
    if (spec[i] == 'x' && (std::isdigit(static_cast<unsigned char>(prev)) || prev == ')')) {
      factors.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  factors.push_back(spec.substr(start));
  GroupTable g = single_group(factors.front(), cap);
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, single_group(factors[i], cap), cap);
  return g;
}

std::vector<CatalogBuilder> catalog_builders() {
  return {
      {"cyclic", "(p,k)", "cyclic group of order p^k; shorthand C<n>"},
      {"elementary_abelian", "(p,k)", "(Z/p)^k"},
      {"heisenberg", "(p)", "upper unitriangular 3x3 matrices over Z/p, order p^3"},
      {"extraspecial_exp_p", "(p)", "extraspecial group of order p^3 and exponent p (p odd)"},
      {"extraspecial_exp_p2", "(p)", "extraspecial group of order p^3 and exponent p^2 (p odd)"},
      {"dihedral8", "", "dihedral group of order 8; shorthand D4"},
      {"quaternion8", "", "quaternion group of order 8; shorthand Q8"},
      {"trivial", "", "the group of order 1"},
  };
}

std::vector<std::string> standard_catalog_names() {
  return {"C2",           "C4",        "C8",       "C2xC2",          "C3",
          "C9",           "Q8",        "D4",       "heisenberg(3)",  "C5",
          "C16",          "C3xC3",     "C2xC2xC2", "C4xC2",          "Q8xC2",
          "D4xC2",        "C25",       "C27",      "C9xC3",          "extraspecial_exp_p2(3)",
          "C32",          "Q8xC4",     "D4xC2xC2", "elementary_abelian(2,5)", "Q8xQ8",
          "D4xD4",        "heisenberg(2)xC4xC2", "C7",  "C49"};
}

}  // namespace vc
