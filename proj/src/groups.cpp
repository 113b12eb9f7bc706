#include "vc/groups.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>

#include "vc/checked.hpp"
#include "vc/error.hpp"

namespace vc {

// ------------------------------------------------------------ ElementMask

ElementMask::ElementMask(std::size_t parent_order, bool all)
    : bits_(parent_order, all), count_(all ? parent_order : 0) {}

ElementMask ElementMask::of(std::size_t parent_order, std::span<const Element> elements) {
  ElementMask m(parent_order);
  for (Element e : elements) m.insert(e);
  return m;
}

void ElementMask::insert(Element e) {
  if (!bits_.at(e)) {
    bits_[e] = true;
    ++count_;
  }
}

std::vector<Element> ElementMask::elements() const {
  std::vector<Element> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<Element>(i));
  return out;
}

// ------------------------------------------------------------- GroupTable

namespace {

void check_associativity(const std::vector<Element>& mul, std::size_t n) {
  auto m = [&](Element a, Element b) { return mul[a * n + b]; };
  auto fail = [](Element a, Element b, Element c) {
    throw InputError("table is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                     "," + std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (m(m(a, b), c) != m(a, m(b, c))) fail(a, b, c);
    return;
  }
  std::mt19937_64 rng(0x5eed);
  for (int t = 0; t < 100000; ++t) {
    auto a = static_cast<Element>(rng() % n), b = static_cast<Element>(rng() % n),
         c = static_cast<Element>(rng() % n);
    if (m(m(a, b), c) != m(a, m(b, c))) fail(a, b, c);
  }
}

// Closure of a generating set under multiplication (finite, so inverses come free).
SubgroupMask generated_subgroup(const GroupTable& g, const std::vector<Element>& gens) {
  SubgroupMask h(g.order());
  h.insert(0);
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      Element y = g.mul(x, s);
      if (!h.contains(y)) {
        h.insert(y);
        queue.push_back(y);
      }
    }
  }
  return h;
}

}  // namespace

GroupTable::GroupTable(std::string name, std::vector<Element> mul, std::size_t order,
                       std::optional<std::int64_t> prime, std::vector<std::string> labels,
                       Options options)
    : name_(std::move(name)), order_(order), mul_(std::move(mul)), labels_(std::move(labels)) {
  const std::size_t n = order_;
  if (n == 0) throw InputError("group order must be positive");
  if (n > options.order_cap)
    throw CapExceeded("group order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(options.order_cap));
  if (mul_.size() != n * n) throw InputError("multiplication table must have N*N entries");
  if (!labels_.empty() && labels_.size() != n) throw InputError("label count must equal the order");

  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n), col_seen(n);
    for (std::size_t b = 0; b < n; ++b) {
      Element r = mul_[a * n + b], c = mul_[b * n + a];
      if (r >= n || c >= n) throw InputError("table entry out of range");
      if (row_seen[r] || col_seen[c]) throw InputError("table is not a Latin square");
      row_seen[r] = col_seen[c] = true;
    }
    if (mul_[a] != a || mul_[a * n] != a) throw InputError("element 0 must be the identity");
  }
  check_associativity(mul_, n);

  inv_.resize(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (mul_[a * n + b] == 0) inv_[a] = b;

  if (prime) {
    if (!is_prime(*prime)) throw InputError("declared prime " + std::to_string(*prime) + " is not prime");
    std::size_t m = n;
    while (m % static_cast<std::size_t>(*prime) == 0) m /= static_cast<std::size_t>(*prime);
    if (m != 1)
      throw InputError("order " + std::to_string(n) + " is not a power of " + std::to_string(*prime));
    prime_ = prime;
  } else {
    prime_ = prime_power_base(static_cast<std::int64_t>(n));
  }

  // Center.
  center_ = SubgroupMask(n);
  for (Element z = 0; z < n; ++z) {
    bool central = true;
    for (Element h = 0; h < n && central; ++h) central = this->mul(z, h) == this->mul(h, z);
    if (central) center_.insert(z);
  }

  // Commutator set, class check and derived subgroup.
  ElementMask commutators(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element c = commutator(a, b);
      if (!center_.contains(c) && !class2_.witness) {
        for (Element f = 0; f < n; ++f) {
          if (this->mul(c, f) != this->mul(f, c)) {
            class2_ = Class2Check{false, std::array<Element, 3>{a, b, f}};
            break;
          }
        }
      }
      commutators.insert(c);
    }
  }
  derived_ = generated_subgroup(*this, commutators.elements());

  // Conjugacy classes.
  std::vector<bool> seen(n);
  for (Element g = 0; g < n; ++g) {
    if (seen[g]) continue;
    ++class_count_;
    for (Element h = 0; h < n; ++h) seen[this->mul(this->mul(inv_[h], g), h)] = true;
  }

  if (!options.unsafe) {
    if (!class2_.holds)
      throw InputError("group '" + name_ + "' has nilpotency class above 2 (use --unsafe to load anyway)");
    if (!prime_ && n != 1)
      throw InputError("group '" + name_ + "' is not a p-group (use --unsafe to load anyway)");
  }
}

Element GroupTable::pow(Element a, std::int64_t k) const {
  // g^|G| = 1, so any exponent can be reduced modulo the order.
  auto e = static_cast<std::uint64_t>(mod_floor(k, static_cast<std::int64_t>(order_)));
  Element result = 0, base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t GroupTable::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::string GroupTable::label(Element a) const {
  return labels_.empty() ? std::to_string(a) : labels_.at(a);
}

void GroupTable::require_theorem_ready() const {
  if (!class2_.holds) throw InputError("group '" + name_ + "' has nilpotency class above 2");
  if (!prime_) throw InputError("group '" + name_ + "' is not a p-group");
}

// ------------------------------------------------------------- operations

SubgroupMask centralizer(const GroupTable& g, Element x) {
  SubgroupMask c(g.order());
  for (Element h = 0; h < g.order(); ++h)
    if (g.mul(x, h) == g.mul(h, x)) c.insert(h);
  return c;
}

SubgroupMask commutator_image(const GroupTable& g, Element x) {
  SubgroupMask img(g.order());
  for (Element h = 0; h < g.order(); ++h) img.insert(g.commutator(x, h));
  return img;
}

SubgroupMask derived_subgroup(const GroupTable& g) { return g.derived(); }

SubgroupMask center(const GroupTable& g) { return g.center(); }

bool is_subgroup(const GroupTable& g, const ElementMask& mask) {
  if (mask.parent_order() != g.order() || !mask.contains(0)) return false;
  auto elems = mask.elements();
  for (Element a : elems) {
    if (!mask.contains(g.inv(a))) return false;
    for (Element b : elems)
      if (!mask.contains(g.mul(a, b))) return false;
  }
  return true;
}

Quotient central_quotient(const GroupTable& g, const SubgroupMask& k) {
  if (!is_subgroup(g, k)) throw InputError("quotient requires a subgroup");
  for (Element e : k.elements())
    if (!g.center().contains(e)) throw InputError("quotient requires a central subgroup");

  const std::size_t n = g.order();
  const auto members = k.elements();
  constexpr Element kUnassigned = ~Element{0};
  std::vector<Element> projection(n, kUnassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (projection[x] != kUnassigned) continue;
    auto q = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element z : members) projection[g.mul(x, z)] = q;
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = projection[g.mul(reps[a], reps[b])];

  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Element r : reps) labels.push_back(g.labels()[r]);

  // A quotient of a class <= 2 p-group is again one; the prime survives.
  GroupTable::Options opts{.unsafe = true, .order_cap = std::max(n, kDefaultOrderCap)};
  GroupTable quotient(g.name() + "/" + std::to_string(k.size()), std::move(table), m,
                      m > 1 ? g.prime() : std::nullopt, std::move(labels), opts);
  return Quotient{std::move(quotient), std::move(projection), std::move(reps)};
}

Class2Check check_class2(const GroupTable& g) { return g.class2_check(); }

GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::size_t order_cap) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > order_cap)
    throw CapExceeded("direct product order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(order_cap));
  // (x, y) -> x * nb + y keeps (0, 0) at index 0.
  std::vector<Element> table(n * n);
  for (Element x1 = 0; x1 < na; ++x1)
    for (Element y1 = 0; y1 < nb; ++y1)
      for (Element x2 = 0; x2 < na; ++x2)
        for (Element y2 = 0; y2 < nb; ++y2)
          table[(x1 * nb + y1) * n + (x2 * nb + y2)] =
              static_cast<Element>(a.mul(x1, x2) * nb + b.mul(y1, y2));

  std::optional<std::int64_t> prime;
  if (na == 1) prime = b.prime();
  else if (nb == 1) prime = a.prime();
  else if (a.prime() && a.prime() == b.prime()) prime = a.prime();

  std::vector<std::string> labels;
  if (nb == 1) labels = a.labels();
  else if (!a.labels().empty() || !b.labels().empty())
    for (Element x = 0; x < na; ++x)
      for (Element y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");

  std::string name = nb == 1 ? a.name() : na == 1 ? b.name() : a.name() + "x" + b.name();
  bool unsafe = !prime || !a.is_class2() || !b.is_class2();
  return GroupTable(std::move(name), std::move(table), n, prime, std::move(labels),
                    {.unsafe = unsafe, .order_cap = order_cap});
}

// --------------------------------------------------------------- file I/O

GroupTable parse_group_file(std::string_view text, GroupTable::Options options) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> order;
  std::optional<std::int64_t> prime;
  std::string name = "file";
  std::vector<Element> table;

  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("group file line " + std::to_string(line_no) + ": " + msg, line_no);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!order) {
      std::string key;
      long long value = 0;
      fields >> key;
      if (key != "order" || !(fields >> value) || value < 1) fail("expected 'order N'");
      if (static_cast<std::size_t>(value) > options.order_cap)
        throw CapExceeded("group order " + std::to_string(value) + " exceeds cap " +
                          std::to_string(options.order_cap));
      order = static_cast<std::size_t>(value);
      continue;
    }
    if (table.empty()) {
      std::string key;
      fields >> key;
      if (key == "name") {
        std::getline(fields >> std::ws, name);
        continue;
      }
      if (key == "prime") {
        long long p = 0;
        if (!(fields >> p)) fail("expected 'prime P'");
        prime = p;
        continue;
      }
      fields.clear();
      fields.seekg(0);
    }
    if (table.size() >= *order * *order) fail("too many table rows");
    std::size_t count = 0;
    long long v;
    while (fields >> v) {
      if (v < 0 || static_cast<std::size_t>(v) >= *order) fail("entry " + std::to_string(v) + " out of range");
      table.push_back(static_cast<Element>(v));
      ++count;
    }
    if (!fields.eof()) fail("non-numeric table entry");
    if (count != *order) fail("row has " + std::to_string(count) + " entries, expected " + std::to_string(*order));
  }
  if (!order) throw ParseError("group file: missing 'order N' line", 0);
  if (table.size() != *order * *order)
    throw ParseError("group file: expected " + std::to_string(*order) + " table rows", line_no);
  return GroupTable(name, std::move(table), *order, prime, {}, options);
}

GroupTable load_group_file(const std::string& path, GroupTable::Options options) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str(), options);
}

std::string format_group_file(const GroupTable& g) {
  std::ostringstream out;
  out << "order " << g.order() << '\n' << "name " << g.name() << '\n';
  if (g.prime()) out << "prime " << *g.prime() << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
  return out.str();
}

}  // namespace vc
