#include <doctest.h>

#include <numeric>
#include <sstream>

#include "helpers.hpp"
#include "oracle.hpp"
#include "vc/error.hpp"
#include "vc/groups.hpp"

using namespace vc;
using testing::element;

namespace {

std::string table_text(const oracle::Table& t, const std::string& header = "") {
  std::ostringstream out;
  out << "# generated\norder " << t.n << '\n' << header;
  for (std::size_t a = 0; a < t.n; ++a) {
    for (std::size_t b = 0; b < t.n; ++b) out << (b ? " " : "") << t(static_cast<int>(a), static_cast<int>(b));
    out << '\n';
  }
  return out.str();
}

std::size_t gcd_size(std::size_t a, std::size_t b) { return std::gcd(a, b); }

}  // namespace

TEST_CASE("Q8 center and derived subgroup") {
  GroupTable q = group_from_name("Q8");
  CHECK(q.order() == 8);
  CHECK(q.center().size() == 2);
  CHECK(q.derived().size() == 2);
  CHECK(q.is_class2());
  CHECK_FALSE(q.is_abelian());
  CHECK(q.prime() == 2);
  CHECK(derived_subgroup(q) == ElementMask::of(8, std::vector<Element>{0, element(q, "-1")}));
}

TEST_CASE("heisenberg(3): order 27, class exactly 2, exponent 3") {
  GroupTable h = group_from_name("heisenberg(3)");
  CHECK(h.order() == 27);
  CHECK(h.is_class2());
  CHECK_FALSE(h.is_abelian());
  for (Element x = 1; x < h.order(); ++x) CHECK(h.element_order(x) == 3);
  CHECK(derived_subgroup(h).size() == 3);
  CHECK(derived_subgroup(h) == center(h));
}

TEST_CASE("centralizers and commutator images") {
  GroupTable q = group_from_name("Q8");
  const Element i = element(q, "i");
  CHECK(centralizer(q, i).size() == 4);
  CHECK(commutator_image(q, i) == ElementMask::of(8, std::vector<Element>{0, element(q, "-1")}));

  GroupTable d = group_from_name("D4");
  const Element s = element(d, "s");
  CHECK_FALSE(d.center().contains(s));
  CHECK(centralizer(d, s).size() == 4);

  GroupTable h = group_from_name("heisenberg(3)");
  for (Element x = 0; x < h.order(); ++x)
    CHECK(commutator_image(h, x).size() == (h.center().contains(x) ? 1u : 3u));
}

TEST_CASE("catalog agrees with concrete models") {
  struct Case {
    std::string name;
    oracle::Table model;
  };
  std::vector<Case> cases{{"Q8", oracle::quaternion_matrices()},
                          {"D4", oracle::square_symmetries()},
                          {"heisenberg(3)", oracle::unitriangular(3)},
                          {"heisenberg(2)", oracle::unitriangular(2)},
                          {"C4xC2", oracle::residues({4, 2})},
                          {"Q8xC2", oracle::product(oracle::quaternion_matrices(), oracle::residues({2}))}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    GroupTable g = group_from_name(c.name);
    REQUIRE(g.order() == c.model.n);
    CHECK(g.conjugacy_class_count() == oracle::class_count(c.model));
    CHECK(g.center().size() == oracle::center_size(c.model));
    // Element order statistics are isomorphism invariants.
    std::vector<std::size_t> lib, model;
    for (Element x = 0; x < g.order(); ++x) lib.push_back(g.element_order(x));
    for (std::size_t x = 0; x < c.model.n; ++x) {
      std::size_t k = 1;
      for (int y = static_cast<int>(x); y != c.model.id; y = c.model(y, static_cast<int>(x))) ++k;
      model.push_back(k);
    }
    std::sort(lib.begin(), lib.end());
    std::sort(model.begin(), model.end());
    CHECK(lib == model);
  }
}

TEST_CASE("central quotients") {
  GroupTable q = group_from_name("Q8");
  Quotient qq = central_quotient(q, q.derived());
  CHECK(qq.group.order() == 4);
  CHECK(qq.group.is_abelian());
  for (Element x = 0; x < q.order(); ++x)
    for (Element y = 0; y < q.order(); ++y)
      CHECK(qq.projection[q.mul(x, y)] == qq.group.mul(qq.projection[x], qq.projection[y]));

  GroupTable h = group_from_name("heisenberg(3)");
  Quotient hz = central_quotient(h, h.center());
  CHECK(hz.group.order() == 9);
  CHECK(hz.group.is_abelian());
  CHECK(hz.group.prime() == 3);
  CHECK(hz.projection[0] == 0);

  GroupTable d = group_from_name("D4");
  ElementMask not_central = ElementMask::of(8, std::vector<Element>{0, element(d, "s")});
  CHECK_THROWS_AS(central_quotient(d, not_central), InputError);
}

TEST_CASE("non-class-2 tables are rejected unless unsafe") {
  const std::string s3 = table_text(oracle::symmetric3());
  CHECK_THROWS_AS(parse_group_file(s3), InputError);
  GroupTable g = parse_group_file(s3, {.unsafe = true});
  Class2Check c = check_class2(g);
  CHECK_FALSE(c.holds);
  REQUIRE(c.witness.has_value());
  auto [a, b, f] = *c.witness;
  Element comm = g.commutator(a, b);
  CHECK(g.mul(comm, f) != g.mul(f, comm));
  CHECK_THROWS_AS(g.require_theorem_ready(), InputError);
}

TEST_CASE("direct products") {
  GroupTable v = group_from_name("C2xC2");
  CHECK(v.order() == 4);
  CHECK(v.is_abelian());
  for (Element x = 0; x < 4; ++x) CHECK(v.mul(x, x) == 0);

  GroupTable q2 = group_from_name("Q8xC2");
  CHECK(q2.order() == 16);
  CHECK(q2.is_class2());
  CHECK_FALSE(q2.is_abelian());
  CHECK(q2.prime() == 2);

  GroupTable q = group_from_name("Q8");
  GroupTable qt = direct_product(q, group_from_name("trivial"));
  CHECK(std::equal(qt.table().begin(), qt.table().end(), q.table().begin(), q.table().end()));
  CHECK(qt.name() == "Q8");

  GroupTable mixed = direct_product(group_from_name("C2"), group_from_name("C3"));
  CHECK_FALSE(mixed.is_p_group());
  CHECK(mixed.order() == 6);
}

TEST_CASE("group file round trip and errors") {
  GroupTable q = group_from_name("Q8");
  GroupTable back = parse_group_file(format_group_file(q));
  CHECK(back.name() == "Q8");
  CHECK(back.prime() == 2);
  CHECK(std::equal(back.table().begin(), back.table().end(), q.table().begin(), q.table().end()));

  GroupTable m = parse_group_file(table_text(oracle::residues({4})));
  CHECK(m.prime() == 2);  // inferred

  CHECK_THROWS_AS(parse_group_file(""), ParseError);
  CHECK_THROWS_AS(parse_group_file("order 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("order 2\n0 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("order 2\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("order 2\n0 1 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("order 2\n0 1\n0 1\n"), InputError);           // not Latin
  CHECK_THROWS_AS(parse_group_file("order 2\n1 0\n0 1\n"), InputError);           // identity not at 0
  CHECK_THROWS_AS(parse_group_file("order 2\nprime 3\n0 1\n1 0\n"), InputError);  // wrong prime
  CHECK_THROWS_AS(parse_group_file("order 6\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file(table_text(oracle::residues({6}))), InputError);  // not a p-group
  CHECK_NOTHROW(parse_group_file(table_text(oracle::residues({6})), {.unsafe = true}));
  CHECK_THROWS_AS(parse_group_file("order 2000\n"), CapExceeded);
  try {
    parse_group_file("order 2\n0 1\n1 x\n");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("non-associative tables are rejected") {
  // A Latin square with identity 0 that is not a group (the loop of order 5).
  std::string loop = "order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
  CHECK_THROWS_AS(parse_group_file(loop, {.unsafe = true}), InputError);
}

TEST_CASE("catalog builders and names") {
  CHECK(group_from_name("cyclic(2,3)").order() == 8);
  CHECK(group_from_name("elementary_abelian(3,2)").order() == 9);
  CHECK(group_from_name("extraspecial_exp_p(3)").order() == 27);
  GroupTable e = group_from_name("extraspecial_exp_p2(3)");
  CHECK(e.order() == 27);
  CHECK(e.center().size() == 3);
  std::size_t max_order = 0;
  for (Element x = 0; x < e.order(); ++x) max_order = std::max(max_order, e.element_order(x));
  CHECK(max_order == 9);
  CHECK(group_from_name("C1").order() == 1);
  CHECK_THROWS_AS(group_from_name("nonsense"), InputError);
  CHECK_THROWS_AS(group_from_name("cyclic(4,1)"), InputError);
  CHECK_THROWS_AS(group_from_name("extraspecial_exp_p(2)"), InputError);
  CHECK_THROWS_AS(group_from_name("C2048"), CapExceeded);
  CHECK_THROWS_AS(group_from_name("Q8xQ8xQ8xC4"), CapExceeded);
  CHECK(catalog_builders().size() >= 7);
}

TEST_CASE("standard catalog: class 2, prime power, derived in center") {
  for (const auto& name : standard_catalog_names()) {
    CAPTURE(name);
    GroupTable g = group_from_name(name);
    CHECK(g.order() <= 64);
    CHECK(g.is_class2());
    CHECK(g.is_p_group());
    CHECK(is_subgroup(g, g.derived()));
    CHECK(is_subgroup(g, g.center()));
    for (Element x : g.derived().elements()) CHECK(g.center().contains(x));
  }
}

TEST_CASE("centralizer times commutator image is the order") {
  for (const auto& name : standard_catalog_names()) {
    CAPTURE(name);
    GroupTable g = group_from_name(name);
    for (Element x = 0; x < g.order(); ++x) {
      SubgroupMask c = centralizer(g, x);
      SubgroupMask img = commutator_image(g, x);
      CHECK(c.size() * img.size() == g.order());
      CHECK(is_subgroup(g, c));
      CHECK(is_subgroup(g, img));
    }
  }
}

TEST_CASE("power maps with exponent prime to p are permutations") {
  for (const auto& name : standard_catalog_names()) {
    CAPTURE(name);
    GroupTable g = group_from_name(name);
    const auto p = static_cast<std::size_t>(*g.prime());
    for (std::size_t m = 1; m < g.order(); ++m) {
      if (gcd_size(m, p) != 1) continue;
      ElementMask image(g.order());
      for (Element x = 0; x < g.order(); ++x) image.insert(g.pow(x, static_cast<std::int64_t>(m)));
      CHECK(image.size() == g.order());
    }
  }
}

TEST_CASE("pow handles negative and large exponents") {
  GroupTable c = group_from_name("C8");
  CHECK(c.pow(1, -1) == c.inv(1));
  CHECK(c.pow(3, 8) == 0);
  CHECK(c.pow(1, 8 * 1000003 + 3) == c.pow(1, 3));
}
