#pragma once

// Finite groups as dense Cayley tables.
//
// Elements are indices 0..N-1 and the identity is always 0. A GroupTable is
// immutable once constructed; the center, derived subgroup and class count
// are computed by the constructor, so every query afterwards is read-only.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vc {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 1024;

/// A subset of a group's elements, stored as a bitmask.
class ElementMask {
 public:
  ElementMask() = default;
  explicit ElementMask(std::size_t parent_order, bool all = false);

  static ElementMask of(std::size_t parent_order, std::span<const Element> elements);

  std::size_t parent_order() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool contains(Element e) const { return bits_.at(e); }
  void insert(Element e);

  std::vector<Element> elements() const;

  friend bool operator==(const ElementMask&, const ElementMask&) = default;
  friend bool operator<(const ElementMask& a, const ElementMask& b) { return a.bits_ < b.bits_; }

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

/// Subgroups are element masks closed under products and inverses.
using SubgroupMask = ElementMask;

struct Class2Check {
  bool holds = true;
  /// On failure, (g, h, f) with [g,h] not commuting with f.
  std::optional<std::array<Element, 3>> witness;
};

struct GroupOptions {
  /// Accept groups that are not class <= 2 or not of prime-power order.
  bool unsafe = false;
  std::size_t order_cap = kDefaultOrderCap;
};

class GroupTable {
 public:
  using Options = GroupOptions;

  /// Validates the table (identity row/column, Latin square, associativity,
  /// class <= 2 unless unsafe). `prime`, when given, must match the order;
  /// otherwise it is inferred for prime-power orders. Throws InputError.
  GroupTable(std::string name, std::vector<Element> mul, std::size_t order,
             std::optional<std::int64_t> prime = std::nullopt, std::vector<std::string> labels = {},
             Options options = {});

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  std::optional<std::int64_t> prime() const noexcept { return prime_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element pow(Element a, std::int64_t k) const;
  Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  std::size_t element_order(Element a) const;

  /// Label if present, else the index.
  std::string label(Element a) const;

  bool is_abelian() const noexcept { return center_.size() == order_; }
  bool is_class2() const noexcept { return class2_.holds; }
  bool is_p_group() const noexcept { return prime_.has_value(); }
  const Class2Check& class2_check() const noexcept { return class2_; }
  const SubgroupMask& center() const noexcept { return center_; }
  const SubgroupMask& derived() const noexcept { return derived_; }
  std::size_t conjugacy_class_count() const noexcept { return class_count_; }

  /// Row-major N*N multiplication table.
  std::span<const Element> table() const noexcept { return mul_; }

  /// Throws InputError unless this is a class <= 2 group of prime-power order.
  void require_theorem_ready() const;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::optional<std::int64_t> prime_;
  std::vector<std::string> labels_;
  SubgroupMask center_;
  SubgroupMask derived_;
  Class2Check class2_;
  std::size_t class_count_ = 0;
};

// ----------------------------------------------------------------- catalog

/// Builds one of: cyclic(p,k), elementary_abelian(p,k), heisenberg(p),
/// extraspecial_exp_p(p), extraspecial_exp_p2(p), dihedral8, quaternion8,
/// trivial. Throws InputError for unknown names or bad parameters and
/// CapExceeded when the order would exceed `order_cap`.
GroupTable build_catalog_group(std::string_view builder, std::span<const std::int64_t> params,
                               std::size_t order_cap = kDefaultOrderCap);

/// Resolves names such as "C4", "Q8", "D4", "heisenberg(3)", "cyclic(2,3)"
/// and direct products written "Q8xC2" or "C3xC3".
GroupTable group_from_name(std::string_view spec, std::size_t order_cap = kDefaultOrderCap);

struct CatalogBuilder {
  std::string name;
  std::string parameters;
  std::string description;
};

std::vector<CatalogBuilder> catalog_builders();

/// Class <= 2 p-groups of order <= 64 used as the standard test corpus.
std::vector<std::string> standard_catalog_names();

// ------------------------------------------------------------- operations

GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                          std::size_t order_cap = kDefaultOrderCap);

SubgroupMask centralizer(const GroupTable& g, Element x);

/// [x,G] = {[x,h] : h in G}.
SubgroupMask commutator_image(const GroupTable& g, Element x);

SubgroupMask derived_subgroup(const GroupTable& g);
SubgroupMask center(const GroupTable& g);

/// True if the mask contains 0 and is closed under mul and inv.
bool is_subgroup(const GroupTable& g, const ElementMask& mask);

struct Quotient {
  GroupTable group;
  /// projection[g] is the quotient element containing g.
  std::vector<Element> projection;
  /// representatives[q] is the least element index in coset q.
  std::vector<Element> representatives;
};

/// G/K for a central subgroup K. Quotient elements are ordered by their
/// least representative, so the identity coset is element 0.
/// Throws InputError if K is not a central subgroup.
Quotient central_quotient(const GroupTable& g, const SubgroupMask& k);

Class2Check check_class2(const GroupTable& g);

// --------------------------------------------------------------- file I/O

/// Parses the text format: "order N", optional "name S", optional "prime P",
/// then N rows of N indices. Lines starting with '#' are comments.
GroupTable parse_group_file(std::string_view text, GroupTable::Options options = {});
GroupTable load_group_file(const std::string& path, GroupTable::Options options = {});
std::string format_group_file(const GroupTable& g);

}  // namespace vc
