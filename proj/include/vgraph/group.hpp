#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vgraph {

using Element = int;

inline constexpr int kDefaultGroupOrderCap = 4096;

// A finite group given by an explicit multiplication table over the
// element indices 0..order-1. Immutable once built.
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int n);
  // Element (i, j) is encoded as i * g2.order() + j.
  static FiniteGroup product(const FiniteGroup& g1, const FiniteGroup& g2,
                             int order_cap = kDefaultGroupOrderCap);
  // Validates the group axioms; associativity is checked exhaustively for
  // order <= 64.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& rows,
                                int order_cap = kDefaultGroupOrderCap);

  int order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element x, Element y) const { return table_[static_cast<size_t>(x) * order_ + y]; }
  Element inv(Element x) const { return inverse_[x]; }
  Element pow(Element x, long k) const;
  bool contains(Element x) const { return x >= 0 && x < order_; }

  const std::string& name(Element x) const { return names_[x]; }
  std::optional<Element> parse_element(std::string_view text) const;

  // Canonical group literal, e.g. "cyclic 6" or "product cyclic 2 cyclic 3".
  const std::string& literal() const { return literal_; }
  // Row-major table, order() * order() entries.
  std::span<const Element> table() const { return table_; }

 private:
  FiniteGroup() = default;
  void finish();

  int order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
  std::string literal_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_cyclic(int n) { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n)); }
GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2, int order_cap = kDefaultGroupOrderCap);

// Smallest k >= 1 with x^k = identity.
int element_order(const FiniteGroup& g, Element x);

class Subgroup {
 public:
  Subgroup(GroupPtr group, std::vector<Element> sorted_elements);

  const GroupPtr& group() const { return group_; }
  const std::vector<Element>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(Element x) const;
  // Index of this subgroup in the whole group.
  int index() const { return group_->order() / size(); }

  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }
  bool is_subgroup_of(const Subgroup& other) const;

 private:
  GroupPtr group_;
  std::vector<Element> elements_;
};

// Closure of gens under multiplication; empty gens give the trivial subgroup.
Subgroup subgroup_generated(const GroupPtr& g, std::span<const Element> gens);
Subgroup whole_group(const GroupPtr& g);
Subgroup cyclic_subgroup(const GroupPtr& g, Element x);

// Sorted left translate a * set.
std::vector<Element> left_translate(const FiniteGroup& g, Element a, std::span<const Element> set);

struct CosetPartition {
  std::vector<std::vector<Element>> cosets;  // each sorted, ordered by minimal element
  std::vector<Element> representatives;      // minimal element of each coset

  int size() const { return static_cast<int>(cosets.size()); }
  // Index of the coset containing x, or -1.
  int coset_of(Element x) const;
};

// Partition `superset` (a left coset of a subgroup containing h) into left
// cosets of h. Throws ValidationError when the superset is not a union of
// left cosets of h.
CosetPartition left_cosets(std::span<const Element> superset, const Subgroup& h);

std::string format_elements(const FiniteGroup& g, std::span<const Element> elems);

}  // namespace vgraph
