#include "vgraph/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vgraph/error.hpp"

namespace vgraph {

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be positive, got " + std::to_string(n));
  FiniteGroup g;
  g.order_ = n;
  g.identity_ = 0;
  g.table_.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g.table_[static_cast<size_t>(x) * n + y] = (x + y) % n;
  g.names_.resize(n);
  for (int x = 0; x < n; ++x) g.names_[x] = std::to_string(x);
  g.literal_ = "cyclic " + std::to_string(n);
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g1, const FiniteGroup& g2, int order_cap) {
  const long order = static_cast<long>(g1.order()) * g2.order();
  if (order > order_cap)
    throw ValidationError("direct product order " + std::to_string(order) + " exceeds cap " +
                          std::to_string(order_cap));
  const int n2 = g2.order();
  FiniteGroup g;
  g.order_ = static_cast<int>(order);
  g.identity_ = g1.identity() * n2 + g2.identity();
  g.table_.resize(static_cast<size_t>(order) * order);
  for (int x = 0; x < g.order_; ++x) {
    for (int y = 0; y < g.order_; ++y) {
      const Element first = g1.mul(x / n2, y / n2);
      const Element second = g2.mul(x % n2, y % n2);
      g.table_[static_cast<size_t>(x) * g.order_ + y] = first * n2 + second;
    }
  }
  g.names_.resize(g.order_);
  for (int x = 0; x < g.order_; ++x) g.names_[x] = g1.name(x / n2) + "," + g2.name(x % n2);
  g.literal_ = "product " + g1.literal() + " " + g2.literal();
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& rows, int order_cap) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw ValidationError("group table is empty");
  if (n > order_cap) throw ValidationError("group table order exceeds cap");
  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(rows[x].size()) != n)
      throw ValidationError("group table row " + std::to_string(x) + " has wrong length");
    std::vector<bool> seen(n, false);
    for (int y = 0; y < n; ++y) {
      const int z = rows[x][y];
      if (z < 0 || z >= n) throw ValidationError("group table entry out of range");
      if (seen[z]) throw ValidationError("group table row " + std::to_string(x) + " is not a permutation");
      seen[z] = true;
      g.table_[static_cast<size_t>(x) * n + y] = z;
    }
  }
  for (int y = 0; y < n; ++y) {
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
      const int z = g.mul(x, y);
      if (seen[z]) throw ValidationError("group table column " + std::to_string(y) + " is not a permutation");
      seen[z] = true;
    }
  }
  // In a Latin square with a two-sided identity, the identity is the e with e*e = e.
  int identity = -1;
  for (int x = 0; x < n; ++x)
    if (g.mul(x, x) == x) identity = x;
  if (identity < 0) throw ValidationError("group table has no identity");
  for (int x = 0; x < n; ++x)
    if (g.mul(identity, x) != x || g.mul(x, identity) != x)
      throw ValidationError("group table has no two-sided identity");
  g.identity_ = identity;
  if (n <= 64) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
            throw ValidationError("group table is not associative at (" + std::to_string(x) + "," +
                                  std::to_string(y) + "," + std::to_string(z) + ")");
  }
  g.names_.resize(n);
  for (int x = 0; x < n; ++x) g.names_[x] = std::to_string(x);
  std::ostringstream text;
  text << "table " << n;
  for (int x = 0; x < n; ++x) {
    text << "\n";
    for (int y = 0; y < n; ++y) text << (y ? " " : "") << g.mul(x, y);
  }
  g.literal_ = text.str();
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  inverse_.assign(order_, -1);
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y)
      if (mul(x, y) == identity_) {
        inverse_[x] = y;
        break;
      }
}

Element FiniteGroup::pow(Element x, long k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Element result = identity_;
  Element base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Element> FiniteGroup::parse_element(std::string_view text) const {
  for (int x = 0; x < order_; ++x)
    if (names_[x] == text) return x;
  return std::nullopt;
}

GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2, int order_cap) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::product(*g1, *g2, order_cap));
}

int element_order(const FiniteGroup& g, Element x) {
  if (!g.contains(x)) throw ValidationError("element index out of range");
  int k = 1;
  for (Element p = x; p != g.identity(); p = g.mul(p, x)) ++k;
  return k;
}

Subgroup::Subgroup(GroupPtr group, std::vector<Element> sorted_elements)
    : group_(std::move(group)), elements_(std::move(sorted_elements)) {}

bool Subgroup::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const Element> gens) {
  std::vector<bool> in(g->order(), false);
  std::vector<Element> members{g->identity()};
  in[g->identity()] = true;
  std::vector<Element> generators;
  for (Element x : gens) {
    if (!g->contains(x)) throw ValidationError("generator index " + std::to_string(x) + " out of range");
    generators.push_back(x);
  }
  // Right-multiplying every member by every generator until no growth;
  // in a finite group this closure is the generated subgroup.
  for (size_t i = 0; i < members.size(); ++i) {
    for (Element s : generators) {
      const Element y = g->mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(g, std::move(members));
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Element> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup cyclic_subgroup(const GroupPtr& g, Element x) {
  const Element gens[] = {x};
  return subgroup_generated(g, gens);
}

std::vector<Element> left_translate(const FiniteGroup& g, Element a, std::span<const Element> set) {
  std::vector<Element> out;
  out.reserve(set.size());
  for (Element x : set) out.push_back(g.mul(a, x));
  std::sort(out.begin(), out.end());
  return out;
}

int CosetPartition::coset_of(Element x) const {
  for (int i = 0; i < size(); ++i)
    if (std::binary_search(cosets[i].begin(), cosets[i].end(), x)) return i;
  return -1;
}

CosetPartition left_cosets(std::span<const Element> superset, const Subgroup& h) {
  const FiniteGroup& g = *h.group();
  if (superset.size() % h.elements().size() != 0)
    throw ValidationError("superset size " + std::to_string(superset.size()) +
                          " is not divisible by subgroup order " + std::to_string(h.size()));
  std::vector<Element> remaining(superset.begin(), superset.end());
  std::sort(remaining.begin(), remaining.end());
  std::vector<bool> used(g.order(), false);
  CosetPartition part;
  for (Element a : remaining) {
    if (used[a]) continue;
    std::vector<Element> coset = left_translate(g, a, h.elements());
    for (Element x : coset) {
      if (!std::binary_search(remaining.begin(), remaining.end(), x) || used[x])
        throw ValidationError("superset is not a union of left cosets of the subgroup");
      used[x] = true;
    }
    part.representatives.push_back(coset.front());
    part.cosets.push_back(std::move(coset));
  }
  return part;
}

std::string format_elements(const FiniteGroup& g, std::span<const Element> elems) {
  std::string out = "{";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out += " ";
    out += g.name(elems[i]);
  }
  return out + "}";
}

}  // namespace vgraph
