#include "pqgroup/subgroup.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pqgroup/error.hpp"
#include "pqgroup/number_theory.hpp"

namespace pqgroup {
namespace {

// Members of <gens>, in discovery order. Right-multiplying by generators
// reaches every word since inverses are positive powers in a finite group.
std::vector<Index> closure_members(const FiniteGroup& g, std::span<const Index> gens, std::vector<bool>& mask) {
  mask.assign(g.order(), false);
  std::vector<Index> members{0};
  mask[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Index x = members[head];
    for (Index s : gens) {
      const Index y = g.mul(x, s);
      if (!mask[y]) {
        mask[y] = true;
        members.push_back(y);
      }
    }
  }
  return members;
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!same_group(a.parent(), b.parent())) fail(ErrorKind::MismatchedParent, "subgroups belong to different groups");
}

void require_prime(std::uint64_t p) {
  if (!nt::is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

Subgroup::Subgroup(GroupPtr parent, std::vector<Index> members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_->order(), false) {
  for (Index x : members_) mask_[x] = true;
}

Subgroup Subgroup::from_members(GroupPtr parent, std::vector<Index> members) {
  if (!parent) fail(ErrorKind::InvalidArgument, "null parent group");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Index x : members) {
    if (x >= parent->order()) fail(ErrorKind::NotSubgroup, "index " + std::to_string(x) + " out of range");
  }
  Subgroup h(std::move(parent), std::move(members));
  const FiniteGroup& g = *h.parent_;
  if (!h.contains(0)) fail(ErrorKind::NotSubgroup, "identity missing");
  for (Index a : h.members_) {
    if (!h.contains(g.inv(a))) fail(ErrorKind::NotSubgroup, "inverse of " + std::to_string(a) + " missing");
    for (Index b : h.members_) {
      if (!h.contains(g.mul(a, b))) {
        fail(ErrorKind::NotSubgroup, "product of " + std::to_string(a) + " and " + std::to_string(b) + " escapes");
      }
    }
  }
  if (g.order() % h.order() != 0) fail(ErrorKind::Internal, "subgroup order does not divide group order");
  return h;
}

bool Subgroup::operator==(const Subgroup& other) const noexcept {
  return members_ == other.members_ && same_group(parent_, other.parent_);
}

Subgroup closure(const GroupPtr& g, std::span<const Index> gens) {
  for (Index s : gens) {
    if (s >= g->order()) fail(ErrorKind::InvalidArgument, "generator index out of range");
  }
  std::vector<bool> mask;
  auto members = closure_members(*g, gens, mask);
  std::sort(members.begin(), members.end());
  return Subgroup::from_members(g, std::move(members));
}

Subgroup closure(const GroupPtr& g, std::span<const Element> gens) {
  std::vector<Index> idx;
  idx.reserve(gens.size());
  for (Element e : gens) idx.push_back(e.index);
  return closure(g, idx);
}

Subgroup cyclic_subgroup(const GroupPtr& g, Element x) {
  const Index gens[] = {x.index};
  return closure(g, gens);
}

Subgroup bot(const GroupPtr& g) { return Subgroup::from_members(g, {0}); }

Subgroup top(const GroupPtr& g) {
  std::vector<Index> all(g->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Index>(i);
  return Subgroup::from_members(g, std::move(all));
}

Subgroup meet(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<Index> both;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(both));
  return Subgroup::from_members(a.parent(), std::move(both));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<Index> gens;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                 std::back_inserter(gens));
  return closure(a.parent(), gens);
}

bool is_contained(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return std::includes(b.members().begin(), b.members().end(), a.members().begin(), a.members().end());
}

Subgroup conjugate(const Subgroup& h, Index g) {
  const FiniteGroup& G = *h.parent();
  std::vector<Index> out;
  out.reserve(h.order());
  for (Index x : h.members()) out.push_back(G.conj(g, x));
  return Subgroup::from_members(h.parent(), std::move(out));
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& G = *h.parent();
  for (std::size_t g = 0; g < G.order(); ++g) {
    for (Index x : h.members()) {
      if (!h.contains(G.conj(static_cast<Index>(g), x))) return false;
    }
  }
  return true;
}

std::vector<std::vector<Index>> left_cosets(const Subgroup& h) {
  const FiniteGroup& G = *h.parent();
  std::vector<bool> covered(G.order(), false);
  std::vector<std::vector<Index>> out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (covered[g]) continue;
    std::vector<Index> coset;
    for (Index x : h.members()) {
      const Index y = G.mul(static_cast<Index>(g), x);
      covered[y] = true;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

Element element_of_order(const FiniteGroup& g, std::uint64_t p) {
  require_prime(p);
  if (g.order() % p != 0) {
    fail(ErrorKind::NoSuchElement, std::to_string(p) + " does not divide " + std::to_string(g.order()));
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Element x{static_cast<Index>(i)};
    if (element_order(g, x) == p) return x;
  }
  // Unreachable for a valid group (Cauchy).
  fail(ErrorKind::Internal, "no element of order " + std::to_string(p));
}

Subgroup subgroup_of_order(const GroupPtr& g, std::uint64_t p) { return cyclic_subgroup(g, element_of_order(*g, p)); }

std::vector<Subgroup> subgroups_of_prime_order(const GroupPtr& g, std::uint64_t p) {
  require_prime(p);
  std::vector<Subgroup> out;
  std::vector<bool> covered(g->order(), false);
  for (std::size_t i = 1; i < g->order(); ++i) {
    const Element x{static_cast<Index>(i)};
    if (covered[i] || element_order(*g, x) != p) continue;
    Subgroup h = cyclic_subgroup(g, x);
    for (Index y : h.members()) covered[y] = true;
    out.push_back(std::move(h));
  }
  return out;
}

std::pair<Subgroup, Subgroup> distinct_subgroups_of_order(const GroupPtr& g, std::uint64_t p) {
  require_prime(p);
  if (g->order() != p * p) {
    fail(ErrorKind::BadOrder, "group order " + std::to_string(g->order()) + " is not " + std::to_string(p) + "^2");
  }
  auto subs = subgroups_of_prime_order(g, p);
  if (subs.size() < 2) fail(ErrorKind::OnlyOneSubgroup, "group has a unique subgroup of order " + std::to_string(p));
  return {std::move(subs[0]), std::move(subs[1])};
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<Index>> seen;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup h) {
    if (seen.insert(h.members()).second) found.push_back(std::move(h));
  };
  add(bot(g));
  for (std::size_t i = 1; i < g->order(); ++i) add(cyclic_subgroup(g, Element{static_cast<Index>(i)}));
  // Every subgroup is a join of cyclic subgroups; close the family under join.
  const std::size_t cyclic_count = found.size();
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < cyclic_count; ++j) {
      if (!is_contained(found[j], found[i])) add(join(found[i], found[j]));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return found;
}

EmbeddedSubgroup as_group(const Subgroup& h) {
  const FiniteGroup& G = *h.parent();
  const std::size_t m = h.order();
  std::vector<Index> section(G.order(), kNotInSubgroup);
  for (std::size_t i = 0; i < m; ++i) section[h.members()[i]] = static_cast<Index>(i);

  std::vector<Index> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = section[G.mul(h.members()[i], h.members()[j])];
  }
  auto sub = FiniteGroup::from_table(m, std::move(table));
  return EmbeddedSubgroup{h, std::move(sub), h.members(), std::move(section)};
}

std::vector<Index> generating_sequence(const FiniteGroup& g) {
  const auto orders = element_orders(g);
  std::vector<Index> by_order(g.order());
  for (std::size_t i = 0; i < by_order.size(); ++i) by_order[i] = static_cast<Index>(i);
  std::stable_sort(by_order.begin(), by_order.end(), [&](Index a, Index b) { return orders[a] > orders[b]; });

  std::vector<Index> gens;
  std::vector<bool> mask(g.order(), false);
  mask[0] = true;
  std::size_t covered = 1;
  for (Index x : by_order) {
    if (covered == g.order()) break;
    if (mask[x]) continue;
    gens.push_back(x);
    covered = closure_members(g, gens, mask).size();
  }
  return gens;
}

}  // namespace pqgroup
