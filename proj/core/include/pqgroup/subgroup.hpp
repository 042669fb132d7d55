#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "pqgroup/group.hpp"

namespace pqgroup {

// A subgroup of a parent group, stored as the sorted list of member indices.
class Subgroup {
 public:
  // Validates closure, identity and inverses; throws GroupError(NotSubgroup).
  static Subgroup from_members(GroupPtr parent, std::vector<Index> members);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Index>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Index x) const noexcept { return x < mask_.size() && mask_[x]; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_->order(); }

  // Same parent (structurally) and same members.
  bool operator==(const Subgroup& other) const noexcept;

 private:
  Subgroup(GroupPtr parent, std::vector<Index> members);

  GroupPtr parent_;
  std::vector<Index> members_;
  std::vector<bool> mask_;
};

// Smallest subgroup containing gens.
Subgroup closure(const GroupPtr& g, std::span<const Index> gens);
Subgroup closure(const GroupPtr& g, std::span<const Element> gens);
Subgroup cyclic_subgroup(const GroupPtr& g, Element x);

Subgroup bot(const GroupPtr& g);
Subgroup top(const GroupPtr& g);
// Both throw GroupError(MismatchedParent) for subgroups of different groups.
Subgroup meet(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
bool is_contained(const Subgroup& a, const Subgroup& b);

Subgroup conjugate(const Subgroup& h, Index g);
bool is_normal(const Subgroup& h);
std::vector<std::vector<Index>> left_cosets(const Subgroup& h);

// The smallest-index element of order exactly p. Throws NotPrime, or
// NoSuchElement when p does not divide |G|.
Element element_of_order(const FiniteGroup& g, std::uint64_t p);
Subgroup subgroup_of_order(const GroupPtr& g, std::uint64_t p);
// All cyclic subgroups of prime order p, ordered by their smallest generator.
std::vector<Subgroup> subgroups_of_prime_order(const GroupPtr& g, std::uint64_t p);
// For |G| = p^2 and G noncyclic: the first two distinct order-p subgroups.
// Throws OnlyOneSubgroup when G is cyclic, BadOrder when |G| != p^2.
std::pair<Subgroup, Subgroup> distinct_subgroups_of_order(const GroupPtr& g, std::uint64_t p);

// Every subgroup of g, ordered by (order, members). Intended for small groups.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

inline constexpr Index kNotInSubgroup = std::numeric_limits<Index>::max();

// A subgroup re-indexed as a standalone group. embedding[i] is the parent index
// of subgroup element i; section[x] is the subgroup index of parent element x,
// or kNotInSubgroup.
struct EmbeddedSubgroup {
  Subgroup subgroup;
  GroupPtr group;
  std::vector<Index> embedding;
  std::vector<Index> section;
};

EmbeddedSubgroup as_group(const Subgroup& h);

// Greedy generating sequence: repeatedly take the highest-order element (lowest
// index on ties) outside the subgroup generated so far.
std::vector<Index> generating_sequence(const FiniteGroup& g);

}  // namespace pqgroup
