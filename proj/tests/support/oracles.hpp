#pragma once

// Brute-force reference implementations. They share no search code with the
// library and are only usable at small orders.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pqgroup/group.hpp"

namespace pqgroup::oracle {

// Order of x by repeated multiplication.
std::size_t element_order(const FiniteGroup& g, Index x);

// Tries every bijection fixing the identity. Order <= 10.
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// Counts automorphisms over every bijection fixing the identity. Order <= 10.
std::size_t automorphism_count(const FiniteGroup& g);

// All subgroups as sorted member sets, by testing every subset containing
// the identity for closure. Order <= 16.
std::set<std::vector<Index>> subgroups(const FiniteGroup& g);

// Checks that map is a bijective homomorphism a -> b.
bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Index>& map);

// Groups of order 8 obtained as regular permutation groups on 8 points:
// a fixed first generator per cycle type, every second generator in S_8, and
// a third generator when two do not suffice. Deduplicated by brute iso.
std::vector<GroupPtr> regular_groups_of_order_8();

// Copy of g with elements renamed by a random permutation fixing 0.
GroupPtr relabel(const FiniteGroup& g, std::mt19937_64& rng);

}  // namespace pqgroup::oracle
