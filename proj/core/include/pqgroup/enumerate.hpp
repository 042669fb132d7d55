#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pqgroup/group.hpp"

namespace pqgroup {

inline constexpr std::size_t kDefaultEnumerationOrder = 16;
// With `extended` set, orders that are prime, p^2 or pq may go up to this.
inline constexpr std::size_t kExtendedEnumerationOrder = 33;

struct EnumerationOptions {
  std::size_t max_order = kDefaultEnumerationOrder;
  bool extended = false;
  std::uint64_t node_budget = 2'000'000'000;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;             // branching decisions
  std::uint64_t tables_completed = 0;  // leaves that validated as groups
  std::uint64_t tables_rejected = 0;   // leaves that failed validation or were not canonical
  std::uint64_t iso_rejections = 0;    // completed tables isomorphic to an earlier representative
};

struct EnumerationReport {
  std::size_t order = 0;
  std::vector<GroupPtr> representatives;
  std::size_t count = 0;
  EnumerationStats stats;
};

// All groups of order n up to isomorphism, found by filling Cayley tables
// from scratch. Independent of the classification code; uses only the table
// validator and find_isomorphism for deduplication. Throws BudgetExceeded
// when n is outside the permitted range or the search budget runs out.
EnumerationReport enumerate_groups(std::size_t n, const EnumerationOptions& options = {});

std::size_t count_groups(std::size_t n, const EnumerationOptions& options = {});

// Whether enumerate_groups accepts n under these options.
bool within_enumeration_budget(std::size_t n, const EnumerationOptions& options);

}  // namespace pqgroup
