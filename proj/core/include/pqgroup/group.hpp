#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace pqgroup {

// Element indices. Index 0 is always the identity.
using Index = std::uint32_t;

// Dense tables cost order^2 entries.
inline constexpr std::size_t kMaxOrder = 4096;

struct Element {
  Index index = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group given by its full Cayley table. Immutable once built; every
// instance has passed the checks in from_table().
class FiniteGroup {
 public:
  // Validates a row-major order x order table. Throws GroupError with kind
  // NotClosed, NoIdentity, NotLatin, NoInverse or NotAssociative.
  static GroupPtr from_table(std::size_t order, std::vector<Index> table);
  static GroupPtr from_rows(const std::vector<std::vector<Index>>& rows);

  std::size_t order() const noexcept { return order_; }

  Index mul(Index a, Index b) const noexcept { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Index inv(Index a) const noexcept { return inverse_[a]; }
  // a^k for any integer k (negative powers use the inverse).
  Index pow(Index a, std::int64_t k) const noexcept;
  // g a g^-1
  Index conj(Index g, Index a) const noexcept { return mul(mul(g, a), inverse_[g]); }

  std::span<const Index> row(Index i) const noexcept {
    return {table_.data() + static_cast<std::size_t>(i) * order_, order_};
  }
  const std::vector<Index>& table() const noexcept { return table_; }
  const std::vector<Index>& inverses() const noexcept { return inverse_; }

  bool operator==(const FiniteGroup& other) const noexcept { return table_ == other.table_; }

 private:
  FiniteGroup(std::size_t order, std::vector<Index> table, std::vector<Index> inverse)
      : order_(order), table_(std::move(table)), inverse_(std::move(inverse)) {}

  std::size_t order_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
};

// Re-runs every table invariant on an existing group; throws on failure.
void validate(const FiniteGroup& g);

// Structural equality of two handles (same object or identical tables).
bool same_group(const GroupPtr& a, const GroupPtr& b) noexcept;

GroupPtr trivial_group();

// Z/n written multiplicatively: element i is the generator to the power i.
GroupPtr cyclic_group(std::size_t n);

// Permutations of {0..k-1} in lexicographic order of one-line notation, so the
// identity is element 0. The product a*b is the composition "apply b, then a".
GroupPtr symmetric_group(std::size_t k);
// One-line notation of element `index` of symmetric_group(k).
std::vector<unsigned> symmetric_group_permutation(std::size_t k, Index index);

std::size_t element_order(const FiniteGroup& g, Element x);
std::vector<std::size_t> element_orders(const FiniteGroup& g);

// The smallest-index element of order |G|, if any.
std::optional<Element> is_cyclic(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g) noexcept;

std::size_t center_size(const FiniteGroup& g) noexcept;

}  // namespace pqgroup
