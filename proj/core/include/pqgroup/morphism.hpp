#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pqgroup/group.hpp"
#include "pqgroup/subgroup.hpp"

namespace pqgroup {

// A group homomorphism, validated on construction.
class Hom {
 public:
  // Throws InvalidArgument (bad length / range), IdentityNotPreserved, or
  // NotMultiplicative with a witnessing pair.
  static Hom make(GroupPtr source, GroupPtr target, std::vector<Index> map);

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  const std::vector<Index>& map() const noexcept { return map_; }
  Index operator()(Index x) const noexcept { return map_[x]; }

  bool is_trivial() const noexcept;
  bool is_injective() const;
  bool is_surjective() const;

  bool operator==(const Hom& other) const noexcept;

 private:
  Hom(GroupPtr source, GroupPtr target, std::vector<Index> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  GroupPtr source_;
  GroupPtr target_;
  std::vector<Index> map_;
};

inline Hom make_hom(GroupPtr source, GroupPtr target, std::vector<Index> map) {
  return Hom::make(std::move(source), std::move(target), std::move(map));
}

Hom identity_hom(const GroupPtr& g);
Hom trivial_hom(const GroupPtr& source, const GroupPtr& target);
// second ∘ first. Throws MismatchedParent if first's target is not second's source.
Hom compose(const Hom& second, const Hom& first);

// An isomorphism with its two-sided inverse.
class Iso {
 public:
  // Throws NotBijective if the homomorphism is not a bijection.
  static Iso from_forward(Hom forward);

  const Hom& forward() const noexcept { return forward_; }
  const Hom& backward() const noexcept { return backward_; }
  const GroupPtr& source() const noexcept { return forward_.source(); }
  const GroupPtr& target() const noexcept { return forward_.target(); }
  Index operator()(Index x) const noexcept { return forward_(x); }

  Iso inverse() const { return Iso(backward_, forward_); }

 private:
  Iso(Hom forward, Hom backward) : forward_(std::move(forward)), backward_(std::move(backward)) {}

  Hom forward_;
  Hom backward_;
};

Iso identity_iso(const GroupPtr& g);
Iso compose(const Iso& second, const Iso& first);
// Rebuilds both directions from scratch and checks they are mutually inverse
// homomorphisms; throws on any failure.
void validate(const Iso& iso);

// Aut(base), materialized: automorphism i of base is autos[i], and the
// carrier's product i*j is autos[i] ∘ autos[j]. Index 0 is the identity.
struct AutGroup {
  GroupPtr base;
  GroupPtr carrier;
  std::vector<Iso> autos;
  std::map<std::vector<Index>, Index> index_by_map;

  // Image of x under automorphism a.
  Index apply(Index a, Index x) const noexcept { return autos[a](x); }
  std::optional<Index> index_of(const std::vector<Index>& map) const;
};
using AutGroupPtr = std::shared_ptr<const AutGroup>;

inline constexpr std::uint64_t kDefaultSearchBudget = 20'000'000;

// Generator-image backtracking. Throws BudgetExceeded when the search visits
// more than `budget` nodes or Aut(G) exceeds the group-size cap.
AutGroupPtr automorphism_group(const GroupPtr& g, std::uint64_t budget = kDefaultSearchBudget);

// f restricted to h, as a homomorphism out of the re-indexed subgroup.
Hom restrict(const Hom& f, const EmbeddedSubgroup& h);
Hom restrict(const Hom& f, const Subgroup& h);

// Conjugation action of G on a normal subgroup N: g maps to the automorphism
// n -> g n g^-1 of as_group(N), as an index into aut->carrier.
struct ConjugationAction {
  EmbeddedSubgroup normal;
  AutGroupPtr aut;
  Hom hom;
};
// Throws NotNormal.
ConjugationAction conj_normal(const GroupPtr& g, const Subgroup& n);

// All homomorphisms from a cyclic group into aut.carrier, one per carrier
// element whose order divides |source|, in carrier index order (so the
// trivial homomorphism comes first). Throws NotCyclicSource.
std::vector<Hom> homs_to_aut(const GroupPtr& source, const AutGroup& aut);

// Isomorphism invariants. Equal for isomorphic groups; unequal proves
// non-isomorphism, equal proves nothing.
struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::vector<std::size_t> element_orders;
  std::size_t center_size = 0;
  std::vector<std::size_t> class_sizes;

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);
// Human-readable name of the first differing invariant, or empty if equal.
std::string fingerprint_mismatch(const Fingerprint& a, const Fingerprint& b);

std::optional<Iso> find_isomorphism(const GroupPtr& a, const GroupPtr& b);

// Calls visit(map) for every isomorphism a -> b (as a forward index map) in
// lexicographic order of candidate generator images, until visit returns
// false. Returns the number of search nodes used.
std::uint64_t for_each_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                   const std::function<bool(const std::vector<Index>&)>& visit,
                                   std::uint64_t budget = kDefaultSearchBudget);

}  // namespace pqgroup
