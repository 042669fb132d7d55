#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "pqgroup/group.hpp"
#include "pqgroup/morphism.hpp"
#include "pqgroup/subgroup.hpp"

namespace pqgroup {

// External direct or semidirect product N x H / N ⋊ H. The pair (n, h) has
// index n * |H| + h, so (identity, identity) is index 0.
struct ProductGroup {
  GroupPtr group;
  GroupPtr n;
  GroupPtr h;
  Hom embed_n;
  Hom embed_h;
  Subgroup canonical_n;
  Subgroup canonical_h;
  // Set for semidirect products: Aut(N) and the action H -> aut->carrier.
  AutGroupPtr aut;
  std::optional<Hom> phi;

  Index index_of(Index n_idx, Index h_idx) const noexcept {
    return static_cast<Index>(n_idx * h->order() + h_idx);
  }
  std::pair<Index, Index> pair_of(Index g) const noexcept {
    const auto hs = static_cast<Index>(h->order());
    return {g / hs, g % hs};
  }
  // phi(h)(n); the identity action for direct products.
  Index act(Index h_idx, Index n_idx) const noexcept {
    return phi ? aut->apply((*phi)(h_idx), n_idx) : n_idx;
  }
  bool is_direct() const noexcept { return !phi.has_value(); }
};

// Throws SizeCap when |N|*|H| exceeds the order cap.
ProductGroup direct_product(const GroupPtr& n, const GroupPtr& h);

// Multiplication (n1,h1)(n2,h2) = (n1 * phi(h1)(n2), h1 h2). Throws
// InvalidAction unless aut is Aut(N) and phi is a Hom H -> aut->carrier.
ProductGroup semidirect_product(const GroupPtr& n, const GroupPtr& h, const AutGroupPtr& aut, const Hom& phi);

// N ⋊_1 H ≅ N x H by the identity on pairs.
Iso sdp_trivial_iso_direct(const GroupPtr& n, const GroupPtr& h);

// First pair (n1, h1) violating phi2(f2 h1)(f1 n1) = f1(phi1(h1)(n1)), if any.
std::optional<std::pair<Index, Index>> congr_violation(const Iso& f1, const Iso& f2, const ProductGroup& from,
                                                       const ProductGroup& to);

// The pair map (n, h) -> (f1 n, f2 h) from N1 ⋊ H1 onto N2 ⋊ H2. Throws
// IncompatibleAction naming the witnessing pair when the actions disagree.
Iso sdp_congr(const Iso& f1, const Iso& f2, const ProductGroup& from, const ProductGroup& to);

// C_q ⋊ C_p where the generator 1 of C_p acts on C_q by r -> k r (mod q),
// i.e. multiplicatively x -> x^k. Throws InvalidAction unless k^p = 1 mod q
// and k is a unit mod q.
ProductGroup cyclic_semidirect(std::size_t q, std::size_t p, std::uint64_t k);

}  // namespace pqgroup
