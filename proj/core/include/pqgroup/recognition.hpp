#pragma once

#include "pqgroup/group.hpp"
#include "pqgroup/morphism.hpp"
#include "pqgroup/product.hpp"
#include "pqgroup/subgroup.hpp"

namespace pqgroup {

// Result of recognizing an internal semidirect product N ⋊ H.
//
// phi is conjugation by H restricted to N, expressed on the re-indexed
// groups n_group.group and h_group.group. iso sends the ambient group (or the
// join of N and H) onto product.group by the unique factorization g = n h.
struct DecompositionWitness {
  EmbeddedSubgroup n_group;
  EmbeddedSubgroup h_group;
  AutGroupPtr aut;
  Hom phi;
  ProductGroup product;
  Iso iso;
};

// Requires N normal in G, N ⊓ H = ⊥ and N ⊔ H = ⊤. Throws NotNormal,
// MeetNotTrivial or JoinNotFull naming the failed hypothesis.
DecompositionWitness internal_semidirect(const GroupPtr& g, const Subgroup& n, const Subgroup& h);

// As internal_semidirect without the join hypothesis: the isomorphism's source
// is as_group(join(N, H)), and n_group / h_group are subgroups of that join.
DecompositionWitness internal_semidirect_join(const GroupPtr& g, const Subgroup& n, const Subgroup& h);

// Both N and H normal: G ≅ as_group(N) x as_group(H). Built on top of
// internal_semidirect and sdp_trivial_iso_direct.
struct DirectDecomposition {
  DecompositionWitness semidirect;
  ProductGroup product;
  Iso iso;
};
DirectDecomposition internal_direct(const GroupPtr& g, const Subgroup& n, const Subgroup& h);

}  // namespace pqgroup
