#include "pqgroup/recognition.hpp"

#include <string>

#include "pqgroup/error.hpp"

namespace pqgroup {
namespace {

void require_parent(const GroupPtr& g, const Subgroup& s, const char* name) {
  if (!same_group(g, s.parent())) fail(ErrorKind::MismatchedParent, std::string("subgroup ") + name + " is not in G");
}

// Assumes N normal and N ⊓ H = ⊥ in g; h may be anything satisfying that.
DecompositionWitness decompose(const GroupPtr& g, const Subgroup& n, const Subgroup& h) {
  const FiniteGroup& G = *g;
  ConjugationAction conj = conj_normal(g, n);
  EmbeddedSubgroup h_group = as_group(h);
  Hom phi = restrict(conj.hom, h_group);
  ProductGroup product = semidirect_product(conj.normal.group, h_group.group, conj.aut, phi);

  // (a, b) -> n_a h_b is injective exactly when N ⊓ H = ⊥.
  std::vector<Index> factor(G.order(), kNotInSubgroup);
  for (std::size_t a = 0; a < n.order(); ++a) {
    for (std::size_t b = 0; b < h.order(); ++b) {
      const Index x = G.mul(n.members()[a], h.members()[b]);
      if (factor[x] != kNotInSubgroup) fail(ErrorKind::Internal, "factorization is not unique");
      factor[x] = product.index_of(static_cast<Index>(a), static_cast<Index>(b));
    }
  }
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (factor[x] == kNotInSubgroup) fail(ErrorKind::Internal, "N*H does not cover the group");
  }
  Iso iso = Iso::from_forward(Hom::make(g, product.group, std::move(factor)));
  return DecompositionWitness{std::move(conj.normal), std::move(h_group), std::move(conj.aut),
                              std::move(phi),         std::move(product), std::move(iso)};
}

}  // namespace

DecompositionWitness internal_semidirect(const GroupPtr& g, const Subgroup& n, const Subgroup& h) {
  require_parent(g, n, "N");
  require_parent(g, h, "H");
  if (!is_normal(n)) fail(ErrorKind::NotNormal, "N is not normal in G");
  if (!meet(n, h).is_trivial()) fail(ErrorKind::MeetNotTrivial, "N and H intersect nontrivially");
  if (!join(n, h).is_whole()) fail(ErrorKind::JoinNotFull, "N and H do not generate G");
  // With N normal the set product NH is the join; at finite order it is
  // enough that |N||H| = |G|.
  if (n.order() * h.order() != g->order()) fail(ErrorKind::Internal, "|N||H| != |G| despite lattice conditions");
  return decompose(g, n, h);
}

DecompositionWitness internal_semidirect_join(const GroupPtr& g, const Subgroup& n, const Subgroup& h) {
  require_parent(g, n, "N");
  require_parent(g, h, "H");
  if (!is_normal(n)) fail(ErrorKind::NotNormal, "N is not normal in G");
  if (!meet(n, h).is_trivial()) fail(ErrorKind::MeetNotTrivial, "N and H intersect nontrivially");

  const EmbeddedSubgroup j = as_group(join(n, h));
  auto reindex = [&](const Subgroup& s) {
    std::vector<Index> members;
    members.reserve(s.order());
    for (Index x : s.members()) members.push_back(j.section[x]);
    return Subgroup::from_members(j.group, std::move(members));
  };
  const Subgroup n_in_j = reindex(n);
  const Subgroup h_in_j = reindex(h);
  if (n_in_j.order() * h_in_j.order() != j.group->order()) {
    fail(ErrorKind::Internal, "|N||H| != |<N, H>| for normal N");
  }
  return decompose(j.group, n_in_j, h_in_j);
}

DirectDecomposition internal_direct(const GroupPtr& g, const Subgroup& n, const Subgroup& h) {
  require_parent(g, n, "N");
  require_parent(g, h, "H");
  if (!is_normal(n)) fail(ErrorKind::NotNormal, "N is not normal in G");
  if (!is_normal(h)) fail(ErrorKind::NotNormal, "H is not normal in G");
  DecompositionWitness w = internal_semidirect(g, n, h);
  if (!w.phi.is_trivial()) fail(ErrorKind::Internal, "conjugation action between normal factors is not trivial");

  const Iso to_direct = sdp_trivial_iso_direct(w.n_group.group, w.h_group.group);
  ProductGroup product = direct_product(w.n_group.group, w.h_group.group);
  const Iso composed = compose(to_direct, w.iso);
  Iso iso = Iso::from_forward(Hom::make(g, product.group, composed.forward().map()));
  return DirectDecomposition{std::move(w), std::move(product), std::move(iso)};
}

}  // namespace pqgroup
