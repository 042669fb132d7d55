#include "pqgroup/product.hpp"

#include <numeric>
#include <string>

#include "pqgroup/error.hpp"
#include "pqgroup/number_theory.hpp"

namespace pqgroup {
namespace {

template <typename Act>
ProductGroup build(const GroupPtr& n, const GroupPtr& h, AutGroupPtr aut, std::optional<Hom> phi, Act act) {
  const std::size_t ns = n->order();
  const std::size_t hs = h->order();
  if (ns * hs > kMaxOrder) fail(ErrorKind::SizeCap, "product order " + std::to_string(ns * hs) + " exceeds cap");
  const std::size_t total = ns * hs;

  std::vector<Index> table(total * total);
  for (std::size_t a = 0; a < total; ++a) {
    const auto n1 = static_cast<Index>(a / hs);
    const auto h1 = static_cast<Index>(a % hs);
    for (std::size_t b = 0; b < total; ++b) {
      const auto n2 = static_cast<Index>(b / hs);
      const auto h2 = static_cast<Index>(b % hs);
      const Index nn = n->mul(n1, act(h1, n2));
      const Index hh = h->mul(h1, h2);
      table[a * total + b] = static_cast<Index>(nn * hs + hh);
    }
  }
  GroupPtr group = FiniteGroup::from_table(total, std::move(table));

  std::vector<Index> en(ns), eh(hs);
  for (std::size_t i = 0; i < ns; ++i) en[i] = static_cast<Index>(i * hs);
  for (std::size_t j = 0; j < hs; ++j) eh[j] = static_cast<Index>(j);
  Hom embed_n = Hom::make(n, group, en);
  Hom embed_h = Hom::make(h, group, eh);
  Subgroup cn = Subgroup::from_members(group, std::move(en));
  Subgroup ch = Subgroup::from_members(group, std::move(eh));
  return ProductGroup{std::move(group), n,           h,           std::move(embed_n), std::move(embed_h),
                      std::move(cn),    std::move(ch), std::move(aut), std::move(phi)};
}

}  // namespace

ProductGroup direct_product(const GroupPtr& n, const GroupPtr& h) {
  return build(n, h, nullptr, std::nullopt, [](Index, Index x) { return x; });
}

ProductGroup semidirect_product(const GroupPtr& n, const GroupPtr& h, const AutGroupPtr& aut, const Hom& phi) {
  if (!aut || !same_group(aut->base, n)) fail(ErrorKind::InvalidAction, "automorphism group is not Aut(N)");
  if (!same_group(phi.source(), h)) fail(ErrorKind::InvalidAction, "action is not defined on H");
  if (!same_group(phi.target(), aut->carrier)) fail(ErrorKind::InvalidAction, "action does not land in Aut(N)");
  const AutGroup& A = *aut;
  return build(n, h, aut, phi, [&](Index h1, Index x) { return A.apply(phi(h1), x); });
}

Iso sdp_trivial_iso_direct(const GroupPtr& n, const GroupPtr& h) {
  const AutGroupPtr aut = automorphism_group(n);
  const ProductGroup sdp = semidirect_product(n, h, aut, trivial_hom(h, aut->carrier));
  const ProductGroup dp = direct_product(n, h);
  std::vector<Index> map(sdp.group->order());
  for (std::size_t g = 0; g < map.size(); ++g) {
    const auto [a, b] = sdp.pair_of(static_cast<Index>(g));
    map[g] = dp.index_of(a, b);
  }
  return Iso::from_forward(Hom::make(sdp.group, dp.group, std::move(map)));
}

std::optional<std::pair<Index, Index>> congr_violation(const Iso& f1, const Iso& f2, const ProductGroup& from,
                                                       const ProductGroup& to) {
  if (!same_group(f1.source(), from.n) || !same_group(f1.target(), to.n) || !same_group(f2.source(), from.h) ||
      !same_group(f2.target(), to.h)) {
    fail(ErrorKind::MismatchedParent, "factor isomorphisms do not match the products");
  }
  for (std::size_t h1 = 0; h1 < from.h->order(); ++h1) {
    for (std::size_t n1 = 0; n1 < from.n->order(); ++n1) {
      const auto hh = static_cast<Index>(h1);
      const auto nn = static_cast<Index>(n1);
      if (to.act(f2(hh), f1(nn)) != f1(from.act(hh, nn))) return std::pair{nn, hh};
    }
  }
  return std::nullopt;
}

Iso sdp_congr(const Iso& f1, const Iso& f2, const ProductGroup& from, const ProductGroup& to) {
  if (const auto bad = congr_violation(f1, f2, from, to)) {
    fail(ErrorKind::IncompatibleAction, "actions disagree at n1=" + std::to_string(bad->first) +
                                            ", h1=" + std::to_string(bad->second));
  }
  std::vector<Index> map(from.group->order());
  for (std::size_t g = 0; g < map.size(); ++g) {
    const auto [a, b] = from.pair_of(static_cast<Index>(g));
    map[g] = to.index_of(f1(a), f2(b));
  }
  return Iso::from_forward(Hom::make(from.group, to.group, std::move(map)));
}

ProductGroup cyclic_semidirect(std::size_t q, std::size_t p, std::uint64_t k) {
  if (q == 0 || p == 0) fail(ErrorKind::InvalidArgument, "factor orders must be positive");
  if (std::gcd(k % q, static_cast<std::uint64_t>(q)) != 1 && q > 1) {
    fail(ErrorKind::InvalidAction, "k=" + std::to_string(k) + " is not a unit mod " + std::to_string(q));
  }
  if (nt::pow_mod(k, p, q) != 1 % q) {
    fail(ErrorKind::InvalidAction,
         "k^p != 1 mod q for k=" + std::to_string(k) + ", p=" + std::to_string(p) + ", q=" + std::to_string(q));
  }
  const GroupPtr cq = cyclic_group(q);
  const GroupPtr cp = cyclic_group(p);
  const AutGroupPtr aut = automorphism_group(cq);

  std::vector<Index> mult(q);
  for (std::size_t r = 0; r < q; ++r) mult[r] = static_cast<Index>((r * (k % q)) % q);
  const auto a = aut->index_of(mult);
  if (!a) fail(ErrorKind::Internal, "multiplication by a unit is not an automorphism");

  std::vector<Index> phi_map(p);
  for (std::size_t i = 0; i < p; ++i) phi_map[i] = aut->carrier->pow(*a, static_cast<std::int64_t>(i));
  const Hom phi = Hom::make(cp, aut->carrier, std::move(phi_map));
  return semidirect_product(cq, cp, aut, phi);
}

}  // namespace pqgroup
