#include "pqgroup/classification.hpp"

#include <string>

#include "pqgroup/error.hpp"
#include "pqgroup/number_theory.hpp"
#include "pqgroup/recognition.hpp"
#include "pqgroup/subgroup.hpp"

namespace pqgroup {
namespace {

void require_prime(std::uint64_t p) {
  if (!nt::is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

// generator^i -> i, onto cyclic_group(|G|).
Iso cyclic_coordinates(const GroupPtr& g, Element generator, const GroupPtr& target) {
  std::vector<Index> map(g->order());
  Index x = 0;
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[x] = static_cast<Index>(i);
    x = g->mul(x, generator.index);
  }
  return Iso::from_forward(Hom::make(g, target, std::move(map)));
}

Iso rebind(const Iso& iso, const GroupPtr& source, const GroupPtr& target) {
  return Iso::from_forward(Hom::make(source, target, iso.forward().map()));
}

}  // namespace

OrderShape order_shape(std::uint64_t n) {
  OrderShape s;
  s.order = n;
  if (n < 2) return s;
  const auto f = nt::factorize(n);
  if (f.size() == 1 && f[0].second == 1) {
    s.kind = OrderShape::Kind::Prime;
    s.p = s.q = f[0].first;
  } else if (f.size() == 1 && f[0].second == 2) {
    s.kind = OrderShape::Kind::PrimeSquared;
    s.p = s.q = f[0].first;
  } else if (f.size() == 2 && f[0].second == 1 && f[1].second == 1) {
    s.kind = OrderShape::Kind::DistinctPrimes;
    s.p = f[0].first;
    s.q = f[1].first;
  }
  return s;
}

bool noncyclic_exists(std::uint64_t p, std::uint64_t q) {
  require_prime(p);
  require_prime(q);
  return p == q || (q - 1) % p == 0 || (p - 1) % q == 0;
}

std::uint64_t canonical_action_exponent(std::uint64_t p, std::uint64_t q) {
  require_prime(p);
  require_prime(q);
  if ((q - 1) % p != 0) {
    fail(ErrorKind::NoNoncyclicGroup, std::to_string(p) + " does not divide " + std::to_string(q) + " - 1");
  }
  for (std::uint64_t k = 2; k < q; ++k) {
    if (nt::pow_mod(k, p, q) == 1) return k;
  }
  fail(ErrorKind::Internal, "no element of order p in the units mod q");
}

ProductGroup canonical_noncyclic_product(std::uint64_t p, std::uint64_t q) {
  if (!noncyclic_exists(p, q)) {
    fail(ErrorKind::NoNoncyclicGroup, "every group of order " + std::to_string(p * q) + " is cyclic");
  }
  if (p == q) return direct_product(cyclic_group(p), cyclic_group(p));
  const std::uint64_t small = std::min(p, q);
  const std::uint64_t large = std::max(p, q);
  return cyclic_semidirect(large, small, canonical_action_exponent(small, large));
}

GroupPtr canonical_noncyclic(std::uint64_t p, std::uint64_t q) { return canonical_noncyclic_product(p, q).group; }

std::string_view tag(const ClassificationResult& r) noexcept {
  switch (r.index()) {
    case 0: return "Cyclic";
    case 1: return "ElementaryAbelianPP";
    default: return "SemidirectQP";
  }
}

const Iso& witness(const ClassificationResult& r) noexcept {
  return std::visit([](const auto& c) -> const Iso& { return c.iso; }, r);
}

const GroupPtr& representative(const ClassificationResult& r) noexcept {
  if (const auto* c = std::get_if<CyclicClass>(&r)) return c->representative;
  if (const auto* e = std::get_if<ElementaryAbelianClass>(&r)) return e->representative.group;
  return std::get<SemidirectClass>(r).representative.group;
}

SemidirectExpression express_as_semidirect(const GroupPtr& g, std::uint64_t p, std::uint64_t q) {
  if (!nt::is_prime(p) || !nt::is_prime(q) || p >= q || g->order() != p * q) {
    fail(ErrorKind::BadOrder, "need primes p < q with |G| = pq; got p=" + std::to_string(p) + ", q=" +
                                  std::to_string(q) + ", |G|=" + std::to_string(g->order()));
  }
  // Sylow q-subgroup Q and a subgroup P of order p; Q is normal since p < q.
  const Subgroup sub_q = subgroup_of_order(g, q);
  const Subgroup sub_p = subgroup_of_order(g, p);
  if (!is_normal(sub_q)) fail(ErrorKind::Internal, "subgroup of order q is not normal");
  const DecompositionWitness w = internal_semidirect(g, sub_q, sub_p);

  const std::uint64_t k = w.phi.is_trivial() ? 1 : canonical_action_exponent(p, q);
  ProductGroup target = cyclic_semidirect(q, p, k);

  // Coordinates on Q: any generator. Coordinates on P: the generator that
  // acts on Q as z -> z^k, so the two actions agree.
  const FiniteGroup& nq = *w.n_group.group;
  const FiniteGroup& np = *w.h_group.group;
  const Element z = *is_cyclic(nq);
  std::optional<Element> x;
  for (std::size_t i = 1; i < np.order() && !x; ++i) {
    const auto idx = static_cast<Index>(i);
    if (w.aut->apply(w.phi(idx), z.index) == nq.pow(z.index, static_cast<std::int64_t>(k))) x = Element{idx};
  }
  if (!x) fail(ErrorKind::Internal, "no element of P acts by the canonical exponent");

  const Iso f1 = cyclic_coordinates(w.n_group.group, z, target.n);
  const Iso f2 = cyclic_coordinates(w.h_group.group, *x, target.h);
  const Iso congr = sdp_congr(f1, f2, w.product, target);
  Iso iso = rebind(compose(congr, w.iso), g, target.group);
  Hom phi = *target.phi;
  return SemidirectExpression{k, std::move(phi), std::move(target), std::move(iso)};
}

ClassificationResult classify(const GroupPtr& g) {
  const OrderShape shape = order_shape(g->order());
  if (shape.kind != OrderShape::Kind::PrimeSquared && shape.kind != OrderShape::Kind::DistinctPrimes) {
    fail(ErrorKind::UnsupportedOrder, "order " + std::to_string(g->order()) + " is not p^2 or pq");
  }

  if (const auto gen = is_cyclic(*g)) {
    GroupPtr rep = cyclic_group(g->order());
    Iso iso = cyclic_coordinates(g, *gen, rep);
    return CyclicClass{*gen, std::move(rep), std::move(iso)};
  }

  if (shape.kind == OrderShape::Kind::PrimeSquared) {
    const std::uint64_t p = shape.p;
    const auto [a, b] = distinct_subgroups_of_order(g, p);
    const DirectDecomposition d = internal_direct(g, a, b);
    ProductGroup rep = direct_product(cyclic_group(p), cyclic_group(p));
    const Iso f1 = cyclic_coordinates(d.product.n, *is_cyclic(*d.product.n), rep.n);
    const Iso f2 = cyclic_coordinates(d.product.h, *is_cyclic(*d.product.h), rep.h);
    const Iso congr = sdp_congr(f1, f2, d.product, rep);
    Iso iso = rebind(compose(congr, d.iso), g, rep.group);
    return ElementaryAbelianClass{p, std::move(rep), std::move(iso)};
  }

  SemidirectExpression e = express_as_semidirect(g, shape.p, shape.q);
  if (e.phi.is_trivial()) fail(ErrorKind::Internal, "noncyclic group of order pq with trivial action");
  return SemidirectClass{shape.p, shape.q, e.k, std::move(e.phi), std::move(e.product), std::move(e.iso)};
}

Iso verify_uniqueness(const GroupPtr& g1, const GroupPtr& g2) {
  if (g1->order() != g2->order()) {
    fail(ErrorKind::HypothesisFailed, "order mismatch: " + std::to_string(g1->order()) + " vs " +
                                          std::to_string(g2->order()));
  }
  const OrderShape shape = order_shape(g1->order());
  if (shape.kind != OrderShape::Kind::PrimeSquared && shape.kind != OrderShape::Kind::DistinctPrimes) {
    fail(ErrorKind::HypothesisFailed, "order shape: " + std::to_string(g1->order()) + " is not p^2 or pq");
  }
  if (is_cyclic(*g1)) fail(ErrorKind::HypothesisFailed, "cyclic: G1 is cyclic");
  if (is_cyclic(*g2)) fail(ErrorKind::HypothesisFailed, "cyclic: G2 is cyclic");

  const ClassificationResult r1 = classify(g1);
  const ClassificationResult r2 = classify(g2);
  if (r1.index() != r2.index()) fail(ErrorKind::Internal, "noncyclic groups of equal order classified differently");
  const Iso through = compose(witness(r2).inverse(), witness(r1));
  return rebind(through, g1, g2);
}

TheoremReport verify_theorem(std::size_t max_order) {
  TheoremReport report;
  EnumerationOptions options;
  options.extended = true;

  for (std::size_t n = 2; n <= max_order; ++n) {
    const OrderShape shape = order_shape(n);
    if (shape.kind == OrderShape::Kind::Unsupported) continue;

    TheoremRow row;
    row.order = n;
    row.p = shape.p;
    row.q = shape.q;
    switch (shape.kind) {
      case OrderShape::Kind::Prime:
        row.shape = "prime";
        row.predicted = 1;
        break;
      case OrderShape::Kind::PrimeSquared:
        row.shape = "p^2";
        row.predicted = 2;
        break;
      default:
        row.shape = "pq";
        row.predicted = noncyclic_exists(shape.p, shape.q) ? 2 : 1;
        break;
    }

    if (!within_enumeration_budget(n, options)) {
      row.note = "outside enumeration budget";
      report.rows.push_back(std::move(row));
      report.all_pass = false;
      continue;
    }

    try {
      const EnumerationReport oracle = enumerate_groups(n, options);
      row.oracle = oracle.count;
      bool ok = row.oracle == row.predicted;
      if (!ok) row.note = "class count mismatch";

      for (const GroupPtr& rep : oracle.representatives) {
        if (shape.kind == OrderShape::Kind::Prime) {
          row.tags.emplace_back(is_cyclic(*rep) ? "Cyclic" : "NotCyclic");
          if (!is_cyclic(*rep)) {
            ok = false;
            row.note = "prime-order representative is not cyclic";
          }
          continue;
        }
        const ClassificationResult r = classify(rep);
        validate(witness(r));
        row.tags.emplace_back(tag(r));
        if (!find_isomorphism(rep, representative(r))) {
          ok = false;
          row.note = "decision procedure disagrees with classifier";
        }
      }
      for (std::size_t i = 0; i < row.tags.size(); ++i) {
        for (std::size_t j = i + 1; j < row.tags.size(); ++j) {
          if (row.tags[i] == row.tags[j]) {
            ok = false;
            row.note = "two representatives share a classification";
          }
        }
      }
      row.pass = ok;
    } catch (const GroupError& e) {
      row.pass = false;
      row.note = e.what();
    }
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace pqgroup
