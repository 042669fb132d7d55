#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pqgroup/enumerate.hpp"
#include "pqgroup/group.hpp"
#include "pqgroup/morphism.hpp"
#include "pqgroup/product.hpp"

namespace pqgroup {

struct OrderShape {
  enum class Kind { PrimeSquared, DistinctPrimes, Prime, Unsupported };
  Kind kind = Kind::Unsupported;
  std::uint64_t order = 0;
  std::uint64_t p = 0;  // smaller prime
  std::uint64_t q = 0;  // larger prime (equal to p for PrimeSquared)
};

OrderShape order_shape(std::uint64_t n);

// True iff a noncyclic group of order p*q exists: p == q, p | q-1 or q | p-1.
// Throws NotPrime.
bool noncyclic_exists(std::uint64_t p, std::uint64_t q);

// Smallest k > 1 with k^p = 1 (mod q). Requires p | q-1; throws
// NoNoncyclicGroup otherwise.
std::uint64_t canonical_action_exponent(std::uint64_t p, std::uint64_t q);

// C_p x C_p when p == q, otherwise C_Q ⋊ C_P with P < Q acting by the
// canonical exponent. Throws NoNoncyclicGroup when none exists.
ProductGroup canonical_noncyclic_product(std::uint64_t p, std::uint64_t q);
GroupPtr canonical_noncyclic(std::uint64_t p, std::uint64_t q);

// The group is cyclic: iso sends generator^i to i in cyclic_group(|G|).
struct CyclicClass {
  Element generator;
  GroupPtr representative;
  Iso iso;
};

// |G| = p^2, noncyclic: iso onto direct_product(C_p, C_p).
struct ElementaryAbelianClass {
  std::uint64_t p = 0;
  ProductGroup representative;
  Iso iso;
};

// |G| = pq with p < q, noncyclic: iso onto C_q ⋊_phi C_p where the generator
// of C_p acts by x -> x^k.
struct SemidirectClass {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t k = 0;
  Hom phi;
  ProductGroup representative;
  Iso iso;
};

using ClassificationResult = std::variant<CyclicClass, ElementaryAbelianClass, SemidirectClass>;

std::string_view tag(const ClassificationResult& r) noexcept;
const Iso& witness(const ClassificationResult& r) noexcept;
const GroupPtr& representative(const ClassificationResult& r) noexcept;

// Follows the textbook argument: locate prime-order subgroups, check
// normality, recognize an internal (semi)direct product, then transport onto
// the concrete representative. Never calls find_isomorphism. Throws
// UnsupportedOrder unless |G| is p^2 or pq.
ClassificationResult classify(const GroupPtr& g);

// |G| = pq with p < q: some phi (trivial iff G is cyclic) and an isomorphism
// onto C_q ⋊_phi C_p. k is 1 for the trivial action.
struct SemidirectExpression {
  std::uint64_t k = 1;
  Hom phi;
  ProductGroup product;
  Iso iso;
};
// Throws BadOrder unless p < q are primes with |G| = pq.
SemidirectExpression express_as_semidirect(const GroupPtr& g, std::uint64_t p, std::uint64_t q);

// Two noncyclic groups of the same order p^2 or pq are isomorphic; the
// isomorphism is assembled from the two classification witnesses. Throws
// HypothesisFailed naming the unmet hypothesis.
Iso verify_uniqueness(const GroupPtr& g1, const GroupPtr& g2);

struct TheoremRow {
  std::size_t order = 0;
  std::string shape;  // "prime", "p^2" or "pq"
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::size_t predicted = 0;
  std::size_t oracle = 0;
  std::vector<std::string> tags;  // classification tag per oracle representative
  bool pass = false;
  std::string note;
};

struct TheoremReport {
  std::vector<TheoremRow> rows;
  bool all_pass = true;
};

// Cross-checks every order <= max_order that is prime, p^2 or pq against the
// enumeration oracle. Failures are recorded in the report, not thrown.
TheoremReport verify_theorem(std::size_t max_order);

}  // namespace pqgroup
