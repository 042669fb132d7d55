#include "pqgroup/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "pqgroup/error.hpp"

namespace pqgroup {
namespace {

std::string cell(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

// Light's test: the set of elements c with (ab)c = a(bc) for all a, b is closed
// under multiplication, so it suffices to check c over a generating set of the
// magma. For a Latin square a proper submagma has at most half the elements,
// so the greedy generating set has O(log n) members.
void check_associative(std::size_t n, const std::vector<Index>& t) {
  auto mul = [&](std::size_t a, std::size_t b) -> std::size_t { return t[a * n + b]; };

  std::vector<char> in_closure(n, 0);
  std::vector<std::size_t> members;
  std::vector<std::size_t> generators;
  in_closure[0] = 1;
  members.push_back(0);

  auto add = [&](std::size_t x, std::vector<std::size_t>& work) {
    if (!in_closure[x]) {
      in_closure[x] = 1;
      work.push_back(x);
    }
  };

  for (std::size_t next = 1; next < n; ++next) {
    if (in_closure[next]) continue;
    generators.push_back(next);
    std::vector<std::size_t> work;
    add(next, work);
    while (!work.empty()) {
      const std::size_t x = work.back();
      work.pop_back();
      members.push_back(x);
      for (std::size_t i = 0; i < members.size(); ++i) {
        const std::size_t y = members[i];
        add(mul(x, y), work);
        add(mul(y, x), work);
      }
    }
  }

  for (std::size_t g : generators) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (mul(mul(a, b), g) != mul(a, mul(b, g))) {
          std::ostringstream os;
          os << "(g" << a << "*g" << b << ")*g" << g << " != g" << a << "*(g" << b << "*g" << g << ")";
          fail(ErrorKind::NotAssociative, os.str());
        }
      }
    }
  }
}

std::vector<Index> check_table(std::size_t n, const std::vector<Index>& t) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "group order must be positive");
  if (n > kMaxOrder) fail(ErrorKind::SizeCap, "order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
  if (t.size() != n * n) fail(ErrorKind::InvalidArgument, "table must have order^2 entries");

  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] >= n) fail(ErrorKind::NotClosed, "entry " + cell(k / n, k % n) + " = " + std::to_string(t[k]) + " out of range");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (t[j] != j) fail(ErrorKind::NoIdentity, "row 0 is not the identity row at column " + std::to_string(j));
    if (t[j * n] != j) fail(ErrorKind::NoIdentity, "column 0 is not the identity column at row " + std::to_string(j));
  }

  std::vector<std::size_t> seen(n, 0);
  std::size_t stamp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ++stamp;
    for (std::size_t j = 0; j < n; ++j) {
      const Index v = t[i * n + j];
      if (seen[v] == stamp) fail(ErrorKind::NotLatin, "row " + std::to_string(i) + " repeats entry " + std::to_string(v));
      seen[v] = stamp;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    ++stamp;
    for (std::size_t i = 0; i < n; ++i) {
      const Index v = t[i * n + j];
      if (seen[v] == stamp) fail(ErrorKind::NotLatin, "column " + std::to_string(j) + " repeats entry " + std::to_string(v));
      seen[v] = stamp;
    }
  }

  std::vector<Index> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Latin rows/columns guarantee a unique right and left inverse.
    std::size_t right = 0;
    std::size_t left = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i * n + j] == 0) right = j;
      if (t[j * n + i] == 0) left = j;
    }
    if (right != left) {
      fail(ErrorKind::NoInverse, "element " + std::to_string(i) + " has right inverse " + std::to_string(right) +
                                     " but left inverse " + std::to_string(left));
    }
    inverse[i] = static_cast<Index>(right);
  }

  check_associative(n, t);
  return inverse;
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::size_t order, std::vector<Index> table) {
  auto inverse = check_table(order, table);
  return GroupPtr(new FiniteGroup(order, std::move(table), std::move(inverse)));
}

GroupPtr FiniteGroup::from_rows(const std::vector<std::vector<Index>>& rows) {
  std::vector<Index> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows.size()) fail(ErrorKind::InvalidArgument, "table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_table(rows.size(), std::move(flat));
}

Index FiniteGroup::pow(Index a, std::int64_t k) const noexcept {
  if (k < 0) {
    a = inverse_[a];
    k = -k;
  }
  Index result = 0;
  Index base = a;
  auto e = static_cast<std::uint64_t>(k);
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

void validate(const FiniteGroup& g) {
  const auto inverse = check_table(g.order(), g.table());
  if (inverse != g.inverses()) fail(ErrorKind::Internal, "stored inverse array is stale");
}

bool same_group(const GroupPtr& a, const GroupPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

GroupPtr trivial_group() { return cyclic_group(1); }

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  if (n > kMaxOrder) fail(ErrorKind::SizeCap, "order " + std::to_string(n) + " exceeds cap");
  std::vector<Index> t(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Index>((i + j) % n);
  }
  return FiniteGroup::from_table(n, std::move(t));
}

namespace {

std::vector<std::vector<unsigned>> all_permutations(std::size_t k) {
  std::vector<unsigned> p(k);
  std::iota(p.begin(), p.end(), 0U);
  std::vector<std::vector<unsigned>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void check_symmetric_degree(std::size_t k) {
  if (k == 0) fail(ErrorKind::InvalidArgument, "symmetric group degree must be positive");
  if (k > 6) fail(ErrorKind::SizeCap, "symmetric group degree " + std::to_string(k) + " exceeds 6");
}

}  // namespace

GroupPtr symmetric_group(std::size_t k) {
  check_symmetric_degree(k);
  const auto perms = all_permutations(k);
  std::map<std::vector<unsigned>, Index> index_of;
  for (std::size_t i = 0; i < perms.size(); ++i) index_of.emplace(perms[i], static_cast<Index>(i));

  const std::size_t n = perms.size();
  std::vector<Index> t(n * n);
  std::vector<unsigned> prod(k);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < k; ++x) prod[x] = perms[a][perms[b][x]];
      t[a * n + b] = index_of.at(prod);
    }
  }
  return FiniteGroup::from_table(n, std::move(t));
}

std::vector<unsigned> symmetric_group_permutation(std::size_t k, Index index) {
  check_symmetric_degree(k);
  const auto perms = all_permutations(k);
  if (index >= perms.size()) fail(ErrorKind::InvalidArgument, "permutation index out of range");
  return perms[index];
}

std::size_t element_order(const FiniteGroup& g, Element x) {
  if (x.index >= g.order()) fail(ErrorKind::InvalidArgument, "element index out of range");
  std::size_t m = 1;
  for (Index y = x.index; y != 0; y = g.mul(y, x.index)) ++m;
  return m;
}

std::vector<std::size_t> element_orders(const FiniteGroup& g) {
  std::vector<std::size_t> out(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) out[i] = element_order(g, Element{static_cast<Index>(i)});
  return out;
}

std::optional<Element> is_cyclic(const FiniteGroup& g) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Element x{static_cast<Index>(i)};
    if (element_order(g, x) == g.order()) return x;
  }
  return std::nullopt;
}

bool is_abelian(const FiniteGroup& g) noexcept {
  const auto n = static_cast<Index>(g.order());
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t center_size(const FiniteGroup& g) noexcept {
  const auto n = static_cast<Index>(g.order());
  std::size_t count = 0;
  for (Index a = 0; a < n; ++a) {
    bool central = true;
    for (Index b = 0; b < n && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) ++count;
  }
  return count;
}

}  // namespace pqgroup
