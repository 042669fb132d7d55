#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace pqgroup::oracle {

std::size_t element_order(const FiniteGroup& g, Index x) {
  std::size_t k = 1;
  Index p = x;
  while (p != 0) {
    p = g.mul(p, x);
    ++k;
  }
  return k;
}

bool is_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<Index>& map) {
  const std::size_t n = a.order();
  if (b.order() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Index v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (map[a.mul(static_cast<Index>(i), static_cast<Index>(j))] != b.mul(map[i], map[j])) return false;
    }
  }
  return true;
}

namespace {

// Visits every bijection fixing 0; stops when visit returns false.
template <typename Visit>
void for_each_bijection(std::size_t n, Visit&& visit) {
  std::vector<Index> map(n);
  std::iota(map.begin(), map.end(), Index{0});
  do {
    if (!visit(map)) return;
  } while (std::next_permutation(map.begin() + 1, map.end()));
}

std::vector<std::size_t> sorted_orders(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.order(); ++x) out.push_back(element_order(g, static_cast<Index>(x)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (sorted_orders(a) != sorted_orders(b)) return false;
  bool found = false;
  for_each_bijection(a.order(), [&](const std::vector<Index>& map) {
    found = is_isomorphism(a, b, map);
    return !found;
  });
  return found;
}

std::size_t automorphism_count(const FiniteGroup& g) {
  std::size_t count = 0;
  for_each_bijection(g.order(), [&](const std::vector<Index>& map) {
    if (is_isomorphism(g, g, map)) ++count;
    return true;
  });
  return count;
}

std::set<std::vector<Index>> subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::set<std::vector<Index>> out;
  for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
    std::vector<bool> in(n, false);
    in[0] = true;
    for (std::size_t i = 1; i < n; ++i) in[i] = (mask >> (i - 1)) & 1U;
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (!in[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (in[j] && !in[g.mul(static_cast<Index>(i), static_cast<Index>(j))]) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<Index> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (in[i]) members.push_back(static_cast<Index>(i));
    }
    out.insert(std::move(members));
  }
  return out;
}

namespace {

using Perm = std::array<std::uint8_t, 8>;

Perm compose(const Perm& a, const Perm& b) {  // apply b, then a
  Perm c{};
  for (std::size_t i = 0; i < 8; ++i) c[i] = a[b[i]];
  return c;
}

Perm identity_perm() {
  Perm p{};
  for (std::size_t i = 0; i < 8; ++i) p[i] = static_cast<std::uint8_t>(i);
  return p;
}

Perm from_cycles(const std::vector<std::vector<std::uint8_t>>& cycles) {
  Perm p = identity_perm();
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  }
  return p;
}

// Closure of gens, or empty if it grows past 8 elements or some non-identity
// element has a fixed point.
std::vector<Perm> semiregular_closure(const std::vector<Perm>& gens) {
  const Perm e = identity_perm();
  std::vector<Perm> elems{e};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& s : gens) {
      const Perm next = compose(elems[i], s);
      if (std::find(elems.begin(), elems.end(), next) != elems.end()) continue;
      for (std::size_t pt = 0; pt < 8; ++pt) {
        if (next[pt] == pt) return {};
      }
      if (elems.size() == 8) return {};
      elems.push_back(next);
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

// Regular group on 8 points -> Cayley table, element named by the image of 0.
std::vector<Index> regular_table(const std::vector<Perm>& elems) {
  std::array<const Perm*, 8> by_image{};
  for (const Perm& p : elems) by_image[p[0]] = &p;
  std::vector<Index> table(64);
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t y = 0; y < 8; ++y) table[x * 8 + y] = compose(*by_image[x], *by_image[y])[0];
  }
  return table;
}

}  // namespace

std::vector<GroupPtr> regular_groups_of_order_8() {
  const std::vector<Perm> firsts{
      from_cycles({{0, 1}, {2, 3}, {4, 5}, {6, 7}}),
      from_cycles({{0, 1, 2, 3}, {4, 5, 6, 7}}),
      from_cycles({{0, 1, 2, 3, 4, 5, 6, 7}}),
  };
  std::vector<Perm> all;
  Perm p = identity_perm();
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::set<std::vector<Perm>> regular;
  std::set<std::vector<Perm>> halves;  // order-4 semiregular subgroups to extend
  for (const Perm& a : firsts) {
    for (const Perm& b : all) {
      auto h = semiregular_closure({a, b});
      if (h.size() == 8) regular.insert(std::move(h));
      else if (h.size() == 4) halves.insert(std::move(h));
    }
  }
  for (const auto& k : halves) {
    for (const Perm& c : all) {
      std::vector<Perm> gens = k;
      gens.push_back(c);
      auto h = semiregular_closure(gens);
      if (h.size() == 8) regular.insert(std::move(h));
    }
  }

  std::set<std::vector<Index>> tables;
  for (const auto& h : regular) tables.insert(regular_table(h));

  std::vector<GroupPtr> reps;
  for (const auto& t : tables) {
    GroupPtr g = FiniteGroup::from_table(8, t);
    bool fresh = true;
    for (const auto& r : reps) {
      if (isomorphic(*r, *g)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(std::move(g));
  }
  return reps;
}

GroupPtr relabel(const FiniteGroup& g, std::mt19937_64& rng) {
  const std::size_t n = g.order();
  std::vector<Index> pi(n);
  std::iota(pi.begin(), pi.end(), Index{0});
  std::shuffle(pi.begin() + 1, pi.end(), rng);
  std::vector<Index> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[pi[i] * n + pi[j]] = pi[g.mul(static_cast<Index>(i), static_cast<Index>(j))];
    }
  }
  return FiniteGroup::from_table(n, std::move(table));
}

}  // namespace pqgroup::oracle
