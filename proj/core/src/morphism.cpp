#include "pqgroup/morphism.hpp"

#include <algorithm>
#include <sstream>

#include "pqgroup/error.hpp"

namespace pqgroup {

// ---------------------------------------------------------------------------
// Hom / Iso

Hom Hom::make(GroupPtr source, GroupPtr target, std::vector<Index> map) {
  if (!source || !target) fail(ErrorKind::InvalidArgument, "null group");
  if (map.size() != source->order()) fail(ErrorKind::InvalidArgument, "map length must equal source order");
  for (Index y : map) {
    if (y >= target->order()) fail(ErrorKind::InvalidArgument, "map entry " + std::to_string(y) + " out of range");
  }
  if (map[0] != 0) fail(ErrorKind::IdentityNotPreserved, "identity maps to " + std::to_string(map[0]));

  // f(xs) = f(x)f(s) for every x and every s in a generating set implies f
  // is multiplicative on all pairs (induct on word length of the right factor).
  const FiniteGroup& S = *source;
  const FiniteGroup& T = *target;
  for (Index s : generating_sequence(S)) {
    for (std::size_t i = 0; i < S.order(); ++i) {
      const auto x = static_cast<Index>(i);
      if (map[S.mul(x, s)] != T.mul(map[x], map[s])) {
        fail(ErrorKind::NotMultiplicative, "f(" + std::to_string(x) + "*" + std::to_string(s) + ") != f(" +
                                               std::to_string(x) + ")*f(" + std::to_string(s) + ")");
      }
    }
  }
  return Hom(std::move(source), std::move(target), std::move(map));
}

bool Hom::is_trivial() const noexcept {
  return std::all_of(map_.begin(), map_.end(), [](Index y) { return y == 0; });
}

bool Hom::is_injective() const {
  std::vector<bool> hit(target_->order(), false);
  for (Index y : map_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool Hom::is_surjective() const {
  std::vector<bool> hit(target_->order(), false);
  std::size_t count = 0;
  for (Index y : map_) {
    if (!hit[y]) ++count;
    hit[y] = true;
  }
  return count == target_->order();
}

bool Hom::operator==(const Hom& other) const noexcept {
  return map_ == other.map_ && same_group(source_, other.source_) && same_group(target_, other.target_);
}

Hom identity_hom(const GroupPtr& g) {
  std::vector<Index> map(g->order());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<Index>(i);
  return Hom::make(g, g, std::move(map));
}

Hom trivial_hom(const GroupPtr& source, const GroupPtr& target) {
  return Hom::make(source, target, std::vector<Index>(source->order(), 0));
}

Hom compose(const Hom& second, const Hom& first) {
  if (!same_group(first.target(), second.source())) {
    fail(ErrorKind::MismatchedParent, "cannot compose: codomain and domain differ");
  }
  std::vector<Index> map(first.map().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = second(first(static_cast<Index>(i)));
  return Hom::make(first.source(), second.target(), std::move(map));
}

Iso Iso::from_forward(Hom forward) {
  if (forward.source()->order() != forward.target()->order() || !forward.is_injective()) {
    fail(ErrorKind::NotBijective, "homomorphism is not a bijection");
  }
  std::vector<Index> back(forward.map().size());
  for (std::size_t i = 0; i < back.size(); ++i) back[forward(static_cast<Index>(i))] = static_cast<Index>(i);
  Hom backward = Hom::make(forward.target(), forward.source(), std::move(back));
  return Iso(std::move(forward), std::move(backward));
}

Iso identity_iso(const GroupPtr& g) { return Iso::from_forward(identity_hom(g)); }

Iso compose(const Iso& second, const Iso& first) { return Iso::from_forward(compose(second.forward(), first.forward())); }

void validate(const Iso& iso) {
  const Hom fwd = Hom::make(iso.source(), iso.target(), iso.forward().map());
  const Hom bwd = Hom::make(iso.target(), iso.source(), iso.backward().map());
  for (std::size_t i = 0; i < iso.source()->order(); ++i) {
    if (bwd(fwd(static_cast<Index>(i))) != i) fail(ErrorKind::NotBijective, "backward(forward(x)) != x");
  }
  for (std::size_t i = 0; i < iso.target()->order(); ++i) {
    if (fwd(bwd(static_cast<Index>(i))) != i) fail(ErrorKind::NotBijective, "forward(backward(y)) != y");
  }
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

constexpr Index kUnset = kNotInSubgroup;

class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& a, const FiniteGroup& b, std::uint64_t budget)
      : a_(a),
        b_(b),
        gens_(generating_sequence(a)),
        orders_a_(element_orders(a)),
        orders_b_(element_orders(b)),
        image_(a.order(), kUnset),
        used_(b.order(), false),
        budget_(budget) {
    image_[0] = 0;
    used_[0] = true;
    domain_.push_back(0);
  }

  std::uint64_t run(const std::function<bool(const std::vector<Index>&)>& visit) {
    if (a_.order() != b_.order()) return 0;
    if (gens_.empty()) {
      visit(image_);
      return 1;
    }
    search(0, visit);
    return nodes_;
  }

 private:
  // Returns false to stop the whole search.
  bool search(std::size_t level, const std::function<bool(const std::vector<Index>&)>& visit) {
    const Index g = gens_[level];
    const std::size_t old_size = domain_.size();
    for (std::size_t c = 1; c < b_.order(); ++c) {
      if (used_[c] || orders_b_[c] != orders_a_[g]) continue;
      if (++nodes_ > budget_) fail(ErrorKind::BudgetExceeded, "isomorphism search exceeded node budget");

      const bool ok = assign(g, static_cast<Index>(c)) && propagate(level, old_size);
      bool keep_going = true;
      if (ok) {
        keep_going = level + 1 == gens_.size() ? visit(image_) : search(level + 1, visit);
      }
      undo(old_size);
      if (!keep_going) return false;
    }
    return true;
  }

  bool assign(Index x, Index y) {
    if (used_[y]) return false;
    image_[x] = y;
    used_[y] = true;
    domain_.push_back(x);
    return true;
  }

  // f(x*s) must equal f(x)*f(s) for every known x and assigned generator s.
  bool check(Index x, std::size_t j) {
    const Index s = gens_[j];
    const Index y = a_.mul(x, s);
    const Index want = b_.mul(image_[x], image_[s]);
    if (image_[y] == kUnset) return assign(y, want);
    return image_[y] == want;
  }

  bool propagate(std::size_t level, std::size_t old_size) {
    for (std::size_t i = 0; i < old_size; ++i) {
      if (!check(domain_[i], level)) return false;
    }
    for (std::size_t i = old_size; i < domain_.size(); ++i) {
      for (std::size_t j = 0; j <= level; ++j) {
        if (!check(domain_[i], j)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t old_size) {
    while (domain_.size() > old_size) {
      const Index x = domain_.back();
      domain_.pop_back();
      used_[image_[x]] = false;
      image_[x] = kUnset;
    }
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::vector<Index> gens_;
  std::vector<std::size_t> orders_a_;
  std::vector<std::size_t> orders_b_;
  std::vector<Index> image_;
  std::vector<bool> used_;
  std::vector<Index> domain_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t for_each_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                   const std::function<bool(const std::vector<Index>&)>& visit,
                                   std::uint64_t budget) {
  IsoSearch search(a, b, budget);
  return search.run(visit);
}

std::optional<Iso> find_isomorphism(const GroupPtr& a, const GroupPtr& b) {
  if (fingerprint(*a) != fingerprint(*b)) return std::nullopt;
  std::optional<std::vector<Index>> found;
  for_each_isomorphism(
      *a, *b,
      [&](const std::vector<Index>& map) {
        found = map;
        return false;
      },
      UINT64_MAX);
  if (!found) return std::nullopt;
  return Iso::from_forward(Hom::make(a, b, std::move(*found)));
}

// ---------------------------------------------------------------------------
// Automorphisms and actions

std::optional<Index> AutGroup::index_of(const std::vector<Index>& map) const {
  auto it = index_by_map.find(map);
  if (it == index_by_map.end()) return std::nullopt;
  return it->second;
}

AutGroupPtr automorphism_group(const GroupPtr& g, std::uint64_t budget) {
  std::vector<std::vector<Index>> maps;
  for_each_isomorphism(
      *g, *g,
      [&](const std::vector<Index>& map) {
        if (maps.size() >= kMaxOrder) fail(ErrorKind::BudgetExceeded, "automorphism group exceeds size cap");
        maps.push_back(map);
        return true;
      },
      budget);
  // The identity map is the lexicographically smallest bijection fixing 0.
  std::sort(maps.begin(), maps.end());

  auto aut = std::make_shared<AutGroup>();
  aut->base = g;
  for (std::size_t i = 0; i < maps.size(); ++i) aut->index_by_map.emplace(maps[i], static_cast<Index>(i));

  const std::size_t m = maps.size();
  const std::size_t n = g->order();
  std::vector<Index> table(m * m);
  std::vector<Index> composed(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t x = 0; x < n; ++x) composed[x] = maps[i][maps[j][x]];
      table[i * m + j] = aut->index_by_map.at(composed);
    }
  }
  aut->carrier = FiniteGroup::from_table(m, std::move(table));
  aut->autos.reserve(m);
  for (auto& map : maps) aut->autos.push_back(Iso::from_forward(Hom::make(g, g, std::move(map))));
  return aut;
}

Hom restrict(const Hom& f, const EmbeddedSubgroup& h) {
  if (!same_group(f.source(), h.subgroup.parent())) {
    fail(ErrorKind::MismatchedParent, "subgroup is not a subgroup of the homomorphism's source");
  }
  std::vector<Index> map(h.embedding.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = f(h.embedding[i]);
  return Hom::make(h.group, f.target(), std::move(map));
}

Hom restrict(const Hom& f, const Subgroup& h) { return restrict(f, as_group(h)); }

ConjugationAction conj_normal(const GroupPtr& g, const Subgroup& n) {
  if (!same_group(g, n.parent())) fail(ErrorKind::MismatchedParent, "subgroup of a different group");
  if (!is_normal(n)) fail(ErrorKind::NotNormal, "subgroup N is not normal");
  EmbeddedSubgroup emb = as_group(n);
  AutGroupPtr aut = automorphism_group(emb.group);

  std::vector<Index> map(g->order());
  std::vector<Index> action(n.order());
  for (std::size_t x = 0; x < g->order(); ++x) {
    for (std::size_t i = 0; i < action.size(); ++i) {
      action[i] = emb.section[g->conj(static_cast<Index>(x), emb.embedding[i])];
    }
    const auto idx = aut->index_of(action);
    if (!idx) fail(ErrorKind::Internal, "conjugation is not an automorphism");
    map[x] = *idx;
  }
  Hom hom = Hom::make(g, aut->carrier, std::move(map));
  return ConjugationAction{std::move(emb), std::move(aut), std::move(hom)};
}

std::vector<Hom> homs_to_aut(const GroupPtr& source, const AutGroup& aut) {
  const auto gen = is_cyclic(*source);
  if (!gen) fail(ErrorKind::NotCyclicSource, "source group is not cyclic");
  const FiniteGroup& C = *aut.carrier;
  const std::size_t n = source->order();

  std::vector<Index> power_of_gen(n);  // power_of_gen[k] = gen^k
  for (std::size_t k = 0; k < n; ++k) power_of_gen[k] = source->pow(gen->index, static_cast<std::int64_t>(k));

  std::vector<Hom> out;
  for (std::size_t c = 0; c < C.order(); ++c) {
    if (n % element_order(C, Element{static_cast<Index>(c)}) != 0) continue;
    std::vector<Index> map(n);
    for (std::size_t k = 0; k < n; ++k) map[power_of_gen[k]] = C.pow(static_cast<Index>(c), static_cast<std::int64_t>(k));
    out.push_back(Hom::make(source, aut.carrier, std::move(map)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fingerprints

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint fp;
  fp.order = g.order();
  fp.abelian = is_abelian(g);
  fp.element_orders = element_orders(g);
  std::sort(fp.element_orders.begin(), fp.element_orders.end());
  fp.center_size = center_size(g);

  std::vector<bool> seen(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::size_t size = 0;
    for (std::size_t h = 0; h < g.order(); ++h) {
      const Index y = g.conj(static_cast<Index>(h), static_cast<Index>(x));
      if (!seen[y]) {
        seen[y] = true;
        ++size;
      }
    }
    fp.class_sizes.push_back(size);
  }
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  return fp;
}

std::string fingerprint_mismatch(const Fingerprint& a, const Fingerprint& b) {
  if (a.order != b.order) return "orders differ";
  if (a.element_orders != b.element_orders) return "element-order multisets differ";
  if (a.abelian != b.abelian) return "one is abelian, the other is not";
  if (a.center_size != b.center_size) return "center sizes differ";
  if (a.class_sizes != b.class_sizes) return "conjugacy class sizes differ";
  return {};
}

}  // namespace pqgroup
