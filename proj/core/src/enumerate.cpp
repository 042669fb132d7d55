#include "pqgroup/enumerate.hpp"

#include <string>

#include "pqgroup/error.hpp"
#include "pqgroup/morphism.hpp"
#include "pqgroup/number_theory.hpp"

namespace pqgroup {
namespace {

constexpr Index kUnset = static_cast<Index>(-1);

// Fills Cayley tables under a canonical labelling driven by a generator tuple
// (g_1, ..., g_r) where g_1 has the maximal element order m:
//
//  * labels come in blocks of m; label b*m + i stands for t_b * g_1^i, so the
//    blocks are the left cosets of <g_1> and right multiplication by g_1
//    (column 1) is fixed in advance;
//  * t_0 = e and t_{c-1} = g_c for c >= 2;
//  * further coset representatives are numbered in order of first appearance
//    while scanning the columns x * g_c (c >= 2) row by row.
//
// Each pair (group, generator tuple) yields exactly one table, and tuples
// related by an automorphism yield the same one. Associativity and Latin
// constraints are propagated as cells are fixed.
class TableSearch {
 public:
  TableSearch(std::size_t n, std::size_t m, std::size_t r, std::uint64_t budget, EnumerationStats& stats)
      : n_(n),
        m_(m),
        r_(r),
        table_(n * n, kUnset),
        row_pos_(n * n, kUnset),
        col_pos_(n * n, kUnset),
        parent_(n, 0),
        parent_col_(n, 0),
        budget_(budget),
        stats_(stats) {
    gen_cols_.push_back(1);
    for (std::size_t c = 2; c <= r; ++c) gen_cols_.push_back((c - 1) * m);
    next_block_ = r;
    born_ = next_block_ * m_;

    bool ok = true;
    for (std::size_t x = 0; x < n; ++x) {
      ok = ok && define(0, x, static_cast<Index>(x));
      if (x > 0) ok = ok && define(x, 0, static_cast<Index>(x));
      const std::size_t block = x / m;
      const std::size_t i = x % m;
      ok = ok && define(x, 1, static_cast<Index>(block * m + (i + 1) % m));
      if (i > 0) {
        parent_[x] = static_cast<Index>(x - 1);
        parent_col_[x] = 1;
      }
    }
    for (std::size_t c = 2; c <= r; ++c) parent_col_[(c - 1) * m] = static_cast<Index>((c - 1) * m);
    viable_ = ok && propagate();
    trail_.clear();
  }

  template <typename Visit>
  void run(Visit&& visit) {
    if (viable_) search(0, visit);
  }

 private:
  Index at(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }

  bool define(std::size_t a, std::size_t b, Index d) {
    const Index cur = at(a, b);
    if (cur != kUnset) return cur == d;
    if (row_pos_[a * n_ + d] != kUnset || col_pos_[b * n_ + d] != kUnset) return false;
    table_[a * n_ + b] = d;
    row_pos_[a * n_ + d] = static_cast<Index>(b);
    col_pos_[b * n_ + d] = static_cast<Index>(a);
    trail_.push_back(a * n_ + b);
    queue_.push_back(a * n_ + b);
    return true;
  }

  // Requires cell (a1, b1) == cell (a2, b2).
  bool equate(std::size_t a1, std::size_t b1, std::size_t a2, std::size_t b2) {
    const Index lhs = at(a1, b1);
    const Index rhs = at(a2, b2);
    if (lhs != kUnset && rhs != kUnset) return lhs == rhs;
    if (lhs != kUnset) return define(a2, b2, lhs);
    if (rhs != kUnset) return define(a1, b1, rhs);
    return true;
  }

  // Enforces (xy)z = x(yz) for every equation in which the newly fixed cell
  // is one of the two inner products, plus two-sidedness of inverses.
  bool propagate() {
    while (!queue_.empty()) {
      const std::size_t cell = queue_.back();
      queue_.pop_back();
      const std::size_t a = cell / n_;
      const std::size_t b = cell % n_;
      const Index d = table_[cell];
      if (d == 0 && !define(b, a, 0)) return false;
      if (exceeds_max_order(d) || exceeds_max_order(b)) return false;
      for (std::size_t u = 0; u < n_; ++u) {  // (u a) b = u (a b)
        const Index ua = at(u, a);
        if (ua != kUnset && !equate(ua, b, u, d)) return false;
      }
      for (std::size_t w = 0; w < n_; ++w) {  // (a b) w = a (b w)
        const Index bw = at(b, w);
        if (bw != kUnset && !equate(d, w, a, bw)) return false;
      }
    }
    return true;
  }

  // True when the known powers of x already show an order above m.
  bool exceeds_max_order(Index x) const {
    Index power = x;
    for (std::size_t k = 1; k <= m_; ++k) {
      if (power == 0) return false;
      power = at(power, x);
      if (power == kUnset) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t cell = trail_.back();
      trail_.pop_back();
      const Index d = table_[cell];
      row_pos_[(cell / n_) * n_ + d] = kUnset;
      col_pos_[(cell % n_) * n_ + d] = kUnset;
      table_[cell] = kUnset;
    }
    queue_.clear();
  }

  std::size_t free_columns() const { return r_ - 1; }

  template <typename Visit>
  void search(std::size_t cursor, Visit& visit) {
    const std::size_t k = free_columns();
    const std::size_t cells = n_ * k;
    while (cursor < cells && at(cursor / k, gen_cols_[1 + cursor % k]) != kUnset) ++cursor;
    if (cursor >= cells) {
      leaf(visit);
      return;
    }
    const std::size_t x = cursor / k;
    const std::size_t col = gen_cols_[1 + cursor % k];
    if (x >= born_) return;  // the generators close up on fewer than n elements

    const bool can_open = born_ < n_;
    for (std::size_t v = 0; v < born_ + (can_open ? 1 : 0); ++v) {
      const bool fresh = v == born_;
      if (!fresh && (row_pos_[x * n_ + v] != kUnset || col_pos_[col * n_ + v] != kUnset)) continue;
      if (++stats_.nodes > budget_) fail(ErrorKind::BudgetExceeded, "enumeration exceeded node budget");
      const std::size_t mark = trail_.size();
      if (fresh) {
        parent_[v] = static_cast<Index>(x);
        parent_col_[v] = static_cast<Index>(col);
        ++next_block_;
        born_ += m_;
      }
      if (define(x, col, static_cast<Index>(v)) && propagate()) search(cursor + 1, visit);
      undo(mark);
      if (fresh) {
        --next_block_;
        born_ -= m_;
      }
    }
  }

  // Every generator column is fixed; derive the rest from the spanning tree
  // y = parent(y) * column(y), then validate.
  template <typename Visit>
  void leaf(Visit& visit) {
    if (born_ != n_) return;
    std::vector<Index> full(n_ * n_);
    for (std::size_t x = 0; x < n_; ++x) full[x * n_] = static_cast<Index>(x);
    for (std::size_t y = 1; y < n_; ++y) {
      for (std::size_t x = 0; x < n_; ++x) {
        const Index via = full[x * n_ + parent_[y]];
        const Index v = at(via, parent_col_[y]);
        const Index known = at(x, y);
        if (v == kUnset || (known != kUnset && known != v)) {
          ++stats_.tables_rejected;
          return;
        }
        full[x * n_ + y] = v;
      }
    }
    GroupPtr g;
    try {
      g = FiniteGroup::from_table(n_, std::move(full));
    } catch (const GroupError&) {
      ++stats_.tables_rejected;
      return;
    }
    // Only tables where g_1 has the largest element order are canonical.
    for (std::size_t x = 0; x < n_; ++x) {
      if (element_order(*g, Element{static_cast<Index>(x)}) > m_) {
        ++stats_.tables_rejected;
        return;
      }
    }
    ++stats_.tables_completed;
    visit(std::move(g));
  }

  std::size_t n_;
  std::size_t m_;
  std::size_t r_;
  std::vector<Index> table_;
  std::vector<Index> row_pos_;
  std::vector<Index> col_pos_;
  std::vector<Index> parent_;
  std::vector<Index> parent_col_;
  std::vector<std::size_t> gen_cols_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> queue_;
  std::size_t next_block_ = 1;
  std::size_t born_ = 0;
  bool viable_ = false;
  std::uint64_t budget_;
  EnumerationStats& stats_;
};

std::size_t prime_factor_count(std::size_t n) {
  std::size_t count = 0;
  for (const auto& [prime, exponent] : nt::factorize(n)) count += exponent;
  return count;
}

bool is_prime_or_semiprime(std::size_t n) {
  const auto f = nt::factorize(n);
  if (f.size() == 1) return f[0].second <= 2;
  return f.size() == 2 && f[0].second == 1 && f[1].second == 1;
}

}  // namespace

bool within_enumeration_budget(std::size_t n, const EnumerationOptions& options) {
  if (n == 0) return false;
  if (n <= options.max_order) return true;
  return options.extended && n <= kExtendedEnumerationOrder && is_prime_or_semiprime(n);
}

EnumerationReport enumerate_groups(std::size_t n, const EnumerationOptions& options) {
  if (!within_enumeration_budget(n, options)) {
    fail(ErrorKind::BudgetExceeded, "order " + std::to_string(n) + " is outside the enumeration budget");
  }
  EnumerationReport report;
  report.order = n;
  if (n == 1) {
    report.representatives.push_back(trivial_group());
    report.count = 1;
    report.stats.tables_completed = 1;
    return report;
  }

  std::vector<Fingerprint> prints;
  auto consider = [&](GroupPtr g) {
    Fingerprint fp = fingerprint(*g);
    for (std::size_t i = 0; i < report.representatives.size(); ++i) {
      if (prints[i] == fp && find_isomorphism(report.representatives[i], g)) {
        ++report.stats.iso_rejections;
        return;
      }
    }
    prints.push_back(std::move(fp));
    report.representatives.push_back(std::move(g));
  };

  // With g_1 of maximal order m, extend greedily by elements outside the
  // subgroup generated so far: each step multiplies the order by at least a
  // prime, so r - 1 <= number of prime factors of n/m.
  for (std::size_t m = n; m >= 2; --m) {
    if (n % m != 0) continue;
    const std::size_t max_rank = 1 + prime_factor_count(n / m);
    for (std::size_t r = (m == n ? 1 : 2); r <= max_rank && (r - 1) * m < n; ++r) {
      TableSearch search(n, m, r, options.node_budget, report.stats);
      search.run(consider);
    }
  }
  report.count = report.representatives.size();
  return report;
}

std::size_t count_groups(std::size_t n, const EnumerationOptions& options) { return enumerate_groups(n, options).count; }

}  // namespace pqgroup
