#include "homforge/model_search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

namespace homforge::search {

namespace {

constexpr int kUnset = -1;

void validate_constraints(const SearchConstraints& c) {
  if (c.size < 1) throw PreconditionError("size must be positive");
  bool alpha_pinned =
      c.alpha_filter == AlphaFilter::fixed || c.alpha_filter == AlphaFilter::identity;
  int budget = alpha_pinned ? 5 : 4;
  if (c.size > budget)
    throw PreconditionError(alpha_pinned
                                ? "size budget exceeded (max 5 with a pinned alpha)"
                                : "size budget exceeded (max 4)");
  if (c.alpha_filter == AlphaFilter::fixed) {
    if (static_cast<int>(c.fixed_alpha.size()) != c.size)
      throw PreconditionError("fixed alpha has wrong shape");
    for (int v : c.fixed_alpha)
      if (v < 0 || v >= c.size)
        throw PreconditionError("index out of range in alpha", {v});
  }
}

std::vector<std::vector<int>> alpha_candidates(const SearchConstraints& c) {
  int n = c.size;
  std::vector<std::vector<int>> out;
  switch (c.alpha_filter) {
    case AlphaFilter::identity: {
      std::vector<int> id(n);
      std::iota(id.begin(), id.end(), 0);
      out.push_back(std::move(id));
      break;
    }
    case AlphaFilter::fixed:
      out.push_back(c.fixed_alpha);
      break;
    case AlphaFilter::surjective: {
      // Surjective self-maps of a finite set are exactly the permutations.
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        out.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case AlphaFilter::any: {
      std::vector<int> a(n, 0);
      while (true) {
        out.push_back(a);
        int i = n - 1;
        while (i >= 0 && a[i] == n - 1) a[i--] = 0;
        if (i < 0) break;
        ++a[i];
      }
      break;
    }
  }
  return out;
}

// Every hom-associativity triple of the partial table whose lookups are all
// determined must already hold; anything else is pruned.
bool partial_hom_ok(int n, const std::vector<int>& alpha, const std::vector<int>& t) {
  auto get = [&](int x, int y) { return t[static_cast<size_t>(x) * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = get(x, y);
      for (int z = 0; z < n; ++z) {
        int yz = get(y, z);
        if (yz == kUnset) continue;
        int l = get(alpha[x], yz);
        if (l == kUnset || xy == kUnset) continue;
        int r = get(xy, alpha[z]);
        if (r == kUnset) continue;
        if (l != r) return false;
      }
    }
  return true;
}

// Depth-first fill of table cells in row-major order. Emits complete tables;
// emit returning false aborts the walk.
bool table_dfs(int n, const std::vector<int>& alpha, bool prune, std::vector<int>& t,
               int cell, const std::function<bool(const std::vector<int>&)>& emit) {
  if (cell == n * n) return emit(t);
  for (int v = 0; v < n; ++v) {
    t[cell] = v;
    if (!prune || partial_hom_ok(n, alpha, t)) {
      if (!table_dfs(n, alpha, prune, t, cell + 1, emit)) return false;
    }
  }
  t[cell] = kUnset;
  return true;
}

bool structure_matches(const SearchConstraints& c, const FiniteHomStructure& h) {
  if (c.degeneracy_filter != DegeneracyFilter::any) {
    bool strong = degeneracy_report(h).strongly_degenerate();
    if (c.degeneracy_filter == DegeneracyFilter::strongly_degenerate && !strong)
      return false;
    if (c.degeneracy_filter == DegeneracyFilter::not_strongly_degenerate && strong)
      return false;
  }
  if (c.twist_filter != TwistFilter::any) {
    bool tw = is_twist(h).has_value();
    if (c.twist_filter == TwistFilter::twist && !tw) return false;
    if (c.twist_filter == TwistFilter::non_twist && tw) return false;
  }
  return true;
}

// Runs the table search for one alpha, forwarding matches.
bool enumerate_for_alpha(const SearchConstraints& c, const std::vector<int>& alpha,
                         const Visitor& visit) {
  std::vector<int> t(static_cast<size_t>(c.size) * c.size, kUnset);
  return table_dfs(c.size, alpha, c.require_hom_associative, t, 0,
                   [&](const std::vector<int>& table) {
                     FiniteHomStructure h{c.size, table, alpha};
                     if (!structure_matches(c, h)) return true;
                     return visit(h);
                   });
}

}  // namespace

FiniteHomStructure relabel(const FiniteHomStructure& h, const std::vector<int>& sigma) {
  validate(h);
  int n = h.size;
  if (static_cast<int>(sigma.size()) != n)
    throw PreconditionError("relabeling has wrong shape");
  FiniteHomStructure r{n, std::vector<int>(static_cast<size_t>(n) * n),
                       std::vector<int>(n)};
  for (int x = 0; x < n; ++x) {
    r.alpha[sigma[x]] = sigma[h.map(x)];
    for (int y = 0; y < n; ++y)
      r.table[static_cast<size_t>(sigma[x]) * n + sigma[y]] = sigma[h.prod(x, y)];
  }
  return r;
}

CanonicalForm canonicalize(const FiniteHomStructure& h) {
  validate(h);
  int n = h.size;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::optional<CanonicalForm> best;
  do {
    FiniteHomStructure r = relabel(h, sigma);
    CanonicalForm cf{std::move(r.table), std::move(r.alpha)};
    if (!best || cf < *best) best = std::move(cf);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return *best;
}

void enumerate(const SearchConstraints& c, const Visitor& visit, int threads) {
  validate_constraints(c);
  auto alphas = alpha_candidates(c);

  std::set<CanonicalForm> seen;
  auto deliver = [&](const FiniteHomStructure& h) {
    if (c.canonical_only && !seen.insert(canonicalize(h)).second) return true;
    return visit(h);
  };

  threads = std::clamp<int>(threads, 1, static_cast<int>(alphas.size()));
  if (threads <= 1) {
    for (const auto& alpha : alphas)
      if (!enumerate_for_alpha(c, alpha, deliver)) return;
    return;
  }

  // Workers fill one bucket per alpha; delivery then replays the buckets in
  // alpha order, so the visitor sees the exact serial sequence.
  std::vector<std::vector<FiniteHomStructure>> buckets(alphas.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < alphas.size(); i = next.fetch_add(1))
      enumerate_for_alpha(c, alphas[i], [&](const FiniteHomStructure& h) {
        buckets[i].push_back(h);
        return true;
      });
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (const auto& bucket : buckets)
    for (const auto& h : bucket)
      if (!deliver(h)) return;
}

std::vector<FiniteHomStructure> enumerate_all(const SearchConstraints& c, int threads) {
  std::vector<FiniteHomStructure> out;
  enumerate(c, [&](const FiniteHomStructure& h) {
    out.push_back(h);
    return true;
  }, threads);
  return out;
}

std::int64_t count(const SearchConstraints& c, int threads) {
  validate_constraints(c);
  if (threads > 1 && !c.canonical_only) {
    // Counting needs no ordering, so skip the bucket buffering.
    auto alphas = alpha_candidates(c);
    threads = std::clamp<int>(threads, 1, static_cast<int>(alphas.size()));
    std::atomic<size_t> next{0};
    std::atomic<std::int64_t> total{0};
    auto worker = [&] {
      std::int64_t local = 0;
      for (size_t i = next.fetch_add(1); i < alphas.size(); i = next.fetch_add(1))
        enumerate_for_alpha(c, alphas[i], [&](const FiniteHomStructure&) {
          ++local;
          return true;
        });
      total.fetch_add(local);
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return total.load();
  }
  std::int64_t n = 0;
  enumerate(c, [&](const FiniteHomStructure&) {
    ++n;
    return true;
  }, threads);
  return n;
}

std::optional<FiniteHomStructure> hunt(const SearchConstraints& c) {
  std::optional<FiniteHomStructure> found;
  enumerate(c, [&](const FiniteHomStructure& h) {
    found = h;
    return false;
  }, 1);
  return found;
}

}  // namespace homforge::search
