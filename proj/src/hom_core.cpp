#include "homforge/hom_core.hpp"

#include <algorithm>
#include <cassert>

namespace homforge {

void validate(const FiniteHomStructure& h) {
  if (h.size < 1) throw PreconditionError("size must be positive");
  size_t n = static_cast<size_t>(h.size);
  if (h.table.size() != n * n)
    throw PreconditionError("table has wrong shape");
  if (h.alpha.size() != n)
    throw PreconditionError("alpha has wrong shape");
  for (int v : h.table)
    if (v < 0 || v >= h.size)
      throw PreconditionError("index out of range in table", {v});
  for (int v : h.alpha)
    if (v < 0 || v >= h.size)
      throw PreconditionError("index out of range in alpha", {v});
}

FiniteHomStructure make_structure(int size, std::vector<int> table, std::vector<int> alpha) {
  FiniteHomStructure h{size, std::move(table), std::move(alpha)};
  validate(h);
  return h;
}

std::optional<std::array<int, 3>> hom_assoc_witness(const FiniteHomStructure& h) {
  int n = h.size;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (h.prod(h.map(x), h.prod(y, z)) != h.prod(h.prod(x, y), h.map(z)))
          return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

bool is_hom_associative(const FiniteHomStructure& h) {
  return !hom_assoc_witness(h).has_value();
}

DegeneracyReport degeneracy_report(const FiniteHomStructure& h) {
  int n = h.size;
  DegeneracyReport rep;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool cols_equal = true, rows_equal = true;
      for (int x = 0; x < n && (cols_equal || rows_equal); ++x) {
        if (h.prod(x, a) != h.prod(x, b)) cols_equal = false;
        if (h.prod(a, x) != h.prod(b, x)) rows_equal = false;
      }
      if (cols_equal && !rep.left) rep.left = WitnessPair{a, b};
      if (rows_equal && !rep.right) rep.right = WitnessPair{a, b};
      if (cols_equal && rows_equal && !rep.strong) rep.strong = WitnessPair{a, b};
    }
  }
  rep.two_sided = rep.left.has_value() && rep.right.has_value();
  return rep;
}

AlphaProperties alpha_properties(const FiniteHomStructure& h) {
  int n = h.size;
  std::vector<int> hits(n, 0);
  for (int x = 0; x < n; ++x) ++hits[h.map(x)];
  AlphaProperties props;
  props.surjective = std::all_of(hits.begin(), hits.end(), [](int c) { return c >= 1; });
  props.injective = std::all_of(hits.begin(), hits.end(), [](int c) { return c <= 1; });
  // On a finite set these coincide.
  assert(props.surjective == props.injective);
  props.bijective = props.surjective && props.injective;
  return props;
}

std::vector<Section> sections(const FiniteHomStructure& h) {
  if (!alpha_properties(h).surjective) return {};
  int n = h.size;
  Section s;
  s.beta.assign(n, 0);
  for (int x = 0; x < n; ++x) s.beta[h.map(x)] = x;
  return {std::move(s)};
}

FiniteHomStructure twist(int size, const std::vector<int>& assoc_table,
                         const std::vector<int>& alpha) {
  FiniteHomStructure base{size, assoc_table, alpha};
  validate(base);
  int n = size;
  auto dot = [&](int x, int y) { return assoc_table[static_cast<size_t>(x) * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (dot(dot(x, y), z) != dot(x, dot(y, z)))
          throw PreconditionError("table is not associative", {x, y, z});
      }
  auto a = [&](int x) { return alpha[x]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (a(dot(a(x), a(dot(y, z)))) != a(dot(a(dot(x, y)), a(z))))
          throw PreconditionError("alpha is not compatible with the table", {x, y, z});
      }
  FiniteHomStructure h{size, std::vector<int>(static_cast<size_t>(n) * n), alpha};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      h.table[static_cast<size_t>(x) * n + y] = a(dot(x, y));
  // Guaranteed by the compatibility precondition.
  assert(is_hom_associative(h));
  return h;
}

UntwistResult untwist_via_section(const FiniteHomStructure& h, const Section& beta) {
  validate(h);
  int n = h.size;
  if (static_cast<int>(beta.beta.size()) != n)
    throw PreconditionError("section has wrong shape");
  for (int x = 0; x < n; ++x) {
    int b = beta.beta[x];
    if (b < 0 || b >= n) throw PreconditionError("index out of range in section", {b});
    if (h.map(b) != x)
      throw PreconditionError("not a section: alpha(beta(x)) != x", {x});
  }
  UntwistResult res;
  res.beta = beta;
  res.induced_table.assign(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      res.induced_table[static_cast<size_t>(x) * n + y] = beta.beta[h.prod(x, y)];
  auto dot = [&](int x, int y) { return res.induced_table[static_cast<size_t>(x) * n + y]; };
  res.associative = true;
  for (int x = 0; x < n && res.associative; ++x)
    for (int y = 0; y < n && res.associative; ++y)
      for (int z = 0; z < n; ++z)
        if (dot(dot(x, y), z) != dot(x, dot(y, z))) {
          res.associative = false;
          break;
        }
  return res;
}

namespace {

constexpr int kUnset = -1;

// Checks every associativity triple of the partial table whose four lookups
// are all determined. Used by the fiber search in is_twist.
bool partial_assoc_ok(int n, const std::vector<int>& t) {
  auto get = [&](int x, int y) { return t[static_cast<size_t>(x) * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = get(x, y);
      if (xy == kUnset) continue;
      for (int z = 0; z < n; ++z) {
        int yz = get(y, z);
        if (yz == kUnset) continue;
        int l = get(xy, z);
        int r = get(x, yz);
        if (l == kUnset || r == kUnset) continue;
        if (l != r) return false;
      }
    }
  return true;
}

}  // namespace

std::optional<std::vector<int>> is_twist(const FiniteHomStructure& h) {
  validate(h);
  int n = h.size;
  if (n > 6) throw PreconditionError("is_twist supports size <= 6");
  std::vector<std::vector<int>> fiber(n);
  for (int u = 0; u < n; ++u) fiber[h.map(u)].push_back(u);
  // A product outside the image of alpha rules out any preimage table.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (fiber[h.prod(x, y)].empty()) return std::nullopt;

  std::vector<int> t(static_cast<size_t>(n) * n, kUnset);
  std::optional<std::vector<int>> found;
  auto dfs = [&](auto&& self, int cell) -> bool {
    if (cell == n * n) {
      found = t;
      return true;
    }
    int x = cell / n, y = cell % n;
    for (int candidate : fiber[h.prod(x, y)]) {
      t[cell] = candidate;
      if (partial_assoc_ok(n, t) && self(self, cell + 1)) return true;
      t[cell] = kUnset;
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

FiniteHomStructure opposite(const FiniteHomStructure& h) {
  validate(h);
  int n = h.size;
  FiniteHomStructure r{n, std::vector<int>(static_cast<size_t>(n) * n), h.alpha};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      r.table[static_cast<size_t>(x) * n + y] = h.prod(y, x);
  return r;
}

bool IdentityReport::all_hold() const {
  return std::all_of(equations.begin(), equations.end(),
                     [](const EquationCheck& e) { return e.holds; });
}

namespace {

void record(EquationCheck& eq, bool holds, std::initializer_list<int> tuple) {
  if (eq.holds && !holds) {
    eq.holds = false;
    eq.first_violation.assign(tuple);
  }
}

Section require_section(const FiniteHomStructure& h, const Section& beta) {
  int n = h.size;
  if (static_cast<int>(beta.beta.size()) != n)
    throw PreconditionError("section has wrong shape");
  for (int x = 0; x < n; ++x) {
    int b = beta.beta[x];
    if (b < 0 || b >= n) throw PreconditionError("index out of range in section", {b});
    if (h.map(b) != x)
      throw PreconditionError("not a section: alpha(beta(x)) != x", {x});
  }
  return beta;
}

}  // namespace

IdentityReport check_lemma1(const FiniteHomStructure& h, const Section& beta) {
  validate(h);
  require_section(h, beta);
  int n = h.size;
  auto s = [&](int x, int y) { return h.prod(x, y); };
  auto b = [&](int x) { return beta.beta[x]; };
  IdentityReport rep;
  rep.equations = {{"eq1"}, {"eq2"}, {"eq3"}, {"eq4"}};
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            int left = s(x, b(s(y, z)));    // x * beta(y z)
            int right = s(b(s(x, y)), z);   // beta(x y) * z
            record(rep.equations[0], s(a, s(a2, left)) == s(a, s(a2, right)),
                   {a, a2, x, y, z});
            record(rep.equations[1], s(a, s(left, a2)) == s(a, s(right, a2)),
                   {a, a2, x, y, z});
            record(rep.equations[2], s(s(a, left), a2) == s(s(a, right), a2),
                   {a, a2, x, y, z});
            record(rep.equations[3], s(s(left, a), a2) == s(s(right, a), a2),
                   {a, a2, x, y, z});
          }
  return rep;
}

IdentityReport check_helper_identities(const FiniteHomStructure& h, const Section& beta) {
  validate(h);
  require_section(h, beta);
  int n = h.size;
  auto s = [&](int x, int y) { return h.prod(x, y); };
  auto a = [&](int x) { return h.map(x); };
  auto b = [&](int x) { return beta.beta[x]; };
  IdentityReport rep;
  rep.equations = {{"eq5"}, {"eq6"}, {"eq7"}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        record(rep.equations[0], s(s(b(x), y), z) == s(x, s(y, b(z))), {x, y, z});
        int e7a = s(x, s(y, b(a(z))));
        int e7b = s(s(b(x), y), a(z));
        int e7c = s(x, s(y, z));
        record(rep.equations[2], e7a == e7b && e7b == e7c, {x, y, z});
        for (int u = 0; u < n; ++u)
          record(rep.equations[1],
                 s(a(a(x)), s(s(y, z), u)) == s(a(s(x, y)), s(a(z), u)),
                 {x, y, z, u});
      }
  return rep;
}

}  // namespace homforge
