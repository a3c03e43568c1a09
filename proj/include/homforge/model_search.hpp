#pragma once
// Exhaustive enumeration of finite hom-associative structures by backtracking
// over (alpha, table) in lexicographic order.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "homforge/hom_core.hpp"

namespace homforge::search {

enum class AlphaFilter { any, surjective, identity, fixed };
enum class DegeneracyFilter { any, strongly_degenerate, not_strongly_degenerate };
enum class TwistFilter { any, twist, non_twist };

struct SearchConstraints {
  int size = 1;
  bool require_hom_associative = true;
  AlphaFilter alpha_filter = AlphaFilter::any;
  std::vector<int> fixed_alpha;  // consulted only when alpha_filter == fixed
  DegeneracyFilter degeneracy_filter = DegeneracyFilter::any;
  TwistFilter twist_filter = TwistFilter::any;
  bool canonical_only = false;
};

// Least representative of the relabeling orbit: minimize (table, alpha)
// lexicographically over all simultaneous relabelings of {0..n-1}.
struct CanonicalForm {
  std::vector<int> table;
  std::vector<int> alpha;

  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& rhs) const {
    if (table != rhs.table) return table < rhs.table;
    return alpha < rhs.alpha;
  }
};

CanonicalForm canonicalize(const FiniteHomStructure& h);

FiniteHomStructure relabel(const FiniteHomStructure& h, const std::vector<int>& sigma);

// Return false to stop the enumeration early.
using Visitor = std::function<bool(const FiniteHomStructure&)>;

// Emits every matching structure in lexicographic (alpha, table) order.
// With canonical_only, only the first structure of each relabeling orbit is
// emitted. threads > 1 partitions the work by alpha map; results are merged
// back into the same deterministic order.
void enumerate(const SearchConstraints& c, const Visitor& visit, int threads = 1);

std::vector<FiniteHomStructure> enumerate_all(const SearchConstraints& c, int threads = 1);

std::int64_t count(const SearchConstraints& c, int threads = 1);

// First match in enumeration order, or nullopt. Always runs serially so the
// answer does not depend on thread scheduling.
std::optional<FiniteHomStructure> hunt(const SearchConstraints& c);

}  // namespace homforge::search
