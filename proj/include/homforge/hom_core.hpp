#pragma once
// Finite hom-associative structures: a set {0..n-1} with a binary product
// table and a twisting self-map alpha, subject to
//     alpha(x) * (y * z) == (x * y) * alpha(z).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homforge {

// Invalid-argument error that can carry the tuple witnessing the failure.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what, std::vector<int> witness = {})
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

struct FiniteHomStructure {
  int size = 0;
  std::vector<int> table;  // row-major: table[x*size + y] = x * y
  std::vector<int> alpha;

  int prod(int x, int y) const { return table[static_cast<size_t>(x) * size + y]; }
  int map(int x) const { return alpha[x]; }

  bool operator==(const FiniteHomStructure&) const = default;
};

// Throws PreconditionError ("index out of range", ...) on bad shapes or entries.
void validate(const FiniteHomStructure& h);

FiniteHomStructure make_structure(int size, std::vector<int> table, std::vector<int> alpha);

// First (x, y, z) in lexicographic order violating alpha(x)*(y*z) == (x*y)*alpha(z).
std::optional<std::array<int, 3>> hom_assoc_witness(const FiniteHomStructure& h);
bool is_hom_associative(const FiniteHomStructure& h);

struct WitnessPair {
  int a = 0;
  int b = 0;
  bool operator==(const WitnessPair&) const = default;
};

// Degeneracy witnesses, each the lexicographically least pair (a < b).
// left:  duplicated table columns  (x*a == x*b for all x)
// right: duplicated table rows     (a*x == b*x for all x)
// strong: one pair duplicated on both sides at once
struct DegeneracyReport {
  std::optional<WitnessPair> left;
  std::optional<WitnessPair> right;
  std::optional<WitnessPair> strong;
  bool two_sided = false;  // left and right both present, pairs may differ

  bool strongly_degenerate() const { return strong.has_value(); }
};

DegeneracyReport degeneracy_report(const FiniteHomStructure& h);

struct AlphaProperties {
  bool surjective = false;
  bool injective = false;
  bool bijective = false;
};

AlphaProperties alpha_properties(const FiniteHomStructure& h);

// Right inverse of alpha: alpha(beta(x)) == x for all x.
struct Section {
  std::vector<int> beta;
};

// Every section of alpha. On a finite set alpha is surjective iff bijective,
// so the result has zero or one element.
std::vector<Section> sections(const FiniteHomStructure& h);

// Builds (x, y) -> alpha(x . y) from an associative table. Rejects
// non-associative input and input violating the compatibility relation
//     alpha(alpha(x) . alpha(y . z)) == alpha(alpha(x . y) . alpha(z)),
// each with a witness triple. The result is hom-associative by construction.
FiniteHomStructure twist(int size, const std::vector<int>& assoc_table,
                         const std::vector<int>& alpha);

struct UntwistResult {
  Section beta;
  std::vector<int> induced_table;  // x . y := beta(x * y)
  bool associative = false;
};

UntwistResult untwist_via_section(const FiniteHomStructure& h, const Section& beta);

// Searches for an associative table T with alpha(T(x,y)) == x*y, i.e. a
// witness that h is the twist of an associative product along its own alpha.
// Cell (x, y) ranges over the alpha-fiber of x*y; partial assignments are
// pruned as soon as a fully determined associativity triple fails.
std::optional<std::vector<int>> is_twist(const FiniteHomStructure& h);

// Transposed table, same alpha.
FiniteHomStructure opposite(const FiniteHomStructure& h);

struct EquationCheck {
  std::string name;
  bool holds = true;
  std::vector<int> first_violation;  // quantified tuple, empty when holds
};

struct IdentityReport {
  std::vector<EquationCheck> equations;
  bool all_hold() const;
};

// The four associativity-flavored laws any hom-associative product obeys
// once a section beta of alpha is fixed, checked over all (a, b, x, y, z):
//   eq1: a*(b*(x*beta(y*z))) == a*(b*(beta(x*y)*z))
//   eq2: a*((x*beta(y*z))*b) == a*((beta(x*y)*z)*b)
//   eq3: (a*(x*beta(y*z)))*b == (a*(beta(x*y)*z))*b
//   eq4: ((x*beta(y*z))*a)*b == ((beta(x*y)*z)*a)*b
IdentityReport check_lemma1(const FiniteHomStructure& h, const Section& beta);

// Section-shift laws used by the harness, over all (x, y, z):
//   eq5: (beta(x)*y)*z == x*(y*beta(z))
//   eq6: alpha(alpha(x))*((y*z)*u) == alpha(x*y)*(alpha(z)*u)   (all (x,y,z,u))
//   eq7: x*(y*beta(alpha(z))) == (beta(x)*y)*alpha(z) == x*(y*z)
IdentityReport check_helper_identities(const FiniteHomStructure& h, const Section& beta);

}  // namespace homforge
