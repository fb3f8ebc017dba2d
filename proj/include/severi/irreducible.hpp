#pragma once

#include <compare>
#include <vector>

#include "severi/recursion.hpp"

namespace severi {

// One irreducible component of a degeneration: a curve of degree dj with
// deltaj nodes, alphaj assigned and betaj surviving unassigned contacts,
// plus gammaj new contacts absorbed into the line (|gammaj| > 0). Its
// degree enters through the key (dj, deltaj, alphaj, betaj + gammaj).
struct ComponentTuple {
  int d = 0;
  int delta = 0;
  TangencySeq alpha;
  TangencySeq beta;
  TangencySeq gamma;

  SeveriKey child_key() const {
    return SeveriKey{d, delta, alpha, add(beta, gamma)};
  }

  friend bool operator==(const ComponentTuple&, const ComponentTuple&) = default;
  friend auto operator<=>(const ComponentTuple&, const ComponentTuple&) = default;
};

// Canonical splitting: tuples sorted nondecreasing, so multiset equality is
// list equality.
using ComponentMultiset = std::vector<ComponentTuple>;

// Symmetry factor: the product of the factorials of the multiplicities of
// repeated tuples. 1 when all components are distinct.
BigInt sigma(const ComponentMultiset& ms);

// All canonical splittings of the degree-(d-1) residual curve into
// irreducible components, each exactly once:
//   sum dj = d-1, sum betaj = beta, sum alphaj <= alpha, |gammaj| > 0,
//   sum deltaj = delta + sum |gammaj| - sum_{i<j} di dj - d + 1.
// Empty for d = 1; throws std::invalid_argument on an invalid key.
std::vector<ComponentMultiset> enumerate_splittings(
    const SeveriKey& key, bool prune_part_deltas = true);

// Degree of the union of components of the Severi variety whose general
// member is irreducible. Same base case and invalid-key convention as
// degree(). An inexact division by the symmetry factor throws
// IntegrityError: it would mean the splitting enumeration is wrong.
Degree irr_degree(const SeveriKey& key, MemoStore& memo,
                  const EngineOptions& opt = {});

// Independent oracle: the number of irreducible rational plane curves of
// degree d through 3d-1 general points, from Kontsevich's recursion seeded
// only with N(1) = 1.
Degree kontsevich_genus0(int d);

}  // namespace severi
