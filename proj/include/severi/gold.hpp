#pragma once

#include <iosfwd>
#include <span>

#include "severi/irreducible.hpp"

namespace severi {

// A reference value the engine must reproduce exactly.
struct GoldCase {
  DegreeKind kind;
  SeveriKey key;
  const char* value;
};

// Every embedded reference value: the cubic degrees, the quartic chain,
// the full d = 5 and d = 6 tables, and the irreducible quartic count.
std::span<const GoldCase> gold_cases();

// Recompute every gold case plus the reducible-remainder identity
// N(4,3,0,4) - N_irr(4,3,0,4) = 55, printing one line per check.
// Returns true iff everything matched.
bool run_verify(MemoStore& memo, std::ostream& out,
                const EngineOptions& opt = {});

}  // namespace severi
