#pragma once

// Test-only oracles, kept independent of the code paths they check.

#include <algorithm>
#include <set>
#include <vector>

#include "severi/irreducible.hpp"

namespace severi::testing {

// Partition counts p(0..n) by the textbook coin-change recurrence, nothing
// shared with enumerate_weight.
inline std::vector<long long> partition_counts(int n) {
  std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int w = part; w <= n; ++w) {
      p[static_cast<size_t>(w)] += p[static_cast<size_t>(w - part)];
    }
  }
  return p;
}

// Every valid key with the given degree, exhaustively.
inline std::vector<SeveriKey> all_valid_keys(int d) {
  std::vector<SeveriKey> keys;
  for (int a = 0; a <= d; ++a) {
    for (const TangencySeq& alpha : enumerate_weight(a)) {
      for (const TangencySeq& beta : enumerate_weight(d - a)) {
        for (int delta = 0; delta <= max_node_count(d); ++delta) {
          keys.push_back(SeveriKey{d, delta, alpha, beta});
        }
      }
    }
  }
  return keys;
}

// Brute-force splitting generator: ordered compositions, unbounded scans of
// every admissible component tuple, canonicalize, deduplicate. Slow, only
// for small d.
inline std::set<ComponentMultiset> brute_splittings(const SeveriKey& key) {
  std::set<ComponentMultiset> result;
  const int m = key.d - 1;

  std::vector<std::vector<int>> compositions;
  std::vector<int> prefix;
  auto gen_comp = [&](auto&& self, int left) -> void {
    if (left == 0) {
      if (!prefix.empty()) compositions.push_back(prefix);
      return;
    }
    for (int part = 1; part <= left; ++part) {
      prefix.push_back(part);
      self(self, left - part);
      prefix.pop_back();
    }
  };
  gen_comp(gen_comp, m);

  for (const auto& comp : compositions) {
    long long cross = 0;
    for (size_t i = 0; i < comp.size(); ++i) {
      for (size_t j = i + 1; j < comp.size(); ++j) {
        cross += static_cast<long long>(comp[i]) * comp[j];
      }
    }

    std::vector<std::vector<ComponentTuple>> per_part(comp.size());
    for (size_t j = 0; j < comp.size(); ++j) {
      const int dj = comp[j];
      for (int a = 0; a <= dj; ++a) {
        for (const TangencySeq& alpha : enumerate_weight(a)) {
          for (int b = 0; a + b <= dj; ++b) {
            for (const TangencySeq& beta : enumerate_weight(b)) {
              const int c = dj - a - b;
              if (c < 1) continue;
              for (const TangencySeq& gamma : enumerate_weight(c)) {
                for (int delta = 0; delta <= max_node_count(dj); ++delta) {
                  per_part[j].push_back(ComponentTuple{dj, delta, alpha, beta, gamma});
                }
              }
            }
          }
        }
      }
    }

    bool any_empty = false;
    for (const auto& options : per_part) any_empty = any_empty || options.empty();
    if (any_empty) continue;

    std::vector<size_t> pick(comp.size(), 0);
    for (;;) {
      ComponentMultiset ms;
      for (size_t j = 0; j < comp.size(); ++j) ms.push_back(per_part[j][pick[j]]);

      TangencySeq alpha_sum, beta_sum;
      long long delta_sum = 0, gamma_sizes = 0;
      for (const auto& t : ms) {
        alpha_sum = add(alpha_sum, t.alpha);
        beta_sum = add(beta_sum, t.beta);
        delta_sum += t.delta;
        gamma_sizes += size(t.gamma);
      }
      if (leq(alpha_sum, key.alpha) && beta_sum == key.beta &&
          delta_sum == key.delta + gamma_sizes - cross - key.d + 1) {
        std::sort(ms.begin(), ms.end());
        result.insert(ms);
      }

      size_t j = comp.size();
      bool carried_out = true;
      while (j-- > 0) {
        if (++pick[j] < per_part[j].size()) {
          carried_out = false;
          break;
        }
        pick[j] = 0;
      }
      if (carried_out) break;
    }
  }
  return result;
}

}  // namespace severi::testing
