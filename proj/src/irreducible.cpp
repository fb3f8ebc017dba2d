#include "severi/irreducible.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <unordered_set>

// Recursion for the varieties of irreducible curves. The AssignContact
// step is unchanged; the degeneration step must instead track how the
// residual degree-(d-1) curve splits into irreducible components, because
// only splittings whose nodal reduction stays connected arise as limits of
// irreducible curves. That is what forces |gamma_j| > 0 on every component:
// each must pick up at least one new contact with the line. The image of
// the product of the component varieties is a Segre embedding, whose degree
// contributes the multinomial factor; sigma corrects for identical
// components being unordered.

namespace severi {

BigInt sigma(const ComponentMultiset& ms) {
  BigInt result = 1;
  size_t i = 0;
  while (i < ms.size()) {
    size_t j = i;
    while (j < ms.size() && ms[j] == ms[i]) ++j;
    result *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return result;
}

namespace {

// Partitions of n into nondecreasing positive parts.
void gen_partitions(int n, int min_part, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = min_part; part <= n; ++part) {
    prefix.push_back(part);
    gen_partitions(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

struct SplitEnumerator {
  const SeveriKey& key;
  bool prune_part_deltas;
  std::vector<ComponentMultiset>& out;

  std::vector<int> parts{};
  // Required value of sum over parts of (delta_j - |gamma_j|), fixed by the
  // node-balance constraint once the part degrees are chosen.
  long long target = 0;
  // Conservative per-part bounds on delta_j - |gamma_j|, as suffix sums,
  // used to cut dead branches.
  std::vector<long long> suffix_min{};
  std::vector<long long> suffix_max{};
  ComponentMultiset chosen{};

  long long delta_cap(int dj) const {
    long long cap = prune_part_deltas ? max_node_count(dj)
                                      : target + (key.d - 1);
    return std::max(cap, -1LL);
  }

  void run_partition(std::vector<int> partition) {
    parts = std::move(partition);
    long long cross = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
      for (size_t j = i + 1; j < parts.size(); ++j) {
        cross += static_cast<long long>(parts[i]) * parts[j];
      }
    }
    target = key.delta - cross - key.d + 1;

    const size_t k = parts.size();
    suffix_min.assign(k + 1, 0);
    suffix_max.assign(k + 1, 0);
    for (size_t i = k; i-- > 0;) {
      suffix_min[i] = suffix_min[i + 1] - parts[i];           // delta = 0, |gamma| <= d_j
      suffix_max[i] = suffix_max[i + 1] + delta_cap(parts[i]) - 1;  // |gamma| >= 1
    }
    if (target < suffix_min[0] || target > suffix_max[0]) return;

    chosen.clear();
    descend(0, key.alpha, key.beta, target);
  }

  void descend(size_t index, const TangencySeq& alpha_rem, const TangencySeq& beta_rem,
               long long remaining) {
    if (index == parts.size()) {
      if (beta_rem.zero() && remaining == 0) out.push_back(chosen);
      return;
    }
    const int dj = parts[index];
    for (int a = 0; a + 1 <= dj; ++a) {
      for (const TangencySeq& alpha_j : enumerate_weight(a)) {
        if (!leq(alpha_j, alpha_rem)) continue;
        for (int b = 0; a + b + 1 <= dj; ++b) {
          for (const TangencySeq& beta_j : enumerate_weight(b)) {
            if (!leq(beta_j, beta_rem)) continue;
            const int c = dj - a - b;
            for (const TangencySeq& gamma_j : enumerate_weight(c)) {
              const int gamma_size = size(gamma_j);
              const long long cap = delta_cap(dj);
              for (long long delta_j = 0; delta_j <= cap; ++delta_j) {
                ComponentTuple t{dj, static_cast<int>(delta_j), alpha_j, beta_j,
                                 gamma_j};
                if (index > 0 && parts[index - 1] == dj && t < chosen.back()) {
                  continue;  // keep the multiset canonical, exactly once each
                }
                long long after = remaining - (delta_j - gamma_size);
                if (after < suffix_min[index + 1] || after > suffix_max[index + 1]) {
                  continue;
                }
                chosen.push_back(std::move(t));
                descend(index + 1, sub(alpha_rem, alpha_j), sub(beta_rem, beta_j),
                        after);
                chosen.pop_back();
              }
            }
          }
        }
      }
    }
  }
};

}  // namespace

std::vector<ComponentMultiset> enumerate_splittings(const SeveriKey& key,
                                                    bool prune_part_deltas) {
  if (!validate(key)) {
    throw std::invalid_argument("enumerate_splittings: invalid key " +
                                render_compact(key) + ": " + validation_error(key));
  }
  std::vector<ComponentMultiset> out;
  if (key.d == 1) return out;

  std::vector<std::vector<int>> partitions;
  std::vector<int> prefix;
  gen_partitions(key.d - 1, 1, prefix, partitions);

  SplitEnumerator en{key, prune_part_deltas, out};
  for (auto& partition : partitions) {
    en.run_partition(std::move(partition));
  }
  return out;
}

namespace {

Degree irr_degree_impl(const SeveriKey& key, MemoStore& memo,
                       const EngineOptions& opt) {
  if (!validate(key)) return 0;
  if (key.d == 1) return key.delta == 0 ? Degree(1) : Degree(0);
  if (opt.use_memo) {
    if (auto hit = memo.find(DegreeKind::Irreducible, key)) return *hit;
  }

  EngineOptions child_opt = opt;
  child_opt.parallel = false;

  Degree total = 0;
  for (int k = 1; k <= key.beta.length(); ++k) {
    if (key.beta.at(k) == 0) continue;
    SeveriKey child{key.d, key.delta, add(key.alpha, TangencySeq::unit(k)),
                    sub(key.beta, TangencySeq::unit(k))};
    total += BigInt(k) * irr_degree_impl(child, memo, child_opt);
  }

  const long long n = 2LL * key.d + genus(key.d, key.delta) - 2 + size(key.beta);
  std::vector<long> slots;
  std::vector<TangencySeq> alphas;
  for (const ComponentMultiset& ms : enumerate_splittings(key, opt.prune_part_deltas)) {
    Degree child_product = 1;
    for (const ComponentTuple& t : ms) {
      child_product *= irr_degree_impl(t.child_key(), memo, child_opt);
      if (child_product == 0) break;
    }
    if (child_product == 0) continue;

    slots.clear();
    alphas.clear();
    BigInt factor = 1;
    for (const ComponentTuple& t : ms) {
      // dimension of the component variety; the slots always fill n exactly
      slots.push_back(static_cast<long>(2LL * t.d + genus(t.d, t.delta) - 1 +
                                        size(t.beta) + size(t.gamma)));
      alphas.push_back(t.alpha);
      factor *= binomial(add(t.beta, t.gamma), t.beta) * ipow(t.gamma);
    }
    BigInt term = multinomial(n, slots) * multinomial(key.alpha, alphas) * factor *
                  child_product;
    BigInt sym = sigma(ms);
    if (!divisible(term, sym)) {
      throw IntegrityError("irreducible recursion: term for key " +
                           render_compact(key) + " is not divisible by sigma = " +
                           to_decimal(sym));
    }
    total += term / sym;
  }

  if (opt.use_memo) memo.insert(DegreeKind::Irreducible, key, total);
  return total;
}

}  // namespace

Degree irr_degree(const SeveriKey& key, MemoStore& memo, const EngineOptions& opt) {
  if (!opt.parallel || !validate(key) || key.d == 1) {
    return irr_degree_impl(key, memo, opt);
  }
  // Warm the memo for the child keys concurrently, then assemble
  // sequentially; the result is identical either way.
  std::vector<SeveriKey> children;
  std::unordered_set<SeveriKey, SeveriKeyHash> seen;
  for (int k = 1; k <= key.beta.length(); ++k) {
    if (key.beta.at(k) == 0) continue;
    SeveriKey child{key.d, key.delta, add(key.alpha, TangencySeq::unit(k)),
                    sub(key.beta, TangencySeq::unit(k))};
    if (seen.insert(child).second) children.push_back(child);
  }
  for (const ComponentMultiset& ms : enumerate_splittings(key, opt.prune_part_deltas)) {
    for (const ComponentTuple& t : ms) {
      SeveriKey child = t.child_key();
      if (seen.insert(child).second) children.push_back(child);
    }
  }
  EngineOptions child_opt = opt;
  child_opt.parallel = false;
  std::vector<std::future<void>> futures;
  futures.reserve(children.size());
  for (const SeveriKey& child : children) {
    futures.push_back(std::async(std::launch::async, [&child, &memo, &child_opt] {
      irr_degree_impl(child, memo, child_opt);
    }));
  }
  for (auto& f : futures) f.get();
  return irr_degree_impl(key, memo, child_opt);
}

Degree kontsevich_genus0(int d) {
  if (d < 1) throw std::invalid_argument("kontsevich_genus0: d must be positive");
  std::vector<Degree> counts(static_cast<size_t>(d) + 1);
  counts[1] = 1;
  for (int m = 2; m <= d; ++m) {
    Degree total = 0;
    for (int d1 = 1; d1 < m; ++d1) {
      const int d2 = m - d1;
      BigInt bracket = BigInt(d2) * binomial(3 * m - 4, 3 * d1 - 2) -
                       BigInt(d1) * binomial(3 * m - 4, 3 * d1 - 1);
      total += counts[static_cast<size_t>(d1)] * counts[static_cast<size_t>(d2)] *
               BigInt(d1) * d1 * d2 * bracket;
    }
    counts[static_cast<size_t>(m)] = total;
  }
  return counts[static_cast<size_t>(d)];
}

}  // namespace severi
