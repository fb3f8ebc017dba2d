#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "severi/bigint.hpp"

namespace severi {

// Finitely supported sequence of nonnegative integers. The entry at
// (1-based) index i counts contact points of order i with the fixed line.
// Stored in canonical form, with trailing zeros trimmed, so that equality
// and hashing are structural: (1,0,2) and (1,0,2,0,0) are the same value
// and the empty list is the zero sequence.
class TangencySeq {
 public:
  TangencySeq() = default;
  explicit TangencySeq(std::vector<int> entries);
  TangencySeq(std::initializer_list<int> entries);

  // e_k: the sequence with a single 1 at index k >= 1.
  static TangencySeq unit(int k);

  // Entry at 1-based index i; zero beyond the stored length.
  int at(int i) const {
    return (i >= 1 && i <= length()) ? entries_[static_cast<size_t>(i - 1)] : 0;
  }
  int length() const { return static_cast<int>(entries_.size()); }
  bool zero() const { return entries_.empty(); }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const TangencySeq&, const TangencySeq&) = default;
  // Lexicographic on the canonical entry list; used for deterministic
  // orderings, not for the componentwise partial order (see leq).
  friend auto operator<=>(const TangencySeq& a, const TangencySeq& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

// |a|: the number of contact points, i.e. the sum of the entries.
int size(const TangencySeq& a);

// Ia: the total contact order, i.e. sum of i * a_i.
int weight(const TangencySeq& a);

// I^a: the product of i^{a_i}; 1 for the zero sequence.
BigInt ipow(const TangencySeq& a);

// lcm of the support {i : a_i > 0}; 1 for the zero sequence.
long lcm_support(const TangencySeq& a);

// Componentwise partial order b <= a on every index.
bool leq(const TangencySeq& b, const TangencySeq& a);

TangencySeq add(const TangencySeq& a, const TangencySeq& b);

// Componentwise difference; throws std::invalid_argument unless b <= a.
TangencySeq sub(const TangencySeq& a, const TangencySeq& b);

BigInt factorial(long n);

// C(n, k); zero when k < 0, k > n, or n < 0.
BigInt binomial(long n, long k);

// Componentwise product of binomials C(a_i, b_i); zero unless b <= a.
BigInt binomial(const TangencySeq& a, const TangencySeq& b);

// n! / (parts_1! ... parts_k! (n - sum)!) with the remainder slot included.
// Throws std::invalid_argument when a part is negative or the sum exceeds n.
BigInt multinomial(long n, std::span<const long> parts);

// Componentwise product of multinomials; zero when the parts do not fit
// under a componentwise.
BigInt multinomial(const TangencySeq& a, std::span<const TangencySeq> parts);

// Every sequence b <= a, in ascending lexicographic order on the entry
// tuple padded to a's length (first index most significant). The count is
// the product of (a_i + 1).
std::vector<TangencySeq> enumerate_leq(const TangencySeq& a);

// Every sequence of weight n, exactly once, in descending lexicographic
// order: (n), ..., (0,...,0,1). The count is the partition number p(n).
std::vector<TangencySeq> enumerate_weight(int n);

// "1,0,2" for (1,0,2); "0" for the zero sequence.
std::string to_string(const TangencySeq& a);

// Inverse of to_string; accepts "" for the zero sequence and normalizes
// trailing zeros. Throws std::invalid_argument with a diagnostic.
TangencySeq parse_seq(std::string_view text);

}  // namespace severi
