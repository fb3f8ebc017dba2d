#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "severi/seq.hpp"

namespace severi {

// Index of a generalized Severi variety: plane curves of degree d with
// delta nodes, alpha_k assigned and beta_k unassigned contact points of
// order k with a fixed line. Valid keys satisfy I(alpha) + I(beta) = d and
// 0 <= delta <= d(d-1)/2.
struct SeveriKey {
  int d = 0;
  int delta = 0;
  TangencySeq alpha;
  TangencySeq beta;

  friend bool operator==(const SeveriKey&, const SeveriKey&) = default;
  // (d, delta, alpha, beta) lexicographic; the order used by cache files.
  friend auto operator<=>(const SeveriKey&, const SeveriKey&) = default;
};

// Maximum node count of a reduced degree-d curve, d(d-1)/2.
long long max_node_count(int d);

// Geometric genus bookkeeping (d-1)(d-2)/2 - delta; negative for curves
// with more nodes than an irreducible curve can carry.
long long genus(int d, int delta);

bool validate(const SeveriKey& key);

// Dimension of the variety: 2d + g - 1 + |beta|. Throws
// std::invalid_argument on an invalid key.
long long dimension(const SeveriKey& key);

// Empty string when valid, otherwise a message naming the violated
// constraint. validate(key) is equivalent to validation_error(key).empty().
std::string validation_error(const SeveriKey& key);

// "(4,3,0,4)" with length-1 sequences unparenthesized and multi-entry
// sequences as "(1,1)".
std::string render_compact(const SeveriKey& key);

struct SeveriKeyHash {
  std::size_t operator()(const SeveriKey& key) const;
};

}  // namespace severi
