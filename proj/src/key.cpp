#include "severi/key.hpp"

#include <stdexcept>

namespace severi {

long long max_node_count(int d) {
  return static_cast<long long>(d) * (d - 1) / 2;
}

long long genus(int d, int delta) {
  return static_cast<long long>(d - 1) * (d - 2) / 2 - delta;
}

std::string validation_error(const SeveriKey& key) {
  if (key.d < 1) return "degree d must be positive, got " + std::to_string(key.d);
  if (key.delta < 0) return "delta must be nonnegative, got " + std::to_string(key.delta);
  if (key.delta > max_node_count(key.d)) {
    return "delta = " + std::to_string(key.delta) + " exceeds d(d-1)/2 = " +
           std::to_string(max_node_count(key.d)) + " for d = " + std::to_string(key.d);
  }
  int w = weight(key.alpha) + weight(key.beta);
  if (w != key.d) {
    return "I(alpha) + I(beta) = " + std::to_string(w) + " but must equal d = " +
           std::to_string(key.d);
  }
  return {};
}

bool validate(const SeveriKey& key) {
  return key.d >= 1 && key.delta >= 0 && key.delta <= max_node_count(key.d) &&
         weight(key.alpha) + weight(key.beta) == key.d;
}

long long dimension(const SeveriKey& key) {
  if (!validate(key)) {
    throw std::invalid_argument("dimension: invalid key " + render_compact(key) +
                                ": " + validation_error(key));
  }
  return 2LL * key.d + genus(key.d, key.delta) - 1 + size(key.beta);
}

namespace {

std::string compact_seq(const TangencySeq& a) {
  if (a.zero()) return "0";
  if (a.length() == 1) return std::to_string(a.at(1));
  return "(" + to_string(a) + ")";
}

}  // namespace

std::string render_compact(const SeveriKey& key) {
  return "(" + std::to_string(key.d) + "," + std::to_string(key.delta) + "," +
         compact_seq(key.alpha) + "," + compact_seq(key.beta) + ")";
}

std::size_t SeveriKeyHash::operator()(const SeveriKey& key) const {
  // FNV-1a over the canonical representation
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (b * 8)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(key.d));
  mix(static_cast<std::uint64_t>(key.delta));
  mix(0x5eedULL);
  for (int e : key.alpha.entries()) mix(static_cast<std::uint64_t>(e));
  mix(0xfeedULL);
  for (int e : key.beta.entries()) mix(static_cast<std::uint64_t>(e));
  return static_cast<std::size_t>(h);
}

}  // namespace severi
