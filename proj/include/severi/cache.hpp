#pragma once

#include <filesystem>
#include <string_view>

#include "severi/recursion.hpp"

namespace severi {

// Cache file format, line oriented text:
//   CH-MEMO 1
//   T 4 3 0 4 675
// One record per line: kind (T = total, I = irreducible), d, delta, the
// alpha and beta renderings, and the decimal degree, separated by single
// spaces. Records are sorted by (kind, d, delta, alpha, beta) with T
// before I, so equal stores always serialize to identical bytes.
inline constexpr std::string_view kCacheHeader = "CH-MEMO 1";

// Throws std::runtime_error naming the path on I/O failure.
void save(const MemoStore& memo, const std::filesystem::path& path);

// Inverse of save. Throws CacheCorruption naming the offending record on
// version mismatch, parse failure, invalid keys, or duplicates.
MemoStore load(const std::filesystem::path& path);

// Union of two stores; a conflicting value for the same (kind, key) throws
// IntegrityError.
MemoStore merge(const MemoStore& a, const MemoStore& b);

}  // namespace severi
