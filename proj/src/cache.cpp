#include "severi/cache.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace severi {

namespace {

char kind_char(DegreeKind kind) {
  return kind == DegreeKind::Total ? 'T' : 'I';
}

bool record_less(const MemoStore::Record& a, const MemoStore::Record& b) {
  if (a.kind != b.kind) return a.kind == DegreeKind::Total;
  return a.key < b.key;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void corrupt(const std::filesystem::path& path, size_t lineno,
                          const std::string& line, const std::string& reason) {
  throw CacheCorruption("corrupt cache " + path.string() + " at line " +
                        std::to_string(lineno) + " ('" + line + "'): " + reason);
}

}  // namespace

void save(const MemoStore& memo, const std::filesystem::path& path) {
  std::vector<MemoStore::Record> records = memo.snapshot();
  std::sort(records.begin(), records.end(), record_less);

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open cache file for writing: " + path.string());
  }
  out << kCacheHeader << '\n';
  for (const auto& r : records) {
    out << kind_char(r.kind) << ' ' << r.key.d << ' ' << r.key.delta << ' '
        << to_string(r.key.alpha) << ' ' << to_string(r.key.beta) << ' '
        << to_decimal(r.value) << '\n';
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("write failure on cache file: " + path.string());
  }
}

MemoStore load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CacheCorruption("cannot open cache file: " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw CacheCorruption("cache file " + path.string() + " is empty, expected header '" +
                          std::string(kCacheHeader) + "'");
  }
  if (line != kCacheHeader) {
    throw CacheCorruption("cache file " + path.string() + " has unsupported header '" +
                          line + "', expected '" + std::string(kCacheHeader) + "'");
  }

  MemoStore memo;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> fields;
    std::istringstream split(line);
    std::string field;
    while (std::getline(split, field, ' ')) fields.push_back(field);
    if (fields.size() != 6) {
      corrupt(path, lineno, line, "expected 6 space-separated fields, found " +
                                      std::to_string(fields.size()));
    }

    DegreeKind kind;
    if (fields[0] == "T") {
      kind = DegreeKind::Total;
    } else if (fields[0] == "I") {
      kind = DegreeKind::Irreducible;
    } else {
      corrupt(path, lineno, line, "kind must be T or I");
    }

    SeveriKey key;
    try {
      if (!all_digits(fields[1]) || !all_digits(fields[2])) {
        corrupt(path, lineno, line, "d and delta must be nonnegative integers");
      }
      key.d = std::stoi(fields[1]);
      key.delta = std::stoi(fields[2]);
      key.alpha = parse_seq(fields[3]);
      key.beta = parse_seq(fields[4]);
    } catch (const CacheCorruption&) {
      throw;
    } catch (const std::exception& e) {
      corrupt(path, lineno, line, e.what());
    }
    if (!validate(key)) {
      corrupt(path, lineno, line, "invalid key: " + validation_error(key));
    }
    if (!all_digits(fields[5])) {
      corrupt(path, lineno, line, "value must be a nonnegative decimal integer");
    }
    Degree value(fields[5]);

    if (auto existing = memo.find(kind, key)) {
      corrupt(path, lineno, line,
              *existing == value ? "duplicate record for key " + render_compact(key)
                                 : "conflicting duplicate for key " +
                                       render_compact(key) + ": already loaded " +
                                       to_decimal(*existing));
    }
    memo.insert(kind, key, value);
  }
  memo.reset_counters();
  return memo;
}

MemoStore merge(const MemoStore& a, const MemoStore& b) {
  MemoStore out(a);
  for (const auto& r : b.snapshot()) {
    if (auto existing = out.find(r.kind, r.key)) {
      if (*existing != r.value) {
        throw IntegrityError("merge conflict for key " + render_compact(r.key) +
                             " (" + (r.kind == DegreeKind::Total ? "total" : "irreducible") +
                             "): " + to_decimal(*existing) + " vs " + to_decimal(r.value));
      }
      continue;
    }
    out.insert(r.kind, r.key, r.value);
  }
  out.reset_counters();
  return out;
}

}  // namespace severi
