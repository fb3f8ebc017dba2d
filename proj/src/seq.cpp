#include "severi/seq.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace severi {

namespace {

void trim_trailing_zeros(std::vector<int>& entries) {
  while (!entries.empty() && entries.back() == 0) entries.pop_back();
}

}  // namespace

TangencySeq::TangencySeq(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("tangency sequence entries must be nonnegative");
  }
  trim_trailing_zeros(entries_);
}

TangencySeq::TangencySeq(std::initializer_list<int> entries)
    : TangencySeq(std::vector<int>(entries)) {}

TangencySeq TangencySeq::unit(int k) {
  if (k < 1) throw std::invalid_argument("unit(k) requires k >= 1");
  std::vector<int> entries(static_cast<size_t>(k), 0);
  entries.back() = 1;
  return TangencySeq(std::move(entries));
}

int size(const TangencySeq& a) {
  const auto& e = a.entries();
  return std::accumulate(e.begin(), e.end(), 0);
}

int weight(const TangencySeq& a) {
  int w = 0;
  for (int i = 1; i <= a.length(); ++i) w += i * a.at(i);
  return w;
}

BigInt ipow(const TangencySeq& a) {
  BigInt result = 1;
  BigInt power;
  for (int i = 2; i <= a.length(); ++i) {
    if (a.at(i) == 0) continue;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(i),
                  static_cast<unsigned long>(a.at(i)));
    result *= power;
  }
  return result;
}

long lcm_support(const TangencySeq& a) {
  long result = 1;
  for (int i = 1; i <= a.length(); ++i) {
    if (a.at(i) > 0) result = std::lcm(result, static_cast<long>(i));
  }
  return result;
}

bool leq(const TangencySeq& b, const TangencySeq& a) {
  for (int i = 1; i <= std::max(a.length(), b.length()); ++i) {
    if (b.at(i) > a.at(i)) return false;
  }
  return true;
}

TangencySeq add(const TangencySeq& a, const TangencySeq& b) {
  std::vector<int> entries(static_cast<size_t>(std::max(a.length(), b.length())));
  for (int i = 1; i <= static_cast<int>(entries.size()); ++i) {
    entries[static_cast<size_t>(i - 1)] = a.at(i) + b.at(i);
  }
  return TangencySeq(std::move(entries));
}

TangencySeq sub(const TangencySeq& a, const TangencySeq& b) {
  if (!leq(b, a)) {
    throw std::invalid_argument("sub: " + to_string(b) + " is not <= " + to_string(a));
  }
  std::vector<int> entries(static_cast<size_t>(a.length()));
  for (int i = 1; i <= a.length(); ++i) {
    entries[static_cast<size_t>(i - 1)] = a.at(i) - b.at(i);
  }
  return TangencySeq(std::move(entries));
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  static std::mutex mu;
  static std::vector<BigInt> table{1};  // table[k] = k!
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(table.size()) <= n) {
    table.push_back(table.back() * static_cast<long>(table.size()));
  }
  return table[static_cast<size_t>(n)];
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInt binomial(const TangencySeq& a, const TangencySeq& b) {
  BigInt result = 1;
  for (int i = 1; i <= std::max(a.length(), b.length()); ++i) {
    if (b.at(i) > a.at(i)) return 0;
    if (b.at(i) == 0) continue;
    result *= binomial(a.at(i), b.at(i));
  }
  return result;
}

BigInt multinomial(long n, std::span<const long> parts) {
  if (n < 0) throw std::invalid_argument("multinomial: n must be nonnegative");
  long total = 0;
  for (long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: parts must be nonnegative");
    total += p;
  }
  if (total > n) {
    throw std::invalid_argument("multinomial: parts sum to " + std::to_string(total) +
                                " which exceeds n = " + std::to_string(n));
  }
  BigInt result = factorial(n);
  for (long p : parts) result /= factorial(p);
  result /= factorial(n - total);
  return result;
}

BigInt multinomial(const TangencySeq& a, std::span<const TangencySeq> parts) {
  int len = a.length();
  for (const auto& p : parts) len = std::max(len, p.length());
  BigInt result = 1;
  std::vector<long> slice(parts.size());
  for (int i = 1; i <= len; ++i) {
    long total = 0;
    for (size_t j = 0; j < parts.size(); ++j) {
      slice[j] = parts[j].at(i);
      total += slice[j];
    }
    if (total > a.at(i)) return 0;
    result *= multinomial(a.at(i), slice);
  }
  return result;
}

std::vector<TangencySeq> enumerate_leq(const TangencySeq& a) {
  std::vector<TangencySeq> out;
  std::vector<int> current(static_cast<size_t>(a.length()), 0);
  for (;;) {
    out.emplace_back(current);
    // odometer increment, last index fastest
    int i = a.length() - 1;
    while (i >= 0) {
      if (current[static_cast<size_t>(i)] < a.at(i + 1)) {
        ++current[static_cast<size_t>(i)];
        break;
      }
      current[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

namespace {

void gen_weight(int index, int remaining, std::vector<int>& prefix,
                std::vector<TangencySeq>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (index > remaining) return;
  for (int count = remaining / index; count >= 0; --count) {
    prefix.push_back(count);
    gen_weight(index + 1, remaining - count * index, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<TangencySeq> enumerate_weight(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_weight: n must be nonnegative");
  std::vector<TangencySeq> out;
  std::vector<int> prefix;
  gen_weight(1, n, prefix, out);
  return out;
}

std::string to_string(const TangencySeq& a) {
  if (a.zero()) return "0";
  std::string out;
  for (int i = 1; i <= a.length(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(a.at(i));
  }
  return out;
}

TangencySeq parse_seq(std::string_view text) {
  if (text.empty()) return TangencySeq{};
  std::vector<int> entries;
  size_t pos = 0;
  for (;;) {
    size_t comma = text.find(',', pos);
    std::string_view token = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (token.empty()) {
      throw std::invalid_argument("invalid sequence '" + std::string(text) +
                                  "': empty entry");
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
      throw std::invalid_argument("invalid sequence '" + std::string(text) +
                                  "': entry '" + std::string(token) +
                                  "' is not a nonnegative integer");
    }
    if (value > 1000000) {
      throw std::invalid_argument("invalid sequence '" + std::string(text) +
                                  "': entry '" + std::string(token) + "' is too large");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return TangencySeq(std::move(entries));
}

}  // namespace severi
