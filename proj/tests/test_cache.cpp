#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "severi/cache.hpp"
#include "severi/irreducible.hpp"

using namespace severi;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& tag) {
    path = fs::temp_directory_path() /
           ("severi-test-" + tag + "-" + std::to_string(::getpid()) + ".memo");
    fs::remove(path);
  }
  ~TempFile() { fs::remove(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

bool same_contents(const MemoStore& a, const MemoStore& b) {
  auto sa = a.snapshot();
  auto sb = b.snapshot();
  if (sa.size() != sb.size()) return false;
  for (const auto& r : sa) {
    auto found = b.find(r.kind, r.key);
    if (!found || *found != r.value) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("save emits the exact documented bytes") {
  TempFile tmp("bytes");
  MemoStore memo;
  save(memo, tmp.path);
  CHECK(slurp(tmp.path) == "CH-MEMO 1\n");

  memo.insert(DegreeKind::Total, SeveriKey{1, 0, {1}, {}}, Degree(1));
  save(memo, tmp.path);
  CHECK(slurp(tmp.path) == "CH-MEMO 1\nT 1 0 1 0 1\n");

  memo.insert(DegreeKind::Total, SeveriKey{4, 3, {}, {4}}, Degree(675));
  memo.insert(DegreeKind::Irreducible, SeveriKey{4, 3, {}, {4}}, Degree(620));
  save(memo, tmp.path);
  CHECK(slurp(tmp.path) ==
        "CH-MEMO 1\n"
        "T 1 0 1 0 1\n"
        "T 4 3 0 4 675\n"
        "I 4 3 0 4 620\n");
}

TEST_CASE("round trip inverts save") {
  TempFile tmp("roundtrip");
  MemoStore memo;
  degree(SeveriKey{4, 3, {}, {4}}, memo);
  irr_degree(SeveriKey{4, 3, {}, {4}}, memo);
  table(4, memo);
  save(memo, tmp.path);
  MemoStore loaded = load(tmp.path);
  CHECK(same_contents(memo, loaded));

  // serialization is insensitive to insertion order
  TempFile tmp2("roundtrip2");
  MemoStore reordered;
  auto records = memo.snapshot();
  std::mt19937 rng(7);
  std::shuffle(records.begin(), records.end(), rng);
  for (const auto& r : records) reordered.insert(r.kind, r.key, r.value);
  save(reordered, tmp2.path);
  CHECK(slurp(tmp.path) == slurp(tmp2.path));
}

TEST_CASE("round trip at bulk scale") {
  TempFile tmp("bulk");
  MemoStore memo;
  long long count = 0;
  for (int d = 1; d <= 14 && count < 100000; ++d) {
    for (int a = 0; a <= d && count < 100000; ++a) {
      for (const TangencySeq& alpha : enumerate_weight(a)) {
        for (const TangencySeq& beta : enumerate_weight(d - a)) {
          for (int delta = 0; delta <= max_node_count(d); ++delta) {
            memo.insert(DegreeKind::Total, SeveriKey{d, delta, alpha, beta},
                        Degree(static_cast<long>(count)));
            if (++count >= 100000) break;
          }
          if (count >= 100000) break;
        }
        if (count >= 100000) break;
      }
    }
  }
  CHECK(memo.size() == 100000);
  save(memo, tmp.path);
  MemoStore loaded = load(tmp.path);
  CHECK(loaded.size() == 100000);
  CHECK(same_contents(memo, loaded));
}

TEST_CASE("load rejects malformed files") {
  TempFile tmp("corrupt");

  CHECK_THROWS_AS(load(tmp.path), CacheCorruption);  // missing file

  spit(tmp.path, "");
  CHECK_THROWS_AS(load(tmp.path), CacheCorruption);

  spit(tmp.path, "CH-MEMO 2\n");
  CHECK_THROWS_AS(load(tmp.path), CacheCorruption);

  spit(tmp.path, "CH-MEMO 1\nT 4 3 0 4\n");  // missing value field
  CHECK_THROWS_AS(load(tmp.path), CacheCorruption);

  spit(tmp.path, "CH-MEMO 1\nX 4 3 0 4 675\n");  // bad kind
  CHECK_THROWS_AS(load(tmp.path), CacheCorruption);

  spit(tmp.path, "CH-MEMO 1\nT 4 -3 0 4 675\n");  // negative delta
  CHECK_THROWS_AS(load(tmp.path), CacheCorruption);

  spit(tmp.path, "CH-MEMO 1\nT 4 3 1 4 675\n");  // invalid key
  CHECK_THROWS_AS(load(tmp.path), CacheCorruption);

  spit(tmp.path, "CH-MEMO 1\nT 4 3 0 4 67x\n");  // bad value
  CHECK_THROWS_AS(load(tmp.path), CacheCorruption);

  spit(tmp.path, "CH-MEMO 1\nT 4 3 0 4 675\nT 4 3 0 4 675\n");  // duplicate
  CHECK_THROWS_AS(load(tmp.path), CacheCorruption);

  spit(tmp.path, "CH-MEMO 1\nT 4 3 0 4 675\nT 4 3 0 4 676\n");  // conflict
  try {
    load(tmp.path);
    FAIL("expected CacheCorruption");
  } catch (const CacheCorruption& e) {
    CHECK(std::string(e.what()).find("conflicting") != std::string::npos);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("merge unions stores and rejects conflicts") {
  MemoStore a, b;
  a.insert(DegreeKind::Total, SeveriKey{4, 3, {}, {4}}, Degree(675));
  b.insert(DegreeKind::Total, SeveriKey{3, 1, {}, {3}}, Degree(12));
  b.insert(DegreeKind::Total, SeveriKey{4, 3, {}, {4}}, Degree(675));

  MemoStore ab = merge(a, b);
  CHECK(ab.size() == 2);
  CHECK(*ab.find(DegreeKind::Total, SeveriKey{3, 1, {}, {3}}) == 12);

  MemoStore empty;
  CHECK(same_contents(merge(a, empty), a));
  CHECK(same_contents(merge(empty, a), a));

  MemoStore c;
  c.insert(DegreeKind::Total, SeveriKey{4, 3, {}, {4}}, Degree(676));
  CHECK_THROWS_AS(merge(a, c), IntegrityError);
}

TEST_CASE("a warm cache changes no computed value") {
  TempFile tmp("warm");
  MemoStore cold;
  auto cold_rows = table(6, cold);
  save(cold, tmp.path);

  MemoStore warm = load(tmp.path);
  auto warm_rows = table(6, warm);
  REQUIRE(cold_rows.size() == warm_rows.size());
  for (size_t i = 0; i < cold_rows.size(); ++i) {
    CHECK(cold_rows[i].value == warm_rows[i].value);
  }
  CHECK(warm.misses() == 0);
}
