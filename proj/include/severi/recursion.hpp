#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "severi/bigint.hpp"
#include "severi/errors.hpp"
#include "severi/key.hpp"

namespace severi {

enum class DegreeKind { Total, Irreducible };

// Shared memo of computed degrees, keyed on canonical SeveriKeys. Per-key
// find/insert is atomic, so concurrent evaluators may share one store;
// racing inserts of the same key are benign because values are
// deterministic. Re-inserting a key with a different value throws
// IntegrityError.
class MemoStore {
 public:
  struct Record {
    DegreeKind kind;
    SeveriKey key;
    Degree value;
  };

  MemoStore();
  MemoStore(const MemoStore& other);
  MemoStore& operator=(const MemoStore& other);
  MemoStore(MemoStore&&) noexcept = default;
  MemoStore& operator=(MemoStore&&) noexcept = default;

  std::optional<Degree> find(DegreeKind kind, const SeveriKey& key) const;
  void insert(DegreeKind kind, const SeveriKey& key, const Degree& value);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::uint64_t hits() const;
  std::uint64_t misses() const;
  void reset_counters();

  // Unordered copy of all records.
  std::vector<Record> snapshot() const;

 private:
  using Map = std::unordered_map<SeveriKey, Degree, SeveriKeyHash>;

  Map& map_for(DegreeKind kind) {
    return kind == DegreeKind::Total ? total_ : irreducible_;
  }
  const Map& map_for(DegreeKind kind) const {
    return kind == DegreeKind::Total ? total_ : irreducible_;
  }

  Map total_;
  Map irreducible_;
  mutable std::uint64_t hits_ = 0;
  mutable std::uint64_t misses_ = 0;
  mutable std::unique_ptr<std::mutex> mu_;
};

enum class TermKind {
  // One unassigned contact of order k becomes assigned at the new point;
  // same degree, one branch of multiplicity k.
  AssignContact,
  // The curve degenerates to the line plus a residual curve of degree d-1.
  SplitOffLine,
};

// One child of the one-step expansion of a Severi variety against a point
// condition. The child's contribution to the parent degree is
// coefficient() = omega_choices * branch_count * branch_multiplicity.
struct RecursionTerm {
  TermKind kind = TermKind::AssignContact;
  int contact_order = 0;  // AssignContact only: the order k moved
  SeveriKey child;
  // SplitOffLine: number of admissible assigned-point subsets, C(alpha, alpha').
  BigInt omega_choices = 1;
  // Intersection multiplicity contributed per point-subset choice:
  // k for AssignContact, ipow(beta'-beta) * C(beta', beta) for SplitOffLine.
  BigInt per_choice_multiplicity = 1;
  BigInt branch_count = 1;
  long branch_multiplicity = 1;

  BigInt coefficient() const { return omega_choices * per_choice_multiplicity; }
};

// Local branch structure of the parent variety along a SplitOffLine child:
// count = C(beta', beta) * ipow(beta'-beta) / lcm_support(beta'-beta)
// branches, each meeting the point hyperplane with multiplicity
// lcm_support(beta'-beta).
struct BranchProfile {
  BigInt count;
  long multiplicity;
};

// Throws std::invalid_argument unless beta <= beta_prime componentwise.
BranchProfile branch_profile(const TangencySeq& beta,
                             const TangencySeq& beta_prime);

struct EngineOptions {
  bool use_memo = true;
  // Evaluate the top-level children concurrently. Results are identical to
  // the sequential evaluation.
  bool parallel = false;
  // Drop SplitOffLine terms whose child delta exceeds max_node_count(d-1).
  // Such children evaluate to zero anyway; this only skips the recursion.
  bool prune_split_terms = false;
  // Irreducible recursion: cap per-component delta_j at max_node_count(d_j)
  // while enumerating splittings. Components outside the cap contribute
  // zero, so this is equivalent and only smaller.
  bool prune_part_deltas = true;
};

// One step of the degeneration recursion: all AssignContact terms in
// ascending contact order, then all SplitOffLine terms ordered by child
// delta descending, alpha' descending lexicographic, beta' ascending
// lexicographic. Throws std::invalid_argument on an invalid key or d = 1.
std::vector<RecursionTerm> expand(const SeveriKey& key);

// Degree of the generalized Severi variety. Invalid keys give 0; for d = 1
// the degree is 1 when delta = 0 (a linear space of lines) and 0 otherwise.
Degree degree(const SeveriKey& key, MemoStore& memo,
              const EngineOptions& opt = {});

struct TableRow {
  int delta;
  long long genus;
  Degree value;
};

// Degrees of the classical (not necessarily irreducible) Severi varieties
// V^{d,delta}(0, d e_1) for delta = 0 .. d(d-1)/2.
std::vector<TableRow> table(int d, MemoStore& memo,
                            const EngineOptions& opt = {});

}  // namespace severi
