#include "severi/recursion.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <stdexcept>

// Degree recursion for generalized Severi varieties. Cutting the variety
// with the hyperplane of curves through a general point of the line L
// decomposes it into varieties of dimension one less, of two shapes: the
// same curves with one unassigned contact pinned at the new point
// (AssignContact), and curves that degenerate to L plus a residual curve
// of degree d-1 (SplitOffLine). Adding up the children with their
// intersection multiplicities gives the degree, with the d = 1 pencils as
// the base of the induction.

namespace severi {

MemoStore::MemoStore() : mu_(std::make_unique<std::mutex>()) {}

MemoStore::MemoStore(const MemoStore& other) : mu_(std::make_unique<std::mutex>()) {
  std::lock_guard<std::mutex> lock(*other.mu_);
  total_ = other.total_;
  irreducible_ = other.irreducible_;
}

MemoStore& MemoStore::operator=(const MemoStore& other) {
  if (this == &other) return *this;
  MemoStore copy(other);
  total_ = std::move(copy.total_);
  irreducible_ = std::move(copy.irreducible_);
  hits_ = 0;
  misses_ = 0;
  return *this;
}

std::optional<Degree> MemoStore::find(DegreeKind kind, const SeveriKey& key) const {
  std::lock_guard<std::mutex> lock(*mu_);
  const Map& map = map_for(kind);
  auto it = map.find(key);
  if (it == map.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void MemoStore::insert(DegreeKind kind, const SeveriKey& key, const Degree& value) {
  std::lock_guard<std::mutex> lock(*mu_);
  auto [it, inserted] = map_for(kind).emplace(key, value);
  if (!inserted && it->second != value) {
    throw IntegrityError("memo integrity violation for key " + render_compact(key) +
                         ": stored " + to_decimal(it->second) + ", new " +
                         to_decimal(value));
  }
}

std::size_t MemoStore::size() const {
  std::lock_guard<std::mutex> lock(*mu_);
  return total_.size() + irreducible_.size();
}

std::uint64_t MemoStore::hits() const {
  std::lock_guard<std::mutex> lock(*mu_);
  return hits_;
}

std::uint64_t MemoStore::misses() const {
  std::lock_guard<std::mutex> lock(*mu_);
  return misses_;
}

void MemoStore::reset_counters() {
  std::lock_guard<std::mutex> lock(*mu_);
  hits_ = 0;
  misses_ = 0;
}

std::vector<MemoStore::Record> MemoStore::snapshot() const {
  std::lock_guard<std::mutex> lock(*mu_);
  std::vector<Record> out;
  out.reserve(total_.size() + irreducible_.size());
  for (const auto& [key, value] : total_) {
    out.push_back({DegreeKind::Total, key, value});
  }
  for (const auto& [key, value] : irreducible_) {
    out.push_back({DegreeKind::Irreducible, key, value});
  }
  return out;
}

BranchProfile branch_profile(const TangencySeq& beta, const TangencySeq& beta_prime) {
  if (!leq(beta, beta_prime)) {
    throw std::invalid_argument("branch_profile: beta = " + to_string(beta) +
                                " is not <= beta' = " + to_string(beta_prime));
  }
  TangencySeq diff = sub(beta_prime, beta);
  BigInt raw = binomial(beta_prime, beta) * ipow(diff);
  long m = lcm_support(diff);
  // lcm of the support divides the product of the support indices, which
  // divides ipow(diff)
  assert(divisible(raw, BigInt(m)));
  return BranchProfile{raw / m, m};
}

std::vector<RecursionTerm> expand(const SeveriKey& key) {
  if (!validate(key)) {
    throw std::invalid_argument("expand: invalid key " + render_compact(key) + ": " +
                                validation_error(key));
  }
  if (key.d == 1) {
    throw std::invalid_argument("expand: no expansion exists for d = 1");
  }

  std::vector<RecursionTerm> terms;
  for (int k = 1; k <= key.beta.length(); ++k) {
    if (key.beta.at(k) == 0) continue;
    RecursionTerm t;
    t.kind = TermKind::AssignContact;
    t.contact_order = k;
    t.child = SeveriKey{key.d, key.delta, add(key.alpha, TangencySeq::unit(k)),
                        sub(key.beta, TangencySeq::unit(k))};
    t.per_choice_multiplicity = k;
    t.branch_count = 1;
    t.branch_multiplicity = k;
    terms.push_back(std::move(t));
  }

  std::vector<RecursionTerm> splits;
  const int residual_degree = key.d - 1;
  for (const TangencySeq& alpha_prime : enumerate_leq(key.alpha)) {
    int new_weight = residual_degree - weight(alpha_prime) - weight(key.beta);
    if (new_weight < 0) continue;
    for (const TangencySeq& diff : enumerate_weight(new_weight)) {
      int child_delta = key.delta - residual_degree + size(diff);
      if (child_delta < 0) continue;
      TangencySeq beta_prime = add(key.beta, diff);
      RecursionTerm t;
      t.kind = TermKind::SplitOffLine;
      t.child = SeveriKey{residual_degree, child_delta, alpha_prime, beta_prime};
      t.omega_choices = binomial(key.alpha, alpha_prime);
      BranchProfile bp = branch_profile(key.beta, beta_prime);
      t.branch_count = bp.count;
      t.branch_multiplicity = bp.multiplicity;
      t.per_choice_multiplicity = bp.count * bp.multiplicity;
      splits.push_back(std::move(t));
    }
  }
  std::sort(splits.begin(), splits.end(),
            [](const RecursionTerm& a, const RecursionTerm& b) {
              if (a.child.delta != b.child.delta) return a.child.delta > b.child.delta;
              if (a.child.alpha != b.child.alpha) return b.child.alpha < a.child.alpha;
              return a.child.beta < b.child.beta;
            });
  terms.insert(terms.end(), std::make_move_iterator(splits.begin()),
               std::make_move_iterator(splits.end()));
  return terms;
}

Degree degree(const SeveriKey& key, MemoStore& memo, const EngineOptions& opt) {
  if (!validate(key)) return 0;
  if (key.d == 1) return key.delta == 0 ? Degree(1) : Degree(0);
  if (opt.use_memo) {
    if (auto hit = memo.find(DegreeKind::Total, key)) return *hit;
  }

  std::vector<RecursionTerm> terms = expand(key);
  if (opt.prune_split_terms) {
    std::erase_if(terms, [](const RecursionTerm& t) {
      return t.kind == TermKind::SplitOffLine &&
             t.child.delta > max_node_count(t.child.d);
    });
  }

  EngineOptions child_opt = opt;
  child_opt.parallel = false;
  Degree total = 0;
  if (opt.parallel) {
    std::vector<std::future<Degree>> futures;
    futures.reserve(terms.size());
    for (const RecursionTerm& t : terms) {
      futures.push_back(std::async(std::launch::async, [&t, &memo, &child_opt] {
        return degree(t.child, memo, child_opt);
      }));
    }
    for (size_t i = 0; i < terms.size(); ++i) {
      total += terms[i].coefficient() * futures[i].get();
    }
  } else {
    for (const RecursionTerm& t : terms) {
      total += t.coefficient() * degree(t.child, memo, child_opt);
    }
  }

  if (opt.use_memo) memo.insert(DegreeKind::Total, key, total);
  return total;
}

std::vector<TableRow> table(int d, MemoStore& memo, const EngineOptions& opt) {
  if (d < 1) throw std::invalid_argument("table: d must be positive");
  const int rows = static_cast<int>(max_node_count(d)) + 1;
  const TangencySeq full_beta{d};  // d simple contacts, i.e. no condition

  std::vector<TableRow> out;
  out.reserve(static_cast<size_t>(rows));
  if (opt.parallel) {
    EngineOptions row_opt = opt;
    row_opt.parallel = false;
    std::vector<std::future<Degree>> futures;
    futures.reserve(static_cast<size_t>(rows));
    for (int delta = 0; delta < rows; ++delta) {
      SeveriKey key{d, delta, {}, full_beta};
      futures.push_back(std::async(std::launch::async, [key, &memo, &row_opt] {
        return degree(key, memo, row_opt);
      }));
    }
    for (int delta = 0; delta < rows; ++delta) {
      out.push_back({delta, genus(d, delta), futures[static_cast<size_t>(delta)].get()});
    }
  } else {
    for (int delta = 0; delta < rows; ++delta) {
      SeveriKey key{d, delta, {}, full_beta};
      out.push_back({delta, genus(d, delta), degree(key, memo, opt)});
    }
  }
  return out;
}

}  // namespace severi
