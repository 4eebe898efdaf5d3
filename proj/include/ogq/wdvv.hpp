#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ogq/partition.hpp"
#include "ogq/rational.hpp"

namespace ogq::wdvv {

inline constexpr int kN = 5;

/// Degree plus a multiset of Schubert classes, held in canonical order so
/// that permuted inputs compare equal.
struct GWKey {
  int d = 0;
  std::vector<StrictPartition> classes;

  /// Sorts `classes` canonically; DomainError on negative degree or a part
  /// larger than 4.
  static GWKey make(int d, std::vector<StrictPartition> classes);

  int weight() const;
  /// "I2(2,421,431,4321)"
  std::string str() const;

  friend bool operator==(const GWKey&, const GWKey&) = default;
  friend std::strong_ordering operator<=>(const GWKey& a, const GWKey& b);
};

/// Sum of codimensions required for I_d with m classes: 7 + 8d + m.
int weight_target(int d, int m);
bool dimension_ok(int d, const std::vector<StrictPartition>& classes);

enum class Provenance {
  Classical,
  DivisorAxiom,
  FundamentalAxiom,
  DimensionZero,
  LineFormula,
  Wdvv,
  ConsistencyCheck,
};

struct Entry {
  Rat value;
  Provenance provenance = Provenance::Wdvv;
  int case_id = 0;        // case number (1-17) for Wdvv entries; 0 = fallback
  std::string witness;    // relation used, for audit output

  /// "line-formula", "wdvv(case-3)", "wdvv(fallback)", ...
  std::string provenance_str() const;
};

/// Memoized invariants. A key is stored once; storing it again with a
/// different value throws InconsistentDerivation.
class GWTable {
 public:
  const Entry* find(const GWKey& key) const;
  /// Returns true when the key was new.
  bool insert(const GWKey& key, Entry entry);
  std::size_t size() const { return entries_.size(); }
  const std::map<GWKey, Entry>& entries() const { return entries_; }

  /// Line-delimited JSON records {n, d, classes, value, provenance, witness},
  /// one per key in key order.
  std::string serialize() const;
  static GWTable deserialize(const std::string& text);
  void save(const std::string& path) const;
  /// Missing file yields an empty table.
  static GWTable load(const std::string& path);
  /// Inserts every entry of `other`, checking overlaps.
  void merge(const GWTable& other);

 private:
  std::map<GWKey, Entry> entries_;
};

/// Outcome of the reduction rules: either a value, or a multiplier times a
/// key with no divisor or fundamental class (all weights >= 2, d >= 1).
struct Reduction {
  std::optional<Rat> value;
  Rat multiplier{1};
  GWKey key;
  Provenance rule = Provenance::Wdvv;  // rule that produced `value` or stripped a divisor
};

/// Applies in order: dimension vanishing, the degree-0 rules, divisor
/// stripping I_d(..., tau_1) = d I_d(...), and the fundamental-class rule.
Reduction reduce(const GWKey& key);

/// One product I_{d1}(..) I_{d2}(..) of a relation with classical factors and
/// multipliers folded into `coeff`. `factors` lists the remaining keys (0..2),
/// each of degree >= 1 and already reduced.
struct ProductTerm {
  Rat coeff;
  std::vector<GWKey> factors;
};

/// An instantiated associativity relation sum(coeff * prod I(factors)) = 0,
/// left side minus right side.
struct RelationInstance {
  int d = 0;
  std::vector<StrictPartition> lambdas;  // lambda^1 .. lambda^m, roles in the last four
  std::vector<ProductTerm> terms;

  std::string str() const;
};

/// Expands the associativity relation for the ordered classes `lambdas`
/// (m >= 4, all weights >= 1, sum = 6 + 8d + m). DomainError otherwise.
RelationInstance build_relation(int d, const std::vector<StrictPartition>& lambdas);

/// Solves `relation` for `target`, evaluating all other factors with
/// `lookup` (which returns nullopt for unknown keys). Returns nullopt when a
/// factor is unknown or the target coefficient vanishes.
std::optional<Rat> solve_for(const RelationInstance& relation, const GWKey& target,
                             const std::function<std::optional<Rat>(const GWKey&)>& lookup);

/// Role pattern of one of the seventeen conic cases: lambda^{m-2} = rho,
/// lambda^m = pi, and tau_1 * tau_rho contributes the target class alpha.
struct CasePattern {
  int id;
  StrictPartition rho;
  StrictPartition pi;
  StrictPartition alpha;
};
const std::vector<CasePattern>& case_patterns();

/// Role assignment producing a relation whose degree-d unknowns include the
/// target: lambdas = (rest..., 1, rho, sigma, pi).
struct Candidate {
  int case_id = 0;  // 0 = generic fallback
  std::vector<StrictPartition> rest;
  StrictPartition rho;
  StrictPartition sigma;
  StrictPartition pi;

  std::vector<StrictPartition> lambdas() const;
};

/// Case candidates first (in case order), then every other role
/// assignment; no duplicates. `key` must be reduced.
std::vector<Candidate> candidates(const GWKey& key);

struct BootstrapOptions {
  /// After solving a key, re-derive it from another candidate using only
  /// stored values and compare.
  bool cross_check = true;
  /// Worker count for the optional line-number prefetch.
  int jobs = 1;
};

struct Derivation {
  Rat value;
  Candidate candidate;
};

/// Demand-driven solver over a GWTable: line numbers come from the
/// divided-difference formula, higher degrees from single-unknown
/// associativity relations, recursively.
class Bootstrapper {
 public:
  explicit Bootstrapper(GWTable& table, BootstrapOptions options = {});

  /// Value of an arbitrary key (reductions included). Stores the requested
  /// key with its provenance. Throws Underdetermined or InconsistentDerivation.
  Rat value(const GWKey& key);
  Rat value(int d, std::vector<StrictPartition> classes) { return value(GWKey::make(d, std::move(classes))); }

  /// Solves every target; aborts on the first failure.
  void run(const std::vector<GWKey>& targets);

  /// Up to `limit` derivations of a reduced key from distinct candidates,
  /// each computed with full recursion.
  std::vector<Derivation> derivations(const GWKey& key, std::size_t limit);

  /// Computes all line numbers with `jobs` workers and stores them.
  void prefetch_lines();

  std::size_t cross_checks() const { return cross_checks_; }
  std::size_t solved() const { return solved_; }

 private:
  std::optional<Rat> resolve(const GWKey& reduced_key, bool& blocked);
  std::optional<Rat> lookup_factor(const GWKey& key, bool& blocked);
  std::optional<Rat> known_only(const GWKey& key);
  void cross_check(const GWKey& key, const Rat& value, const Candidate& used);

  GWTable& table_;
  BootstrapOptions options_;
  std::set<GWKey> in_progress_;
  std::set<GWKey> failed_;
  std::set<GWKey> missing_;
  std::size_t cross_checks_ = 0;
  std::size_t solved_ = 0;
};

/// Convenience: a fresh table seeded on demand, ending in I_7 at seven points.
Rat septics(GWTable& table, BootstrapOptions options = {});

/// All degree-2 keys whose classes include one of the seventeen case pairs
/// plus at least one further class (the conic-case census).
std::vector<GWKey> conic_case_keys();

/// All canonical keys of degree d with class weights >= 2.
std::vector<GWKey> keys_of_degree(int d);

}  // namespace ogq::wdvv
