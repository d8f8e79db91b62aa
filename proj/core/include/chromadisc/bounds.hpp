#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "chromadisc/discrepancy.hpp"
#include "chromadisc/families.hpp"
#include "chromadisc/graph.hpp"
#include "chromadisc/report.hpp"

namespace chromadisc {

/// Compare against Rational values, not bare integers: with C++20 rewritten
/// comparisons, boost::rational's mixed-type operator== recurses forever.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

/// How the exact value must relate to the bound.
enum class Relation {
  kAtMost,   // exact ≤ bound
  kAtLeast,  // exact ≥ bound
  kEqual,
};

enum class Status { kHolds, kViolated, kNotApplicable };

struct BoundEntry {
  std::string name;
  Relation relation = Relation::kAtMost;
  Status status = Status::kNotApplicable;
  Rational bound_value{0};
  Rational exact_value{0};
  /// Distance to violation; ≥ 0 exactly when the entry holds.
  Rational slack{0};
  std::string detail;

  bool applicable() const { return status != Status::kNotApplicable; }
  bool holds() const { return status == Status::kHolds; }
};

/// Entry comparing `exact` against `bound`. Status and slack follow.
BoundEntry make_entry(std::string name, Relation relation, Rational bound, Rational exact,
                      std::string detail = {});
BoundEntry not_applicable(std::string name, Relation relation, std::string why);

struct BoundReport {
  std::vector<BoundEntry> entries;

  /// Every applicable entry holds.
  bool all_hold() const;
  const BoundEntry* first_violation() const;
  const BoundEntry* find(std::string_view name) const;
};

/// χ-1, χ-2 (φ̂, needs an edge), n-χ, χ(1-1/α), n/3 and φ̂ ≤ φ.
/// Requires report.phi and report.phi_hat.
std::vector<BoundEntry> upper_bounds(const ParamReport& report);

inline constexpr int kSubgraphGapCap = 12;

/// max over induced H of (χ(H) - ω(H)) / 2. Above `cap` vertices only the
/// whole-graph term is used.
Rational subgraph_gap_lower_bound(const Graph& g, int cap = kSubgraphGapCap);

/// (n - (2Δ-1)(χ-1))/α - 1 when α ≥ 2Δ (and n ≥ 1); empty otherwise.
std::optional<Rational> transversal_lower_bound(const ParamReport& report);
/// n/(2α) - 1 when α ≥ 2Δ and Δ ≤ √n/2 (checked as 4Δ² ≤ n).
std::optional<Rational> transversal_corollary_bound(const ParamReport& report);
/// The pre-simplification form (n - (2Δ-1)(χ+φ))/(α-2Δ+1) - 1, which needs
/// φ itself. Logged next to the main bound for inspection.
std::optional<Rational> transversal_intermediate_bound(const ParamReport& report);

/// ψ - 2 for triangle-free graphs.
std::optional<int> local_chromatic_lower_bound(const ParamReport& report);

struct DiameterLemmaResult {
  int chi = 0;
  int diameter = 0;
  /// χ·diam: subgraphs up to this many vertices are inspected.
  int size_limit = 0;
  bool hypothesis_holds = false;
  /// Set when the hypothesis fails: a subgraph within the size limit with χ > k.
  std::optional<VertexSet> counterexample;
  /// φ̂(g), computed only when the hypothesis holds.
  std::optional<int> phi_hat;
  /// φ̂ ≥ χ - k; vacuously true when the hypothesis fails.
  bool conclusion_holds = true;
};

inline constexpr int kDiameterLemmaCap = 16;

/// Checks whether every induced subgraph on at most χ·diam vertices has χ ≤ k
/// and, if so, that φ̂(g) ≥ χ(g) - k. Throws GraphError for disconnected g and
/// BudgetExceeded when χ·diam exceeds cap.
DiameterLemmaResult diameter_lemma_bound(const Graph& g, int k, int cap = kDiameterLemmaCap,
                                         const SolverOptions& options = {});

inline constexpr int kRandomIndependentSets = 20;

/// φ ≤ φ̂ + α - 1 (connected graphs only) and φ(g) ≤ φ(g \ I) + 1 over the
/// greedy maximal independent set plus kRandomIndependentSets seeded ones.
std::vector<BoundEntry> gap_bounds(const Graph& g, const ParamReport& report,
                                   const SolverOptions& options = {}, std::uint64_t seed = 1);

struct Verification {
  ParamReport report;
  Witness phi;
  Witness phi_hat;
  std::optional<ColoringProfile> profile;
  BoundReport bounds;
};

struct VerifyOptions {
  SolverOptions solver;
  std::uint64_t seed = 1;
  /// The optimal-coloring profile enumerates every χ-coloring, so it is only
  /// computed up to this many vertices.
  int profile_max_vertices = 12;
};

/// Computes every invariant and exact φ / φ̂, then evaluates all bounds, the
/// zero-discrepancy characterizations and the achromatic cap on the witness
/// colorings. Throws BudgetExceeded when g is outside the solver budget.
Verification verify_all(const Graph& g, const VerifyOptions& options = {});

/// Appends one kEqual / kAtLeast entry per claim, named "claim:<quantity>".
void check_claims(const Verification& v, std::span<const families::Claim> claims,
                  BoundReport& out);

}  // namespace chromadisc
