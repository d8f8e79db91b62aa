#include "chromadisc/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "chromadisc/characterize.hpp"
#include "chromadisc/invariants.hpp"
#include "chromadisc/subset_chromatic.hpp"

namespace chromadisc {

std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

namespace {

std::string mask_string(Mask s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  bits::for_each(s, [&](int v) {
    if (!first) out << ',';
    out << v;
    first = false;
  });
  out << '}';
  return out.str();
}

Rational flag(bool b) { return Rational(b ? 1 : 0); }

}  // namespace

BoundEntry make_entry(std::string name, Relation relation, Rational bound, Rational exact,
                      std::string detail) {
  BoundEntry e;
  e.name = std::move(name);
  e.relation = relation;
  e.bound_value = bound;
  e.exact_value = exact;
  e.detail = std::move(detail);
  switch (relation) {
    case Relation::kAtMost:
      e.slack = bound - exact;
      break;
    case Relation::kAtLeast:
      e.slack = exact - bound;
      break;
    case Relation::kEqual: {
      Rational diff = exact - bound;
      e.slack = diff < 0 ? diff : -diff;
      break;
    }
  }
  e.status = e.slack >= 0 ? Status::kHolds : Status::kViolated;
  return e;
}

BoundEntry not_applicable(std::string name, Relation relation, std::string why) {
  BoundEntry e;
  e.name = std::move(name);
  e.relation = relation;
  e.status = Status::kNotApplicable;
  e.detail = std::move(why);
  return e;
}

bool BoundReport::all_hold() const { return first_violation() == nullptr; }

const BoundEntry* BoundReport::first_violation() const {
  for (const auto& e : entries) {
    if (e.status == Status::kViolated) return &e;
  }
  return nullptr;
}

const BoundEntry* BoundReport::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<BoundEntry> upper_bounds(const ParamReport& r) {
  if (!r.phi || !r.phi_hat) {
    throw GraphError("upper_bounds needs exact phi and phi_hat");
  }
  const Rational phi(*r.phi);
  const Rational phi_hat(*r.phi_hat);
  std::vector<BoundEntry> out;

  if (r.n >= 1) {
    out.push_back(make_entry("phi<=chi-1", Relation::kAtMost, r.chi - 1, phi));
  } else {
    out.push_back(not_applicable("phi<=chi-1", Relation::kAtMost, "empty graph"));
  }
  if (r.m >= 1) {
    out.push_back(make_entry("phi_hat<=chi-2", Relation::kAtMost, r.chi - 2, phi_hat));
  } else {
    out.push_back(not_applicable("phi_hat<=chi-2", Relation::kAtMost, "no edges"));
  }
  out.push_back(make_entry("phi<=n-chi", Relation::kAtMost, r.n - r.chi, phi));
  if (r.alpha >= 1) {
    Rational bound = Rational(r.chi) * (Rational(1) - Rational(1, r.alpha));
    out.push_back(make_entry("phi<=chi(1-1/alpha)", Relation::kAtMost, bound, phi));
  } else {
    out.push_back(not_applicable("phi<=chi(1-1/alpha)", Relation::kAtMost, "empty graph"));
  }
  out.push_back(make_entry("phi<=n/3", Relation::kAtMost, Rational(r.n, 3), phi));
  out.push_back(make_entry("phi_hat<=phi", Relation::kAtMost, phi, phi_hat));
  return out;
}

Rational subgraph_gap_lower_bound(const Graph& g, int cap) {
  const int n = g.order();
  if (n == 0) return 0;
  if (n > cap) {
    return Rational(chromatic_number(g).value - clique_number(g), 2);
  }
  SubsetChromatic chi(g);
  int best = 0;
  for (Mask s = 1;; ++s) {
    int gap = chi(s) - clique_number_of(g, s);
    best = std::max(best, gap);
    if (s == g.vertices()) break;
  }
  return Rational(best, 2);
}

namespace {

bool transversal_premise(const ParamReport& r) { return r.n >= 1 && r.alpha >= 2 * r.delta; }

}  // namespace

std::optional<Rational> transversal_lower_bound(const ParamReport& r) {
  if (!transversal_premise(r)) return std::nullopt;
  return Rational(r.n - (2 * r.delta - 1) * (r.chi - 1), r.alpha) - 1;
}

std::optional<Rational> transversal_corollary_bound(const ParamReport& r) {
  if (!transversal_premise(r) || 4 * r.delta * r.delta > r.n) return std::nullopt;
  return Rational(r.n, 2 * r.alpha) - 1;
}

std::optional<Rational> transversal_intermediate_bound(const ParamReport& r) {
  if (!transversal_premise(r) || !r.phi) return std::nullopt;
  return Rational(r.n - (2 * r.delta - 1) * (r.chi + *r.phi), r.alpha - 2 * r.delta + 1) - 1;
}

std::optional<int> local_chromatic_lower_bound(const ParamReport& r) {
  if (!r.flags.triangle_free || !r.psi) return std::nullopt;
  return *r.psi - 2;
}

DiameterLemmaResult diameter_lemma_bound(const Graph& g, int k, int cap,
                                         const SolverOptions& options) {
  if (g.order() == 0 || !is_connected(g)) {
    throw GraphError("diameter lemma needs a connected nonempty graph");
  }
  DiameterLemmaResult out;
  out.chi = chromatic_number(g).value;
  out.diameter = *diameter(g);
  out.size_limit = out.chi * out.diameter;
  if (out.size_limit > cap) {
    throw BudgetExceeded("chi * diam = " + std::to_string(out.size_limit) +
                         " exceeds the enumeration cap " + std::to_string(cap));
  }
  if (g.order() > options.budget.max_vertices) {
    throw BudgetExceeded("graph has more vertices than the solver budget");
  }

  if (out.size_limit >= g.order()) {
    // Every induced subgraph is within the limit; χ is monotone, so g decides.
    if (out.chi > k) out.counterexample = g.vertex_set();
  } else {
    SubsetChromatic chi(g);
    for (Mask s = 1;; ++s) {
      if (bits::count(s) <= out.size_limit && chi(s) > k) {
        out.counterexample = VertexSet(s);
        break;
      }
      if (s == g.vertices()) break;
    }
  }
  out.hypothesis_holds = !out.counterexample.has_value();
  if (out.hypothesis_holds) {
    out.phi_hat = phi_hat_exact(g, options).value;
    out.conclusion_holds = *out.phi_hat >= out.chi - k;
  }
  return out;
}

std::vector<BoundEntry> gap_bounds(const Graph& g, const ParamReport& r,
                                   const SolverOptions& options, std::uint64_t seed) {
  if (!r.phi || !r.phi_hat) {
    throw GraphError("gap_bounds needs exact phi and phi_hat");
  }
  std::vector<BoundEntry> out;
  const std::string gap_name = "phi<=phi_hat+alpha-1";
  if (r.n == 0) {
    out.push_back(not_applicable(gap_name, Relation::kAtMost, "empty graph"));
  } else if (!r.flags.connected) {
    out.push_back(not_applicable(gap_name, Relation::kAtMost, "disconnected"));
  } else {
    out.push_back(make_entry(gap_name, Relation::kAtMost, *r.phi_hat + r.alpha - 1, *r.phi));
  }

  const std::string removal_name = "phi<=phi(G-I)+1";
  const int n = g.order();
  if (n == 0) {
    out.push_back(not_applicable(removal_name, Relation::kAtMost, "empty graph"));
    return out;
  }

  auto maximal_from = [&](const std::vector<int>& order) {
    Mask set = 0;
    Mask blocked = 0;
    for (int v : order) {
      if (blocked & bits::bit(v)) continue;
      set |= bits::bit(v);
      blocked |= g.closed_neighbors(v);
    }
    return set;
  };

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Mask> sets{maximal_from(order)};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < kRandomIndependentSets; ++i) {
    // Fisher-Yates with plain modulo so the draws match across standard libraries.
    for (int j = n - 1; j > 0; --j) {
      std::swap(order[j], order[rng() % static_cast<std::uint64_t>(j + 1)]);
    }
    sets.push_back(maximal_from(order));
  }

  std::unordered_map<Mask, int> cache;
  int tightest = -1;
  Mask tightest_set = 0;
  for (Mask set : sets) {
    auto [it, fresh] = cache.try_emplace(set, 0);
    if (fresh) {
      InducedSubgraph rest = induced_subgraph(g, VertexSet(g.vertices() & ~set));
      it->second = phi_exact(rest.graph, options).value;
    }
    if (tightest < 0 || it->second < tightest) {
      tightest = it->second;
      tightest_set = set;
    }
  }
  std::ostringstream detail;
  detail << cache.size() << " distinct maximal independent sets from " << sets.size()
         << " draws; tightest I=" << mask_string(tightest_set);
  out.push_back(
      make_entry(removal_name, Relation::kAtMost, tightest + 1, *r.phi, detail.str()));
  return out;
}

Verification verify_all(const Graph& g, const VerifyOptions& options) {
  const SolverOptions& solver = options.solver;
  if (g.order() > solver.budget.max_vertices) {
    throw BudgetExceeded("graph has " + std::to_string(g.order()) +
                         " vertices; the solver budget is " +
                         std::to_string(solver.budget.max_vertices));
  }
  Verification v;
  v.report = compute_invariants(g, solver.budget);
  v.phi = phi_exact(g, solver);
  v.phi_hat = phi_hat_exact(g, solver);
  v.report.phi = v.phi.value;
  v.report.phi_hat = v.phi_hat.value;
  const ParamReport& r = v.report;
  const Rational phi(*r.phi);
  const Rational phi_hat(*r.phi_hat);
  auto& entries = v.bounds.entries;

  for (auto& e : upper_bounds(r)) entries.push_back(std::move(e));

  entries.push_back(make_entry("phi>=max(chi(H)-omega(H))/2", Relation::kAtLeast,
                               subgraph_gap_lower_bound(g), phi,
                               g.order() > kSubgraphGapCap ? "whole-graph term only" : ""));
  if (r.flags.triangle_free) {
    entries.push_back(
        make_entry("phi>=chi/2-1", Relation::kAtLeast, Rational(r.chi, 2) - 1, phi));
  } else {
    entries.push_back(not_applicable("phi>=chi/2-1", Relation::kAtLeast, "has a triangle"));
  }

  if (auto bound = transversal_lower_bound(r)) {
    std::string detail = "intermediate form " + to_string(*transversal_intermediate_bound(r));
    entries.push_back(make_entry("phi>=transversal", Relation::kAtLeast, *bound, phi, detail));
  } else {
    entries.push_back(not_applicable("phi>=transversal", Relation::kAtLeast, "alpha < 2*Delta"));
  }
  if (auto bound = transversal_corollary_bound(r)) {
    entries.push_back(make_entry("phi>=n/(2alpha)-1", Relation::kAtLeast, *bound, phi));
  } else {
    entries.push_back(not_applicable("phi>=n/(2alpha)-1", Relation::kAtLeast,
                                     "alpha < 2*Delta or 4*Delta^2 > n"));
  }

  if (auto bound = local_chromatic_lower_bound(r)) {
    entries.push_back(make_entry("phi_hat>=psi-2", Relation::kAtLeast, *bound, phi_hat));
  } else {
    entries.push_back(not_applicable("phi_hat>=psi-2", Relation::kAtLeast,
                                     r.psi ? "has a triangle" : "psi not computed"));
  }

  for (auto& e : gap_bounds(g, r, solver, options.seed)) entries.push_back(std::move(e));

  const bool hat_zero = *r.phi_hat == 0;
  entries.push_back(make_entry("phi_hat=0<=>components-bipartite-or-multipartite",
                               Relation::kEqual, flag(phi_hat_zero_characterization(g)),
                               flag(hat_zero)));
  if (r.flags.perfect) {
    entries.push_back(make_entry("phi_hat=0<=>paw-free-and-perfect", Relation::kEqual,
                                 flag(r.flags.paw_free && *r.flags.perfect), flag(hat_zero)));
  } else {
    entries.push_back(not_applicable("phi_hat=0<=>paw-free-and-perfect", Relation::kEqual,
                                     "perfection not checked at this size"));
  }
  entries.push_back(make_entry("phi=0<=>complete-multipartite", Relation::kEqual,
                               flag(r.flags.complete_multipartite), flag(*r.phi == 0)));

  if (r.achromatic) {
    entries.push_back(make_entry("phi-witness-colors<=achromatic", Relation::kAtMost,
                                 *r.achromatic, v.phi.coloring.size()));
    entries.push_back(make_entry("phi_hat-witness-colors<=achromatic", Relation::kAtMost,
                                 *r.achromatic, v.phi_hat.coloring.size()));
  } else {
    for (const char* name :
         {"phi-witness-colors<=achromatic", "phi_hat-witness-colors<=achromatic"}) {
      entries.push_back(not_applicable(name, Relation::kAtMost, "achromatic not computed"));
    }
  }

  if (g.order() >= 1 && g.order() <= options.profile_max_vertices) {
    v.profile = optimal_coloring_profile(g, solver);
    const ColoringProfile& p = *v.profile;
    auto range = [](int lo, int hi) {
      return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
    };
    std::ostringstream detail;
    detail << "optimal-coloring profile: φ_c=" << range(p.min_phi.value, p.max_phi.value)
           << ", φ̂_c=" << range(p.min_phi_hat.value, p.max_phi_hat.value)
           << "; exact: " << *r.phi << ',' << *r.phi_hat << " (" << p.optimal_colorings
           << " colorings)";
    entries.push_back(make_entry("phi<=min-phi-over-chi-colorings", Relation::kAtMost,
                                 p.min_phi.value, phi, detail.str()));
    entries.push_back(make_entry("phi_hat<=min-phi_hat-over-chi-colorings", Relation::kAtMost,
                                 p.min_phi_hat.value, phi_hat, detail.str()));
  }
  return v;
}

void check_claims(const Verification& v, std::span<const families::Claim> claims,
                  BoundReport& out) {
  using families::Quantity;
  const ParamReport& r = v.report;
  for (const auto& claim : claims) {
    std::string name = "claim:" + std::string(families::quantity_name(claim.quantity));
    Relation relation = claim.at_least ? Relation::kAtLeast : Relation::kEqual;
    std::optional<int> actual;
    switch (claim.quantity) {
      case Quantity::kChi:
        actual = r.chi;
        break;
      case Quantity::kAlpha:
        actual = r.alpha;
        break;
      case Quantity::kPsi:
        actual = r.psi;
        break;
      case Quantity::kPhi:
        actual = r.phi;
        break;
      case Quantity::kPhiHat:
        actual = r.phi_hat;
        break;
      case Quantity::kProfileMinPhi:
        if (v.profile) actual = v.profile->min_phi.value;
        break;
      case Quantity::kProfileMaxPhi:
        if (v.profile) actual = v.profile->max_phi.value;
        break;
      case Quantity::kProfileMinPhiHat:
        if (v.profile) actual = v.profile->min_phi_hat.value;
        break;
      case Quantity::kProfileMaxPhiHat:
        if (v.profile) actual = v.profile->max_phi_hat.value;
        break;
    }
    if (actual) {
      out.entries.push_back(make_entry(std::move(name), relation, claim.value, *actual));
    } else {
      out.entries.push_back(not_applicable(std::move(name), relation, "value not computed"));
    }
  }
}

}  // namespace chromadisc
