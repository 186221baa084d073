#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spreadlab/algebra.hpp"
#include "spreadlab/graph.hpp"

namespace spreadlab {

enum class SpreadPolicy {
    prefer_formula, // formula shortcuts where a theorem provides one
    force_jacobian, // engine only
    cross_check     // both; disagreement is a hard failure
};

struct ComponentSpread {
    int index = 0; // position in the component decomposition
    int n = 0;
    int edge_count = 0;
    int value = 0;
    std::string method;
    std::optional<RankCertificate> certificate; // present for jacobian components
};

struct ComponentBounds {
    int index = 0;
    int n = 0;
    int edge_count = 0;
    int min_degree = 0;
    int value = 0;
    int lower_general = 0; // n - 1
    int upper_general = 0; // 2n - 3
    int upper_mu = 0;      // |E|
    std::optional<int> connectivity;       // absent if brute force out of range
    std::optional<int> lower_connectivity; // n + t - 2
    std::optional<int> upper_min_degree;   // |E| - 3, only when min degree >= 4
    bool satisfied = true;
};

struct BoundReport {
    std::vector<ComponentBounds> components; // one entry per component with n >= 2
    bool all_satisfied = true;
};

struct SpreadResult {
    int value = 0;
    std::string method; // per-component method, or "formula-pseudo-forest"/"mixed"
    std::vector<Edge> base_edges; // transcendence-base certificate, parent labels
    std::vector<ComponentSpread> components;
    BoundReport bounds;
    SpreadPolicy policy = SpreadPolicy::prefer_formula;
    bool cross_checked = false;
};

/// Decomposes into connected components (their values add) and dispatches
/// per component: complete -> 2n-3, tree -> n-1, unicyclic -> |E|,
/// closed and K4-free -> |E|, otherwise the Jacobian engine. Components
/// with at most one vertex contribute 0.
SpreadResult analytic_spread(const Graph& g, const FieldConfig& cfg,
                             SpreadPolicy policy = SpreadPolicy::prefer_formula);

/// Every applicable inequality, per component with n >= 2:
/// n-1 <= value, n+t-2 <= value, value <= 2n-3, value <= |E|,
/// and value <= |E|-3 when the minimum degree is at least 4.
BoundReport verify_bounds(const Graph& g, const SpreadResult& result);

/// Whole-graph engine value == sum of per-component engine values.
bool verify_additivity(const Graph& g, const FieldConfig& cfg);

/// Adding a leaf raises the spread by exactly one.
bool verify_leaf(const Graph& g, int attach, const FieldConfig& cfg,
                 SpreadPolicy policy = SpreadPolicy::prefer_formula);

/// Spread is monotone under adding edges on a fixed vertex set.
bool verify_monotonicity(const Graph& g, const Graph& g_prime, const FieldConfig& cfg,
                         SpreadPolicy policy = SpreadPolicy::prefer_formula);

struct HandleRow {
    int i = 0;
    int j = 0;
    int before = 0;
    int after = 0;
    int delta = 0;
    Planarity planar_after = Planarity::unknown;
};

/// Evidence table for the handle question: what does a two-edge attachment
/// of a fresh vertex do to the spread? Asserts nothing; the question is open.
struct HandleTable {
    Planarity planar_before = Planarity::unknown;
    std::vector<HandleRow> rows;
    int deltas_equal_two = 0;
};

HandleTable handle_experiment(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                              const FieldConfig& cfg);

/// For a connected closed graph: do the consecutive edges {i,i+1} plus the
/// star edges {1,j} that are present already span a transcendence base?
struct PathStarReport {
    bool ok = false;
    int restricted_rank = 0;
    int spread_value = 0;
    std::vector<Edge> subset;             // the restricted generator set
    std::vector<Edge> missing_path_edges; // consecutive edges absent from g
};

PathStarReport path_star_base_check(const Graph& g, const FieldConfig& cfg);

} // namespace spreadlab
