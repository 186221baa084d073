#include "spreadlab/spread.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spreadlab/errors.hpp"
#include "spreadlab/rng.hpp"

namespace spreadlab {

namespace {

// canonical 2n-3 base of a complete component: the consecutive edges plus
// the star at vertex 1 (they overlap in {1,2})
std::vector<Edge> complete_base_edges(int n) {
    std::vector<Edge> base;
    base.emplace_back(1, 2);
    for (int i = 2; i < n; ++i) base.emplace_back(i, i + 1);
    for (int j = 3; j <= n; ++j) base.emplace_back(1, j);
    std::sort(base.begin(), base.end());
    return base;
}

std::string certificate_summary(const RankCertificate& cert) {
    std::ostringstream os;
    os << "rank " << cert.rank
       << (cert.mode == FieldMode::prime ? " over F_p, p=" + std::to_string(cert.prime)
                                         : " over Q")
       << ", trials agreeing " << cert.trials_agreeing;
    if (cert.symbolically_confirmed) os << ", symbolically confirmed";
    return os.str();
}

struct ComponentOutcome {
    int value = 0;
    std::string method;
    std::vector<Edge> base; // component labels
    std::optional<RankCertificate> cert;
};

ComponentOutcome engine_value(const Component& comp, const FieldConfig& cfg,
                              std::uint64_t stream) {
    ComponentOutcome out;
    const auto sys = build_system(comp.graph);
    FieldConfig sub = cfg;
    sub.seed = derive_seed(cfg.seed, stream);
    auto cert = generic_rank(sys, sub);
    out.value = cert.rank;
    out.method = "jacobian";
    FieldConfig greedy_cfg = cfg;
    greedy_cfg.seed = derive_seed(cfg.seed, stream ^ 0x9e3779b9ULL);
    std::vector<int> order(sys.gens.size());
    std::iota(order.begin(), order.end(), 0);
    for (int k : greedy_transcendence_base(sys, order, greedy_cfg)) {
        const auto& gb = sys.gens[static_cast<std::size_t>(k)];
        out.base.emplace_back(gb.i, gb.j);
    }
    out.cert = std::move(cert);
    return out;
}

ComponentOutcome formula_value(const Component& comp, const GraphClass& cls) {
    ComponentOutcome out;
    const Graph& g = comp.graph;
    const int m = static_cast<int>(g.edges.size());
    if (cls.is_complete) {
        out.value = 2 * g.n - 3;
        out.method = "formula-complete";
        out.base = complete_base_edges(g.n);
    } else if (cls.is_tree) {
        out.value = g.n - 1;
        out.method = "formula-tree";
        out.base = g.edges;
    } else if (cls.is_unicyclic) {
        out.value = m;
        out.method = "formula-unicyclic";
        out.base = g.edges;
    } else if (cls.is_closed_under_labeling && cls.is_k4_free) {
        out.value = m;
        out.method = "formula-closed-k4free";
        out.base = g.edges;
    } else {
        out.method = ""; // no shortcut applies
    }
    return out;
}

std::string overall_method(const std::vector<ComponentSpread>& comps) {
    std::vector<std::string> methods;
    for (const auto& c : comps)
        if (std::find(methods.begin(), methods.end(), c.method) == methods.end())
            methods.push_back(c.method);
    if (methods.empty()) return "formula-tree"; // vacuous graph
    if (methods.size() == 1) return methods.front();
    const bool forest_like = std::all_of(methods.begin(), methods.end(), [](const auto& m) {
        return m == "formula-tree" || m == "formula-unicyclic";
    });
    if (forest_like) return "formula-pseudo-forest";
    return "mixed";
}

} // namespace

SpreadResult analytic_spread(const Graph& g, const FieldConfig& cfg, SpreadPolicy policy) {
    cfg.validate();
    SpreadResult result;
    result.policy = policy;
    const auto decomp = connected_components(g);

    for (std::size_t ci = 0; ci < decomp.components.size(); ++ci) {
        const Component& comp = decomp.components[ci];
        ComponentSpread cs;
        cs.index = static_cast<int>(ci);
        cs.n = comp.graph.n;
        cs.edge_count = static_cast<int>(comp.graph.edges.size());

        ComponentOutcome out;
        if (comp.graph.n <= 1) {
            out.value = 0; // zero ideal
            out.method = "formula-tree";
        } else if (policy == SpreadPolicy::force_jacobian) {
            out = engine_value(comp, cfg, ci);
        } else {
            const auto cls = classify(comp.graph);
            out = formula_value(comp, cls);
            if (out.method.empty()) {
                out = engine_value(comp, cfg, ci);
            } else if (policy == SpreadPolicy::cross_check) {
                const auto engine = engine_value(comp, cfg, ci);
                if (engine.value != out.value) {
                    std::ostringstream os;
                    os << "cross-check failed on component " << ci << " (n=" << comp.graph.n
                       << ", |E|=" << comp.graph.edges.size() << "): " << out.method
                       << " says " << out.value << " but the engine says " << engine.value
                       << " [" << certificate_summary(*engine.cert) << "]";
                    throw VerificationError(os.str());
                }
                result.cross_checked = true;
            }
        }

        cs.value = out.value;
        cs.method = out.method;
        cs.certificate = std::move(out.cert);
        result.value += cs.value;
        for (const auto& [u, v] : out.base) {
            int a = comp.old_label[static_cast<std::size_t>(u - 1)];
            int b = comp.old_label[static_cast<std::size_t>(v - 1)];
            result.base_edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        result.components.push_back(std::move(cs));
    }
    std::sort(result.base_edges.begin(), result.base_edges.end());
    result.method = overall_method(result.components);
    result.bounds = verify_bounds(g, result);
    return result;
}

BoundReport verify_bounds(const Graph& g, const SpreadResult& result) {
    const auto decomp = connected_components(g);
    if (decomp.components.size() != result.components.size())
        throw PreconditionError("bound report requires the result computed for this graph");
    BoundReport report;
    for (std::size_t ci = 0; ci < decomp.components.size(); ++ci) {
        const Graph& cg = decomp.components[ci].graph;
        if (cg.n < 2) continue;
        ComponentBounds cb;
        cb.index = static_cast<int>(ci);
        cb.n = cg.n;
        cb.edge_count = static_cast<int>(cg.edges.size());
        const auto deg = degrees(cg);
        cb.min_degree = *std::min_element(deg.begin(), deg.end());
        cb.value = result.components[ci].value;
        cb.lower_general = cg.n - 1;
        cb.upper_general = 2 * cg.n - 3;
        cb.upper_mu = cb.edge_count;
        if (cg.n <= 16) {
            cb.connectivity = vertex_connectivity(cg);
            cb.lower_connectivity = cg.n + *cb.connectivity - 2;
        }
        if (cb.min_degree >= 4) cb.upper_min_degree = cb.edge_count - 3;

        cb.satisfied = cb.lower_general <= cb.value && cb.value <= cb.upper_general &&
                       cb.value <= cb.upper_mu;
        if (cb.lower_connectivity && *cb.lower_connectivity > cb.value)
            cb.satisfied = false;
        if (cb.upper_min_degree && cb.value > *cb.upper_min_degree)
            cb.satisfied = false;
        report.all_satisfied = report.all_satisfied && cb.satisfied;
        report.components.push_back(std::move(cb));
    }
    return report;
}

bool verify_additivity(const Graph& g, const FieldConfig& cfg) {
    const auto whole = analytic_spread(g, cfg, SpreadPolicy::force_jacobian);
    int sum = 0;
    const auto decomp = connected_components(g);
    for (std::size_t ci = 0; ci < decomp.components.size(); ++ci) {
        FieldConfig sub = cfg;
        sub.seed = derive_seed(cfg.seed, 0xadd + ci);
        sum += analytic_spread(decomp.components[ci].graph, sub,
                               SpreadPolicy::force_jacobian)
                   .value;
    }
    return whole.value == sum;
}

bool verify_leaf(const Graph& g, int attach, const FieldConfig& cfg, SpreadPolicy policy) {
    const int before = analytic_spread(g, cfg, policy).value;
    const int after = analytic_spread(add_leaf(g, attach), cfg, policy).value;
    return after == before + 1;
}

bool verify_monotonicity(const Graph& g, const Graph& g_prime, const FieldConfig& cfg,
                         SpreadPolicy policy) {
    if (g.n != g_prime.n)
        throw PreconditionError("monotonicity compares graphs on the same vertex set");
    if (!std::includes(g_prime.edges.begin(), g_prime.edges.end(), g.edges.begin(),
                       g.edges.end()))
        throw PreconditionError("monotonicity requires the edges of g to be a subset");
    return analytic_spread(g, cfg, policy).value <=
           analytic_spread(g_prime, cfg, policy).value;
}

HandleTable handle_experiment(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                              const FieldConfig& cfg) {
    HandleTable table;
    table.planar_before = planarity(g);
    const int before = analytic_spread(g, cfg).value;
    for (const auto& [i, j] : pairs) {
        const Graph h = add_handle(g, i, j);
        HandleRow row;
        row.i = i;
        row.j = j;
        row.before = before;
        row.after = analytic_spread(h, cfg).value;
        row.delta = row.after - row.before;
        row.planar_after = planarity(h);
        if (row.delta == 2) ++table.deltas_equal_two;
        table.rows.push_back(row);
    }
    return table;
}

PathStarReport path_star_base_check(const Graph& g, const FieldConfig& cfg) {
    if (!is_connected(g))
        throw PreconditionError("path-star check needs a connected graph");
    if (auto bad = closed_violation(g)) {
        const auto [i, j, k] = *bad;
        throw PreconditionError("path-star check needs a closed labeling: triple (" +
                                std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ") violates the condition");
    }
    PathStarReport report;
    const auto adj = adjacency_masks(g);
    auto has = [&](int a, int b) {
        return (adj[static_cast<std::size_t>(a - 1)] >> (b - 1)) & 1;
    };
    for (int i = 1; i < g.n; ++i) {
        if (has(i, i + 1))
            report.subset.emplace_back(i, i + 1);
        else
            report.missing_path_edges.emplace_back(i, i + 1);
    }
    for (int j = 3; j <= g.n; ++j)
        if (has(1, j)) report.subset.emplace_back(1, j);
    std::sort(report.subset.begin(), report.subset.end());
    report.subset.erase(std::unique(report.subset.begin(), report.subset.end()),
                        report.subset.end());

    const auto sys = build_system(g);
    std::vector<int> indices;
    for (std::size_t k = 0; k < sys.gens.size(); ++k) {
        Edge e{sys.gens[k].i, sys.gens[k].j};
        if (std::binary_search(report.subset.begin(), report.subset.end(), e))
            indices.push_back(static_cast<int>(k));
    }
    report.restricted_rank = generic_rank(subsystem(sys, indices), cfg).rank;
    report.spread_value = analytic_spread(g, cfg).value;
    report.ok = report.restricted_rank == report.spread_value;
    return report;
}

} // namespace spreadlab
