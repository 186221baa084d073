#include "spreadlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "spreadlab/errors.hpp"
#include "spreadlab/rng.hpp"

namespace spreadlab {

namespace {

void check_label(int v, int n) {
    if (v < 1 || v > n)
        throw ParseError("vertex label " + std::to_string(v) +
                         " out of range 1.." + std::to_string(n));
}

} // namespace

Graph make_graph(int n, std::vector<Edge> edges) {
    if (n < 0) throw ParseError("vertex count must be nonnegative");
    if (n > kMaxVertices)
        throw ParseError("vertex count " + std::to_string(n) +
                         " exceeds supported maximum " +
                         std::to_string(kMaxVertices));
    for (auto& [u, v] : edges) {
        check_label(u, n);
        check_label(v, n);
        if (u == v)
            throw ParseError("loop edge " + std::to_string(u) + " " +
                             std::to_string(v));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw ParseError("duplicate edge {" + std::to_string(dup->first) +
                         "," + std::to_string(dup->second) + "}");
    return Graph{n, std::move(edges)};
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::json) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
            !doc["n"].is_number_integer() || !doc["edges"].is_array())
            throw ParseError(
                "JSON graph must be an object {\"n\": int, \"edges\": [[i,j],...]}");
        int n = doc["n"].get<int>();
        std::vector<Edge> edges;
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw ParseError("each edge must be a pair [i,j] of integers");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return make_graph(n, std::move(edges));
    }

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        if (required)
            throw ParseError("unexpected end of input at line " +
                             std::to_string(lineno + 1));
        return false;
    };

    next_line(true);
    int n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw ParseError("malformed header at line " +
                             std::to_string(lineno) + ": expected \"n m\"");
    }
    if (m < 0) throw ParseError("edge count must be nonnegative");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        next_line(true);
        std::istringstream es(line);
        int u = 0, v = 0;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw ParseError("malformed line " + std::to_string(lineno) +
                             ": expected \"u v\"");
        edges.emplace_back(u, v);
    }
    if (next_line(false))
        throw ParseError("trailing content at line " + std::to_string(lineno) +
                         ": expected exactly " + std::to_string(m) + " edges");
    return make_graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::json) {
        nlohmann::json doc;
        doc["n"] = g.n;
        auto arr = nlohmann::json::array();
        for (const auto& [u, v] : g.edges) arr.push_back({u, v});
        doc["edges"] = arr;
        return doc.dump();
    }
    std::ostringstream out;
    out << g.n << " " << g.edges.size() << "\n";
    for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.n), 0);
    for (const auto& [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
        adj[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1} << (u - 1);
    }
    return adj;
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
    for (const auto& [u, v] : g.edges) {
        ++deg[static_cast<std::size_t>(u - 1)];
        ++deg[static_cast<std::size_t>(v - 1)];
    }
    return deg;
}

namespace {

// Reachable set of `start` inside `allowed` (bitmask BFS).
std::uint64_t reach(const std::vector<std::uint64_t>& adj, int start,
                    std::uint64_t allowed) {
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[static_cast<std::size_t>(v)] & allowed;
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen & (allowed | (std::uint64_t{1} << start));
}

bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t verts) {
    if (verts == 0) return true;
    int start = std::countr_zero(verts);
    return reach(adj, start, verts) == verts;
}

std::uint64_t all_vertices_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    return mask_connected(adjacency_masks(g), all_vertices_mask(g.n));
}

ComponentDecomposition connected_components(const Graph& g) {
    const auto adj = adjacency_masks(g);
    std::uint64_t remaining = all_vertices_mask(g.n);
    ComponentDecomposition out;
    while (remaining) {
        int start = std::countr_zero(remaining);
        std::uint64_t comp = reach(adj, start, remaining);
        remaining &= ~comp;

        Component c;
        std::vector<int> new_label(static_cast<std::size_t>(g.n) + 1, 0);
        std::uint64_t bits = comp;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            c.old_label.push_back(v + 1);
            new_label[static_cast<std::size_t>(v) + 1] =
                static_cast<int>(c.old_label.size());
        }
        std::vector<Edge> rel;
        for (const auto& [u, v] : g.edges) {
            if (comp & (std::uint64_t{1} << (u - 1))) {
                c.old_edges.emplace_back(u, v);
                rel.emplace_back(new_label[static_cast<std::size_t>(u)],
                                 new_label[static_cast<std::size_t>(v)]);
            }
        }
        c.graph = make_graph(static_cast<int>(c.old_label.size()), std::move(rel));
        out.components.push_back(std::move(c));
    }
    return out;
}

bool is_closed_labeling(const Graph& g) { return !closed_violation(g).has_value(); }

std::optional<std::array<int, 3>> closed_violation(const Graph& g) {
    const auto adj = adjacency_masks(g);
    auto has = [&](int a, int b) {
        return (adj[static_cast<std::size_t>(a - 1)] >> (b - 1)) & 1;
    };
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j)
            for (int k = j + 1; k <= g.n; ++k) {
                if (has(i, j) && has(i, k) && !has(j, k))
                    return std::array<int, 3>{i, j, k};
                if (has(i, k) && has(j, k) && !has(i, j))
                    return std::array<int, 3>{i, j, k};
            }
    return std::nullopt;
}

std::optional<std::vector<int>> find_closed_relabeling(const Graph& g) {
    if (g.n > 8)
        throw PreconditionError("relabeling search is brute force, n <= 8 only");
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<Edge> rel;
        rel.reserve(g.edges.size());
        for (const auto& [u, v] : g.edges)
            rel.emplace_back(perm[static_cast<std::size_t>(u - 1)],
                             perm[static_cast<std::size_t>(v - 1)]);
        if (is_closed_labeling(make_graph(g.n, std::move(rel)))) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

bool has_induced_k4(const Graph& g) {
    const auto adj = adjacency_masks(g);
    auto has = [&](int a, int b) { return (adj[static_cast<std::size_t>(a)] >> b) & 1; };
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (!has(a, b)) continue;
            for (int c = b + 1; c < g.n; ++c) {
                if (!has(a, c) || !has(b, c)) continue;
                for (int d = c + 1; d < g.n; ++d)
                    if (has(a, d) && has(b, d) && has(c, d)) return true;
            }
        }
    return false;
}

int vertex_connectivity(const Graph& g) {
    if (g.n < 2) throw PreconditionError("vertex connectivity needs n >= 2");
    if (!is_connected(g)) throw PreconditionError("vertex connectivity needs a connected graph");
    if (g.n > 16)
        throw PreconditionError("vertex connectivity is brute force, n <= 16 only");
    const auto adj = adjacency_masks(g);
    const std::uint64_t all = all_vertices_mask(g.n);
    if (g.edges.size() == static_cast<std::size_t>(g.n) * (g.n - 1) / 2)
        return g.n - 1; // complete graph convention
    // smallest k admitting a disconnecting cut; some k <= n-2 must work
    for (int k = 1; k <= g.n - 2; ++k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            std::uint64_t cut = 0;
            for (int v : pick) cut |= std::uint64_t{1} << v;
            if (!mask_connected(adj, all & ~cut)) return k;
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == g.n - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return g.n - 1; // unreachable for non-complete inputs
}

GraphClass classify(const Graph& g) {
    GraphClass c;
    const auto decomp = connected_components(g);
    c.is_connected = decomp.components.size() <= 1;
    const int m = static_cast<int>(g.edges.size());
    c.is_tree = c.is_connected && g.n >= 1 && m == g.n - 1;
    c.is_unicyclic = c.is_connected && m == g.n && g.n >= 3;
    c.is_pseudo_forest = true;
    for (const auto& comp : decomp.components)
        if (comp.graph.edges.size() > static_cast<std::size_t>(comp.graph.n))
            c.is_pseudo_forest = false;
    c.is_complete = g.n >= 1 && m == g.n * (g.n - 1) / 2;
    c.is_closed_under_labeling = is_closed_labeling(g);
    c.is_k4_free = !has_induced_k4(g);
    if (g.n == 0) {
        c.min_degree = 0;
    } else {
        const auto deg = degrees(g);
        c.min_degree = *std::min_element(deg.begin(), deg.end());
    }
    c.vertex_connectivity =
        (c.is_connected && g.n >= 2 && g.n <= 16) ? vertex_connectivity(g) : 0;
    return c;
}

Graph add_leaf(const Graph& g, int attach) {
    if (attach < 1 || attach > g.n)
        throw PreconditionError("leaf attachment vertex " + std::to_string(attach) +
                                " out of range 1.." + std::to_string(g.n));
    auto edges = g.edges;
    edges.emplace_back(attach, g.n + 1);
    return make_graph(g.n + 1, std::move(edges));
}

Graph add_handle(const Graph& g, int i, int j) {
    if (i == j) throw PreconditionError("handle endpoints must differ");
    if (i < 1 || i > g.n || j < 1 || j > g.n)
        throw PreconditionError("handle endpoints out of range 1.." +
                                std::to_string(g.n));
    auto edges = g.edges;
    edges.emplace_back(i, g.n + 1);
    edges.emplace_back(j, g.n + 1);
    return make_graph(g.n + 1, std::move(edges));
}

// ---- planarity (Kuratowski subdivision search, exact for n <= 8) --------

namespace {

// All internal-vertex sets S (masks within `free`) realizing a simple
// u-v path whose interior is exactly S, |S| <= 3.
std::vector<std::uint64_t> path_interiors(const std::vector<std::uint64_t>& adj,
                                          int u, int v, std::uint64_t free) {
    std::vector<std::uint64_t> out;
    auto has = [&](int a, int b) { return (adj[static_cast<std::size_t>(a)] >> b) & 1; };
    if (has(u, v)) out.push_back(0);
    std::vector<int> fv;
    for (std::uint64_t f = free; f;) {
        int w = std::countr_zero(f);
        f &= f - 1;
        fv.push_back(w);
    }
    const int fn = static_cast<int>(fv.size());
    for (int a = 0; a < fn; ++a)
        if (has(u, fv[a]) && has(fv[a], v))
            out.push_back(std::uint64_t{1} << fv[a]);
    for (int a = 0; a < fn; ++a)
        for (int b = 0; b < fn; ++b) {
            if (a == b) continue;
            if (has(u, fv[a]) && has(fv[a], fv[b]) && has(fv[b], v)) {
                std::uint64_t s = (std::uint64_t{1} << fv[a]) | (std::uint64_t{1} << fv[b]);
                if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
            }
        }
    for (int a = 0; a < fn; ++a)
        for (int b = 0; b < fn; ++b)
            for (int c = 0; c < fn; ++c) {
                if (a == b || a == c || b == c) continue;
                if (has(u, fv[a]) && has(fv[a], fv[b]) && has(fv[b], fv[c]) &&
                    has(fv[c], v)) {
                    std::uint64_t s = (std::uint64_t{1} << fv[a]) |
                                      (std::uint64_t{1} << fv[b]) |
                                      (std::uint64_t{1} << fv[c]);
                    if (std::find(out.begin(), out.end(), s) == out.end())
                        out.push_back(s);
                }
            }
    return out;
}

bool assign_disjoint(const std::vector<std::vector<std::uint64_t>>& options,
                     std::size_t idx, std::uint64_t used) {
    if (idx == options.size()) return true;
    for (std::uint64_t s : options[idx]) {
        if (s & used) continue;
        if (assign_disjoint(options, idx + 1, used | s)) return true;
    }
    return false;
}

// Is there a subdivision with the given branch vertices and required
// branch-pair connections?
bool subdivision_with_branches(const std::vector<std::uint64_t>& adj,
                               const std::vector<std::pair<int, int>>& pairs,
                               std::uint64_t branch, int n) {
    const std::uint64_t free = all_vertices_mask(n) & ~branch;
    std::vector<std::vector<std::uint64_t>> options;
    options.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        auto opt = path_interiors(adj, u, v, free);
        if (opt.empty()) return false;
        options.push_back(std::move(opt));
    }
    std::sort(options.begin(), options.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return assign_disjoint(options, 0, 0);
}

bool has_k5_subdivision(const Graph& g) {
    const auto adj = adjacency_masks(g);
    const auto deg = degrees(g);
    std::vector<int> cand;
    for (int v = 0; v < g.n; ++v)
        if (deg[static_cast<std::size_t>(v)] >= 4) cand.push_back(v);
    const int cn = static_cast<int>(cand.size());
    if (cn < 5) return false;
    for (int a = 0; a < cn; ++a)
        for (int b = a + 1; b < cn; ++b)
            for (int c = b + 1; c < cn; ++c)
                for (int d = c + 1; d < cn; ++d)
                    for (int e = d + 1; e < cn; ++e) {
                        int bs[5] = {cand[a], cand[b], cand[c], cand[d], cand[e]};
                        std::uint64_t branch = 0;
                        for (int v : bs) branch |= std::uint64_t{1} << v;
                        std::vector<std::pair<int, int>> pairs;
                        for (int i = 0; i < 5; ++i)
                            for (int j = i + 1; j < 5; ++j)
                                pairs.emplace_back(bs[i], bs[j]);
                        if (subdivision_with_branches(adj, pairs, branch, g.n))
                            return true;
                    }
    return false;
}

bool has_k33_subdivision(const Graph& g) {
    const auto adj = adjacency_masks(g);
    const auto deg = degrees(g);
    std::vector<int> cand;
    for (int v = 0; v < g.n; ++v)
        if (deg[static_cast<std::size_t>(v)] >= 3) cand.push_back(v);
    const int cn = static_cast<int>(cand.size());
    if (cn < 6) return false;
    std::vector<int> pick(6);
    std::vector<int> idx(6);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        for (int i = 0; i < 6; ++i) pick[static_cast<std::size_t>(i)] = cand[idx[static_cast<std::size_t>(i)]];
        std::uint64_t branch = 0;
        for (int v : pick) branch |= std::uint64_t{1} << v;
        // split six branch vertices into two sides of three; fix pick[0] on side A
        for (int x = 1; x < 6; ++x)
            for (int y = x + 1; y < 6; ++y) {
                std::vector<std::pair<int, int>> pairs;
                std::vector<int> sideA{pick[0], pick[static_cast<std::size_t>(x)], pick[static_cast<std::size_t>(y)]};
                std::vector<int> sideB;
                for (int i = 1; i < 6; ++i)
                    if (i != x && i != y) sideB.push_back(pick[static_cast<std::size_t>(i)]);
                for (int u : sideA)
                    for (int v : sideB) pairs.emplace_back(u, v);
                if (subdivision_with_branches(adj, pairs, branch, g.n)) return true;
            }
        int i = 5;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == cn - 6 + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < 6; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return false;
}

} // namespace

Planarity planarity(const Graph& g) {
    if (g.n > 8) return Planarity::unknown;
    if (g.n <= 4) return Planarity::planar;
    if (static_cast<int>(g.edges.size()) > 3 * g.n - 6) return Planarity::nonplanar;
    if (has_k5_subdivision(g) || has_k33_subdivision(g)) return Planarity::nonplanar;
    return Planarity::planar;
}

// ---- families -----------------------------------------------------------

Graph path_graph(int n) {
    if (n < 1) throw PreconditionError("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return make_graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 1) throw PreconditionError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return make_graph(n, std::move(edges));
}

namespace {

// Random tree on the given labels via a Pruefer sequence.
std::vector<Edge> random_tree_on(const std::vector<int>& labels, Rng& rng) {
    const int n = static_cast<int>(labels.size());
    std::vector<Edge> edges;
    if (n <= 1) return edges;
    if (n == 2) {
        edges.emplace_back(labels[0], labels[1]);
        return edges;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& s : seq) s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++deg[static_cast<std::size_t>(s)];
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int s : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) {
                leaf = v;
                break;
            }
        edges.emplace_back(labels[static_cast<std::size_t>(leaf)],
                           labels[static_cast<std::size_t>(s)]);
        used[static_cast<std::size_t>(leaf)] = true;
        --deg[static_cast<std::size_t>(s)];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1)
            last.push_back(v);
    edges.emplace_back(labels[static_cast<std::size_t>(last[0])],
                       labels[static_cast<std::size_t>(last[1])]);
    return edges;
}

std::vector<int> identity_labels(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    return labels;
}

Edge random_non_edge(const Graph& g, Rng& rng) {
    std::vector<Edge> non;
    const auto adj = adjacency_masks(g);
    for (int u = 1; u <= g.n; ++u)
        for (int v = u + 1; v <= g.n; ++v)
            if (!((adj[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1))
                non.emplace_back(u, v);
    return non[static_cast<std::size_t>(rng.below(non.size()))];
}

} // namespace

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("tree needs n >= 1");
    Rng rng(seed);
    Graph g = make_graph(n, random_tree_on(identity_labels(n), rng));
    const auto c = classify(g);
    if (!c.is_tree) throw std::logic_error("random_tree produced a non-tree");
    return g;
}

Graph random_connected(int n, int m, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("random_connected needs n >= 1");
    if (m < n - 1 || m > n * (n - 1) / 2)
        throw PreconditionError("edge count " + std::to_string(m) +
                                " infeasible for a connected graph on " +
                                std::to_string(n) + " vertices");
    Rng rng(seed);
    auto edges = random_tree_on(identity_labels(n), rng);
    Graph g = make_graph(n, std::move(edges));
    while (static_cast<int>(g.edges.size()) < m) {
        auto e = random_non_edge(g, rng);
        auto es = g.edges;
        es.push_back(e);
        g = make_graph(n, std::move(es));
    }
    if (!classify(g).is_connected)
        throw std::logic_error("random_connected produced a disconnected graph");
    return g;
}

Graph random_unicyclic(int n, std::uint64_t seed) {
    if (n < 3) throw PreconditionError("unicyclic needs n >= 3");
    Rng rng(seed);
    auto edges = random_tree_on(identity_labels(n), rng);
    Graph tree = make_graph(n, std::move(edges));
    auto extra = random_non_edge(tree, rng);
    auto es = tree.edges;
    es.push_back(extra);
    Graph g = make_graph(n, std::move(es));
    if (!classify(g).is_unicyclic)
        throw std::logic_error("random_unicyclic produced a non-unicyclic graph");
    return g;
}

Graph random_pseudo_forest(int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("pseudo-forest needs n >= 1");
    Rng rng(seed);
    auto labels = identity_labels(n);
    rng.shuffle(labels);
    std::vector<Edge> edges;
    std::size_t pos = 0;
    while (pos < labels.size()) {
        std::size_t left = labels.size() - pos;
        std::size_t size = 1 + static_cast<std::size_t>(rng.below(std::min<std::uint64_t>(left, 7)));
        std::vector<int> block(labels.begin() + static_cast<std::ptrdiff_t>(pos),
                               labels.begin() + static_cast<std::ptrdiff_t>(pos + size));
        pos += size;
        auto tree_edges = random_tree_on(block, rng);
        if (block.size() >= 3 && rng.below(2) == 1) {
            // close one extra edge inside the block: unicyclic component
            Graph bg = make_graph(n, tree_edges);
            std::vector<Edge> non;
            const auto adj = adjacency_masks(bg);
            for (std::size_t a = 0; a < block.size(); ++a)
                for (std::size_t b = a + 1; b < block.size(); ++b) {
                    int u = std::min(block[a], block[b]);
                    int v = std::max(block[a], block[b]);
                    if (!((adj[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1))
                        non.emplace_back(u, v);
                }
            tree_edges.push_back(non[static_cast<std::size_t>(rng.below(non.size()))]);
        }
        edges.insert(edges.end(), tree_edges.begin(), tree_edges.end());
    }
    Graph g = make_graph(n, std::move(edges));
    if (!classify(g).is_pseudo_forest)
        throw std::logic_error("random_pseudo_forest produced a bad graph");
    return g;
}

Graph random_min_degree(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d > n - 1)
        throw PreconditionError("min-degree family needs 0 <= d <= n-1");
    Rng rng(seed);
    Graph g = make_graph(n, {});
    for (;;) {
        auto deg = degrees(g);
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] < d && (u == -1 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(u)]))
                u = v;
        if (u == -1) break;
        const auto adj = adjacency_masks(g);
        std::vector<int> cands, needy;
        for (int v = 0; v < n; ++v) {
            if (v == u || ((adj[static_cast<std::size_t>(u)] >> v) & 1)) continue;
            cands.push_back(v);
            if (deg[static_cast<std::size_t>(v)] < d) needy.push_back(v);
        }
        const auto& pool = needy.empty() ? cands : needy;
        int v = pool[static_cast<std::size_t>(rng.below(pool.size()))];
        auto es = g.edges;
        es.emplace_back(std::min(u, v) + 1, std::max(u, v) + 1);
        g = make_graph(n, std::move(es));
    }
    // join components without disturbing degrees
    for (;;) {
        auto decomp = connected_components(g);
        if (decomp.components.size() <= 1) break;
        int u = decomp.components[0].old_label[0];
        int v = decomp.components[1].old_label[0];
        auto es = g.edges;
        es.emplace_back(std::min(u, v), std::max(u, v));
        g = make_graph(n, std::move(es));
    }
    const auto c = classify(g);
    if (!c.is_connected || c.min_degree < d)
        throw std::logic_error("random_min_degree produced a bad graph");
    return g;
}

} // namespace spreadlab
