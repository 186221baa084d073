#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spreadlab {

/// Vertices carry the labels 1..n. An edge is stored with first < second.
/// Labels are semantic, not cosmetic: closedness depends on them.
using Edge = std::pair<int, int>;

/// Desk-scale tool; adjacency lives in 64-bit masks.
inline constexpr int kMaxVertices = 64;

struct Graph {
    int n = 0;               // vertex count, labels 1..n
    std::vector<Edge> edges; // sorted lexicographically, duplicate-free
};

/// Validating constructor: normalizes pair order, sorts, and rejects loops,
/// duplicates and out-of-range labels.
Graph make_graph(int n, std::vector<Edge> edges);

enum class GraphFormat { edge_list, json };

/// Edge-list format: first line "n m", then m lines "u v" (1-based labels).
/// JSON format: {"n": int, "edges": [[i,j], ...]}.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

// ---- structure ----------------------------------------------------------

struct Component {
    Graph graph;                 // relabeled onto 1..n_i, order preserving
    std::vector<int> old_label;  // old_label[v-1] = label in the parent graph
    std::vector<Edge> old_edges; // this component's edges in parent labels
};

struct ComponentDecomposition {
    std::vector<Component> components; // ordered by smallest parent label
};

ComponentDecomposition connected_components(const Graph& g);

bool is_connected(const Graph& g);
std::vector<int> degrees(const Graph& g);
std::vector<std::uint64_t> adjacency_masks(const Graph& g); // bit v-1 = vertex v

struct GraphClass {
    bool is_connected = false;
    bool is_tree = false;
    bool is_unicyclic = false;
    bool is_pseudo_forest = false;
    bool is_complete = false;
    bool is_closed_under_labeling = false;
    bool is_k4_free = false;
    int min_degree = 0;
    int vertex_connectivity = 0; // 0 when disconnected or n < 2
};

GraphClass classify(const Graph& g);

/// Closedness of the labeling as given: for every i < j < k, the presence of
/// {i,j} and {i,k} forces {j,k}, and the presence of {i,k} and {j,k} forces
/// {i,j}. This is exactly the condition under which the x_i y_j lead the
/// edge binomials in a quadratic Groebner basis for the diagonal lex order.
bool is_closed_labeling(const Graph& g);

/// First violating triple (i,j,k), lexicographically, or nullopt.
std::optional<std::array<int, 3>> closed_violation(const Graph& g);

/// Brute force over all n! relabelings (n <= 8): a permutation new_label
/// with new_label[old-1] under which the graph is closed, if one exists.
std::optional<std::vector<int>> find_closed_relabeling(const Graph& g);

/// True iff some 4 vertices span all 6 edges. For cliques, induced and
/// subgraph containment coincide.
bool has_induced_k4(const Graph& g);

/// Largest t such that removing any vertex set of size < t leaves the graph
/// connected; n-1 for complete graphs. Requires g connected, 2 <= n <= 16
/// (brute force over cut sets).
int vertex_connectivity(const Graph& g);

/// Result has n+1 vertices and the one extra edge {attach, n+1}.
Graph add_leaf(const Graph& g, int attach);

/// Result has n+1 vertices and the two extra edges {i,n+1}, {j,n+1}.
Graph add_handle(const Graph& g, int i, int j);

enum class Planarity { planar, nonplanar, unknown };

/// Exact for n <= 8 via Kuratowski subdivision search; unknown above.
Planarity planarity(const Graph& g);

// ---- families -----------------------------------------------------------
// Random families draw from the single seed and are verified against their
// advertised class before being returned.

Graph path_graph(int n);     // n >= 1
Graph cycle_graph(int n);    // n >= 3
Graph complete_graph(int n); // n >= 1
Graph random_tree(int n, std::uint64_t seed);
Graph random_connected(int n, int m, std::uint64_t seed); // n-1 <= m <= n(n-1)/2
Graph random_unicyclic(int n, std::uint64_t seed);        // n >= 3
Graph random_pseudo_forest(int n, std::uint64_t seed);
Graph random_min_degree(int n, int d, std::uint64_t seed); // connected, min degree >= d

} // namespace spreadlab
