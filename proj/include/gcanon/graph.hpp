#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gcanon {

// Finite multigraph with ordered, oriented edges.  The position of an edge
// in `edges` is its index; this ordering doubles as the orientation, so
// every operation that removes an edge documents the induced reordering.
struct Graph {
    int v = 0;
    std::vector<std::pair<int, int>> edges;  // (tail, head)
    std::optional<std::string> label;

    Graph() = default;
    Graph(int nv, std::vector<std::pair<int, int>> es, std::optional<std::string> lab = {})
        : v(nv), edges(std::move(es)), label(std::move(lab)) {}

    static Graph empty_graph();  // the contraction-of-a-loop sentinel
    bool is_empty() const { return v == 0 && edges.empty(); }

    int e() const { return int(edges.size()); }
    int loops() const;  // h = e - v + (#components)
    int num_components() const;
    bool is_connected() const;
    std::vector<int> degrees() const;  // tadpoles count twice
    int min_degree() const;
    bool has_tadpole() const;
    bool has_multi_edge() const;
    int graph_degree() const { return e() - 2 * loops(); }

    std::string to_json() const;
    static Graph from_json(const std::string& text);
    std::string to_dot() const;
};

Graph contract(const Graph& g, int edge);
// Empty sentinel when the edge is a tadpole (contraction kills loops).
Graph contract_kill_loops(const Graph& g, int edge);
// Contract every edge in the sorted subset; empty sentinel if the subset
// contains a cycle.
Graph contract_subgraph(const Graph& g, const std::vector<int>& edge_set);
Graph delete_edge(const Graph& g, int edge);

// Induced subgraph on an edge subset; keeps only vertices met by the subset
// (isolated vertices dropped), edges in original order.
Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_set);

bool is_bridge(const Graph& g, int edge);
bool is_core(const Graph& g);  // no bridges
// One-vertex-reducible: some vertex disconnects the edge set (or the graph
// is a disjoint union).  Tadpole-free connected graphs only.
bool is_one_vertex_reducible(const Graph& g);

std::vector<std::vector<int>> spanning_trees(const Graph& g);

// Columns are fundamental cycles of the greedy lowest-edge-index spanning
// tree; entries in {-1,0,1}; e x h.
std::vector<std::vector<int>> cycle_basis(const Graph& g);

// Signed vertex-edge incidence: (v x e), +1 at head, -1 at tail, 0 else
// (tadpole columns are zero).
std::vector<std::vector<int>> incidence_matrix(const Graph& g);

// Replace edge `e` by two edges in series through a fresh vertex.  The two
// halves are appended at positions e and e+1 of the new ordering (remaining
// edges shift up by one).
Graph subdivide_edge(const Graph& g, int edge);
// Add a parallel copy of edge `e` right after it.
Graph duplicate_edge(const Graph& g, int edge);
// Glue g2's vertex w2 onto g1's vertex w1; g2 edges appended after g1's.
Graph one_vertex_join(const Graph& g1, int w1, const Graph& g2, int w2);

Graph wheel(int n);           // paper labelling: rim edges 1..n, spokes n+1..2n
Graph complete_graph(int n);  // edges (i,j), i<j, lexicographic
Graph banana(int n);          // 2 vertices, n parallel edges
Graph cycle_graph(int n);
Graph wheel_dual(int n);      // planar dual of wheel(n), edge i dual to edge i

// Named fixtures: W3 W5 W7 Z5 T5 X5 K6 banana<n>.
Graph fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace gcanon
