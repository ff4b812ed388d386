#include "gcanon/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gcanon {

Graph Graph::empty_graph() { return Graph(); }

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

}  // namespace

int Graph::num_components() const {
    if (v == 0) return 0;
    UnionFind uf(v);
    int comps = v;
    for (auto& [t, h] : edges)
        if (uf.unite(t, h)) comps--;
    return comps;
}

int Graph::loops() const { return e() - v + num_components(); }

bool Graph::is_connected() const { return v > 0 && num_components() == 1; }

std::vector<int> Graph::degrees() const {
    std::vector<int> d(v, 0);
    for (auto& [t, h] : edges) {
        d[t]++;
        d[h]++;
    }
    return d;
}

int Graph::min_degree() const {
    auto d = degrees();
    return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

bool Graph::has_tadpole() const {
    for (auto& [t, h] : edges)
        if (t == h) return true;
    return false;
}

bool Graph::has_multi_edge() const {
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (auto& [t, h] : edges) norm.emplace_back(std::min(t, h), std::max(t, h));
    std::sort(norm.begin(), norm.end());
    return std::adjacent_find(norm.begin(), norm.end()) != norm.end();
}

Graph contract(const Graph& g, int edge) {
    if (edge < 0 || edge >= g.e()) throw std::out_of_range("contract: bad edge index");
    auto [a, b] = g.edges[edge];
    Graph out;
    if (a == b) {
        // Contracting a tadpole just removes the edge.
        out.v = g.v;
        for (int i = 0; i < g.e(); i++)
            if (i != edge) out.edges.push_back(g.edges[i]);
        return out;
    }
    int lo = std::min(a, b), hi = std::max(a, b);
    auto remap = [&](int x) {
        if (x == hi) return lo;
        return x > hi ? x - 1 : x;
    };
    out.v = g.v - 1;
    for (int i = 0; i < g.e(); i++) {
        if (i == edge) continue;
        out.edges.emplace_back(remap(g.edges[i].first), remap(g.edges[i].second));
    }
    return out;
}

Graph contract_kill_loops(const Graph& g, int edge) {
    if (edge < 0 || edge >= g.e()) throw std::out_of_range("contract: bad edge index");
    if (g.edges[edge].first == g.edges[edge].second) return Graph::empty_graph();
    return contract(g, edge);
}

Graph contract_subgraph(const Graph& g, const std::vector<int>& edge_set) {
    // h_gamma > 0 iff some contraction step hits a tadpole.
    Graph cur = g;
    std::vector<int> es = edge_set;
    std::sort(es.begin(), es.end(), std::greater<int>());
    for (int e : es) {
        if (cur.edges[e].first == cur.edges[e].second) return Graph::empty_graph();
        cur = contract(cur, e);
    }
    return cur;
}

Graph delete_edge(const Graph& g, int edge) {
    if (edge < 0 || edge >= g.e()) throw std::out_of_range("delete: bad edge index");
    Graph out;
    out.v = g.v;
    for (int i = 0; i < g.e(); i++)
        if (i != edge) out.edges.push_back(g.edges[i]);
    return out;
}

Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_set) {
    std::vector<int> used(g.v, -1);
    int nv = 0;
    std::vector<int> es = edge_set;
    std::sort(es.begin(), es.end());
    for (int e : es) {
        for (int x : {g.edges[e].first, g.edges[e].second})
            if (used[x] < 0) used[x] = 0;
    }
    for (int x = 0; x < g.v; x++)
        if (used[x] == 0) used[x] = nv++;
    Graph out;
    out.v = nv;
    for (int e : es) out.edges.emplace_back(used[g.edges[e].first], used[g.edges[e].second]);
    return out;
}

bool is_bridge(const Graph& g, int edge) {
    if (g.edges[edge].first == g.edges[edge].second) return false;
    return delete_edge(g, edge).num_components() > g.num_components();
}

bool is_core(const Graph& g) {
    for (int i = 0; i < g.e(); i++)
        if (is_bridge(g, i)) return false;
    return true;
}

bool is_one_vertex_reducible(const Graph& g) {
    if (!g.is_connected()) return true;
    if (g.e() < 2) return false;
    if (g.has_tadpole() && g.e() >= 2) return true;
    // Articulation vertex <=> the edge set splits at one vertex.
    for (int w = 0; w < g.v; w++) {
        UnionFind uf(g.v);
        int others = g.v - 1;
        for (auto& [t, h] : g.edges) {
            if (t == w || h == w) continue;
            if (uf.unite(t, h)) others--;
        }
        // Count components among vertices != w that carry at least one
        // neighbour of w.
        std::vector<int> comps;
        for (auto& [t, h] : g.edges) {
            for (int x : {t, h}) {
                int y = (x == t) ? h : t;
                (void)y;
            }
        }
        std::vector<int> seen;
        int parts = 0;
        for (auto& [t, h] : g.edges) {
            int x = -1;
            if (t == w && h != w) x = h;
            if (h == w && t != w) x = t;
            if (x < 0) continue;
            int r = uf.find(x);
            if (std::find(seen.begin(), seen.end(), r) == seen.end()) {
                seen.push_back(r);
                parts++;
            }
        }
        if (parts >= 2) return true;
    }
    return false;
}

std::vector<std::vector<int>> spanning_trees(const Graph& g) {
    if (!g.is_connected()) throw std::domain_error("spanning_trees: disconnected graph");
    int n = g.v, m = g.e();
    int need = n - 1;
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    std::function<void(int, UnionFind&)> rec = [&](int start, UnionFind& uf) {
        if (int(pick.size()) == need) {
            out.push_back(pick);
            return;
        }
        // Not enough edges left to finish.
        if (m - start < need - int(pick.size())) return;
        for (int e = start; e < m; e++) {
            auto [a, b] = g.edges[e];
            if (a == b) continue;
            UnionFind nuf = uf;
            if (!nuf.unite(a, b)) continue;
            pick.push_back(e);
            rec(e + 1, nuf);
            pick.pop_back();
        }
    };
    UnionFind uf(n);
    rec(0, uf);
    return out;
}

std::vector<std::vector<int>> cycle_basis(const Graph& g) {
    if (!g.is_connected()) throw std::domain_error("cycle_basis: disconnected graph");
    int n = g.v, m = g.e();
    UnionFind uf(n);
    std::vector<bool> in_tree(m, false);
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge, other endpoint)
    for (int e = 0; e < m; e++) {
        auto [a, b] = g.edges[e];
        if (a != b && uf.unite(a, b)) {
            in_tree[e] = true;
            adj[a].emplace_back(e, b);
            adj[b].emplace_back(e, a);
        }
    }
    std::vector<std::vector<int>> H(m);
    int h = 0;
    for (int e = 0; e < m; e++)
        if (!in_tree[e]) h++;
    for (int e = 0; e < m; e++) H[e].assign(h, 0);

    // BFS parents from each non-tree edge head back to its tail.
    int col = 0;
    for (int e = 0; e < m; e++) {
        if (in_tree[e]) continue;
        auto [t, hd] = g.edges[e];
        H[e][col] = 1;
        if (t != hd) {
            std::vector<int> par_edge(n, -1), par_vert(n, -1);
            std::vector<bool> vis(n, false);
            std::queue<int> q;
            q.push(hd);
            vis[hd] = true;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                if (x == t) break;
                for (auto& [fe, y] : adj[x]) {
                    if (!vis[y]) {
                        vis[y] = true;
                        par_edge[y] = fe;
                        par_vert[y] = x;
                        q.push(y);
                    }
                }
            }
            int cur = t;
            while (cur != hd) {
                int fe = par_edge[cur], prev = par_vert[cur];
                // Walk direction is prev -> cur reversed: path runs hd -> t,
                // so the step here is prev -> cur with cur closer to t.
                if (g.edges[fe] == std::make_pair(prev, cur))
                    H[fe][col] += 1;
                else
                    H[fe][col] -= 1;
                cur = prev;
            }
        }
        col++;
    }
    return H;
}

std::vector<std::vector<int>> incidence_matrix(const Graph& g) {
    std::vector<std::vector<int>> d(g.v, std::vector<int>(g.e(), 0));
    for (int e = 0; e < g.e(); e++) {
        auto [t, h] = g.edges[e];
        if (t == h) continue;
        d[h][e] += 1;
        d[t][e] -= 1;
    }
    return d;
}

Graph subdivide_edge(const Graph& g, int edge) {
    auto [t, h] = g.edges[edge];
    Graph out;
    out.v = g.v + 1;
    int mid = g.v;
    for (int i = 0; i < g.e(); i++) {
        if (i == edge) {
            out.edges.emplace_back(t, mid);
            out.edges.emplace_back(mid, h);
        } else {
            out.edges.push_back(g.edges[i]);
        }
    }
    return out;
}

Graph duplicate_edge(const Graph& g, int edge) {
    Graph out;
    out.v = g.v;
    for (int i = 0; i < g.e(); i++) {
        out.edges.push_back(g.edges[i]);
        if (i == edge) out.edges.push_back(g.edges[i]);
    }
    return out;
}

Graph one_vertex_join(const Graph& g1, int w1, const Graph& g2, int w2) {
    Graph out;
    out.v = g1.v + g2.v - 1;
    out.edges = g1.edges;
    auto remap = [&](int x) {
        if (x == w2) return w1;
        int y = x > w2 ? x - 1 : x;
        return g1.v + y;
    };
    for (auto& [t, h] : g2.edges) out.edges.emplace_back(remap(t), remap(h));
    return out;
}

Graph wheel(int n) {
    if (n < 3) throw std::domain_error("wheel: need n >= 3");
    Graph g;
    g.v = n + 1;
    // Rim first (edges 1..n in the 1-based numbering of the text), oriented
    // around the cycle, then spokes oriented hub-outward.  The spoke at
    // position n+j ends on rim vertex (j+2) mod n, which reproduces the
    // W_3 labelling used for the worked 3-spoke example.
    for (int i = 0; i < n; i++) g.edges.emplace_back(i, (i + 1) % n);
    for (int j = 0; j < n; j++) g.edges.emplace_back(n, (j + 2) % n);
    g.label = "W" + std::to_string(n);
    return g;
}

Graph wheel_dual(int n) {
    // Faces: triangles T_0..T_{n-1} (T_i lies between rim vertices i, i+1)
    // and the outer face O = n.  Dual edge i crosses primal edge i.
    Graph g;
    g.v = n + 1;
    for (int i = 0; i < n; i++) g.edges.emplace_back(i, n);  // dual of rim edge i
    for (int j = 0; j < n; j++)
        g.edges.emplace_back((j + 1) % n, (j + 2) % n);  // dual of spoke n+j
    g.label = "W" + std::to_string(n) + "dual";
    return g;
}

Graph complete_graph(int n) {
    if (n < 2) throw std::domain_error("complete_graph: need n >= 2");
    Graph g;
    g.v = n;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) g.edges.emplace_back(i, j);
    g.label = "K" + std::to_string(n);
    return g;
}

Graph banana(int n) {
    if (n < 1) throw std::domain_error("banana: need n >= 1");
    Graph g;
    g.v = 2;
    for (int i = 0; i < n; i++) g.edges.emplace_back(0, 1);
    g.label = "banana" + std::to_string(n);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 1) throw std::domain_error("cycle_graph: need n >= 1");
    Graph g;
    g.v = n;
    for (int i = 0; i < n; i++) g.edges.emplace_back(i, (i + 1) % n);
    g.label = "C" + std::to_string(n);
    return g;
}

static Graph zigzag_z5() {
    // Zigzag: hamiltonian path 0..5, chords (i, i+2), closing edge (5,0).
    // The first two path edges are stored swapped so that the canonical
    // integral of w9 is positive.
    Graph g;
    g.v = 6;
    g.edges = {{1, 2}, {0, 1}, {2, 3}, {3, 4}, {4, 5},
               {0, 2}, {1, 3}, {2, 4}, {3, 5}, {5, 0}};
    g.label = "Z5";
    return g;
}

static Graph join_t5() {
    // Two K4's sharing the vertex pair {0,1}, with the shared edge removed.
    Graph g;
    g.v = 6;
    g.edges = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
               {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}};
    g.label = "T5";
    return g;
}

static Graph x5_graph() {
    // The unique generator of the (h=5, e=11) stratum, in canonical edge
    // order.  With the stored orientations of Z5 and W5 its contraction
    // boundary is exactly 2*Z5 - W5.
    Graph g;
    g.v = 7;
    g.edges = {{0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 5}, {1, 6},
               {2, 3}, {2, 4}, {2, 6}, {3, 6}, {4, 5}};
    g.label = "X5";
    return g;
}

// Fixture orientations are normalised so that the worked canonical
// integrals come out positive and dX5 = 2*Z5 - W5 holds exactly; an odd
// transposition of two edges flips a class's sign in the graph complex.
static Graph swap_first_two(Graph g) {
    std::swap(g.edges[0], g.edges[1]);
    return g;
}

Graph fixture(const std::string& name) {
    if (name == "W3") return wheel(3);
    if (name == "W5") return swap_first_two(wheel(5));
    if (name == "W7") return wheel(7);
    if (name == "Z5") return zigzag_z5();
    if (name == "T5") return join_t5();
    if (name == "X5") return x5_graph();
    if (name == "K6") return swap_first_two(complete_graph(6));
    if (name.rfind("banana", 0) == 0 && name.size() > 6) {
        int n = std::stoi(name.substr(6));
        return banana(n);
    }
    throw std::domain_error("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
    return {"W3", "W5", "W7", "Z5", "T5", "X5", "K6", "banana<n>"};
}

std::string Graph::to_json() const {
    nlohmann::json j;
    j["v"] = v;
    j["edges"] = nlohmann::json::array();
    for (auto& [t, h] : edges) j["edges"].push_back({t, h});
    if (label) j["label"] = *label;
    return j.dump();
}

Graph Graph::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Graph g;
    g.v = j.at("v").get<int>();
    for (auto& e : j.at("edges")) {
        int t = e.at(0).get<int>(), h = e.at(1).get<int>();
        if (t < 0 || t >= g.v || h < 0 || h >= g.v)
            throw std::domain_error("graph json: edge endpoint out of range");
        g.edges.emplace_back(t, h);
    }
    if (j.contains("label")) g.label = j["label"].get<std::string>();
    return g;
}

std::string Graph::to_dot() const {
    std::ostringstream os;
    os << "digraph G {\n";
    for (int i = 0; i < v; i++) os << "  " << i << ";\n";
    for (int e = 0; e < int(edges.size()); e++)
        os << "  " << edges[e].first << " -> " << edges[e].second << " [label=\"" << (e + 1)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace gcanon
