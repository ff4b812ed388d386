#include "gcanon/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gcanon {

int permutation_sign(const std::vector<int>& p) {
    int n = int(p.size());
    std::vector<bool> seen(n, false);
    int sign = 1;
    for (int i = 0; i < n; i++) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            len++;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

namespace {

struct LabelCtx {
    int n = 0;
    std::vector<std::vector<int>> mult;  // off-diagonal multiplicities
    std::vector<int> tad;                // tadpole counts

    // Serialized labelled form under perm (original -> new position).
    std::string trace(const std::vector<int>& perm) const {
        std::vector<int> inv(n);
        for (int i = 0; i < n; i++) inv[perm[i]] = i;
        std::string s;
        s.reserve(size_t(n) * (n + 1) / 2 + n);
        for (int i = 0; i < n; i++) s.push_back(char(tad[inv[i]]));
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++) s.push_back(char(mult[inv[i]][inv[j]]));
        return s;
    }
};

// Equitable refinement of a colouring (smaller colour = earlier cell).
// Colours are renumbered 0..k-1 after each pass.
void refine(const LabelCtx& ctx, std::vector<int>& color) {
    int n = ctx.n;
    for (;;) {
        // Signature: (old colour, multiset of (neighbour colour, mult)).
        std::vector<std::pair<std::vector<int>, int>> keyed(n);
        int ncol = 0;
        for (int i = 0; i < n; i++) ncol = std::max(ncol, color[i] + 1);
        for (int i = 0; i < n; i++) {
            std::vector<int> key;
            key.push_back(color[i]);
            std::vector<int> bycol(ncol, 0);
            for (int j = 0; j < n; j++)
                if (j != i && ctx.mult[i][j]) bycol[color[j]] += ctx.mult[i][j];
            for (int c = 0; c < ncol; c++) key.push_back(bycol[c]);
            keyed[i] = {std::move(key), i};
        }
        std::vector<int> order(n);
        for (int i = 0; i < n; i++) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return keyed[a].first < keyed[b].first; });
        std::vector<int> ncolor(n);
        int c = 0;
        for (int k = 0; k < n; k++) {
            if (k > 0 && keyed[order[k]].first != keyed[order[k - 1]].first) c++;
            ncolor[order[k]] = c;
        }
        if (ncolor == color) return;
        color = ncolor;
    }
}

struct SearchState {
    const LabelCtx* ctx;
    std::string best;
    bool have_best = false;
    std::vector<std::vector<int>> best_perms;  // all leaves achieving best

    void leaf(const std::vector<int>& color) {
        int n = ctx->n;
        std::vector<int> perm(n);
        for (int i = 0; i < n; i++) perm[i] = color[i];
        std::string t = ctx->trace(perm);
        if (!have_best || t < best) {
            best = t;
            have_best = true;
            best_perms.clear();
            best_perms.push_back(perm);
        } else if (t == best) {
            best_perms.push_back(perm);
        }
    }

    void descend(std::vector<int> color) {
        refine(*ctx, color);
        int n = ctx->n;
        // Find first non-singleton cell.
        std::vector<std::vector<int>> cells;
        int ncol = 0;
        for (int i = 0; i < n; i++) ncol = std::max(ncol, color[i] + 1);
        cells.assign(ncol, {});
        for (int i = 0; i < n; i++) cells[color[i]].push_back(i);
        int target = -1;
        for (int c = 0; c < ncol; c++)
            if (cells[c].size() > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            leaf(color);
            return;
        }
        for (int x : cells[target]) {
            // Individualize x: give it a colour just before its cell.
            std::vector<int> nc(n);
            for (int i = 0; i < n; i++) {
                int c2 = 2 * color[i] + 1;
                nc[i] = c2;
            }
            nc[x] = 2 * color[x];
            descend(std::move(nc));
        }
    }
};

LabelCtx make_ctx(const Graph& g) {
    LabelCtx ctx;
    ctx.n = g.v;
    ctx.mult.assign(g.v, std::vector<int>(g.v, 0));
    ctx.tad.assign(g.v, 0);
    for (auto& [t, h] : g.edges) {
        if (t == h)
            ctx.tad[t]++;
        else {
            ctx.mult[t][h]++;
            ctx.mult[h][t]++;
        }
    }
    return ctx;
}

std::vector<int> initial_color(const LabelCtx& ctx) {
    int n = ctx.n;
    std::vector<std::pair<std::pair<int, int>, int>> keyed(n);
    for (int i = 0; i < n; i++) {
        int deg = 2 * ctx.tad[i];
        for (int j = 0; j < n; j++)
            if (j != i) deg += ctx.mult[i][j];
        keyed[i] = {{deg, ctx.tad[i]}, i};
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; i++) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keyed[a].first < keyed[b].first; });
    std::vector<int> color(n);
    int c = 0;
    for (int k = 0; k < n; k++) {
        if (k > 0 && keyed[order[k]].first != keyed[order[k - 1]].first) c++;
        color[order[k]] = c;
    }
    return color;
}

// Edge list relabelled by perm, endpoint-normalized; order: by endpoint
// pair, parallel copies by original index.
std::vector<int> induced_edge_map(const Graph& g, const std::vector<int>& perm) {
    int m = g.e();
    std::vector<std::tuple<int, int, int>> lab(m);  // (a, b, orig index)
    for (int i = 0; i < m; i++) {
        int a = perm[g.edges[i].first], b = perm[g.edges[i].second];
        if (a > b) std::swap(a, b);
        lab[i] = {a, b, i};
    }
    std::vector<int> order(m);
    for (int i = 0; i < m; i++) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return lab[x] < lab[y]; });
    std::vector<int> emap(m);
    for (int pos = 0; pos < m; pos++) emap[order[pos]] = pos;
    return emap;
}

}  // namespace

IsoCertificate canonical_certificate(const Graph& g) {
    IsoCertificate cert;
    if (g.v == 0) {
        cert.canonical_key = "empty";
        cert.canonical_graph = Graph::empty_graph();
        return cert;
    }
    LabelCtx ctx = make_ctx(g);
    SearchState st;
    st.ctx = &ctx;
    st.descend(initial_color(ctx));

    const std::vector<int>& perm = st.best_perms.front();
    cert.vertex_map = perm;
    cert.edge_map = induced_edge_map(g, perm);
    cert.edge_sign = permutation_sign(cert.edge_map);

    Graph canon;
    canon.v = g.v;
    canon.edges.resize(g.e());
    for (int i = 0; i < g.e(); i++) {
        int a = perm[g.edges[i].first], b = perm[g.edges[i].second];
        if (a > b) std::swap(a, b);
        canon.edges[cert.edge_map[i]] = {a, b};
    }
    cert.canonical_graph = canon;

    std::string key = std::to_string(g.v) + ";";
    for (auto& [a, b] : canon.edges) key += std::to_string(a) + "," + std::to_string(b) + ";";
    cert.canonical_key = key;
    return cert;
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
    if (g.v == 0) return {{}};
    LabelCtx ctx = make_ctx(g);
    SearchState st;
    st.ctx = &ctx;
    st.descend(initial_color(ctx));
    // Leaves with the minimal trace form the coset Aut(g) . sigma0.
    std::vector<std::vector<int>> auts;
    const std::vector<int>& s0 = st.best_perms.front();
    std::vector<int> inv0(g.v);
    for (int i = 0; i < g.v; i++) inv0[s0[i]] = i;
    for (const auto& s : st.best_perms) {
        std::vector<int> pi(g.v);
        for (int i = 0; i < g.v; i++) pi[i] = inv0[s[i]];
        auts.push_back(pi);
    }
    return auts;
}

bool has_odd_automorphism(const Graph& g) {
    if (g.has_multi_edge()) return true;  // swap a parallel pair
    for (const auto& pi : automorphisms(g)) {
        std::vector<int> emap = {};
        // Simple graph here: the edge permutation is forced by pi.
        int m = g.e();
        std::vector<std::tuple<int, int, int>> lab(m);
        for (int i = 0; i < m; i++) {
            int a = pi[g.edges[i].first], b = pi[g.edges[i].second];
            if (a > b) std::swap(a, b);
            lab[i] = {a, b, i};
        }
        // Match each relabelled edge with the identically-placed original.
        std::map<std::pair<int, int>, int> pos;
        for (int i = 0; i < m; i++) {
            int a = std::min(g.edges[i].first, g.edges[i].second);
            int b = std::max(g.edges[i].first, g.edges[i].second);
            pos[{a, b}] = i;
        }
        emap.resize(m);
        for (int i = 0; i < m; i++) {
            auto it = pos.find({std::get<0>(lab[i]), std::get<1>(lab[i])});
            if (it == pos.end()) throw std::logic_error("automorphism does not preserve edges");
            emap[i] = it->second;
        }
        if (permutation_sign(emap) < 0) return true;
    }
    return false;
}

}  // namespace gcanon
