#include "gcanon/strata.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>

#include "gcanon/canonical.hpp"
#include "json.hpp"

namespace gcanon {

int stratum_min_edges(int h) { return h + 3; }
int stratum_max_edges(int h) { return 3 * (h - 1); }

namespace {

// Backtracking enumerator of simple graphs with a fixed descending degree
// sequence, one representative per isomorphism class: only adjacency
// matrices that are lexicographically maximal (column-major upper triangle)
// under degree-preserving vertex permutations are kept.
//
// Columns are filled left to right.  Rows whose transposition provably
// fixes the completed part of the matrix are grouped into classes; inside a
// class the current column may only set a prefix of the members to 1,
// otherwise the swap of two class members would produce a lex-greater
// matrix.  A full permutation search at the leaves makes the output exact.
struct OrderlyGen {
    int v;
    std::vector<int> deg;             // descending
    std::vector<std::vector<int>> A;  // 0/1 adjacency
    std::vector<int> residual;
    std::vector<Graph> out;

    bool exists_greater_perm() const {
        std::vector<int> pos(v, -1);
        std::vector<bool> used(v, false);
        std::function<bool(int)> rec = [&](int s) -> bool {
            if (s == v) return false;  // equal everywhere: an automorphism
            for (int u = 0; u < v; u++) {
                if (used[u] || deg[u] != deg[s]) continue;
                int cmp = 0;
                for (int r = 0; r < s; r++) {
                    int b = A[pos[r]][u];
                    if (b != A[r][s]) {
                        cmp = b > A[r][s] ? 1 : -1;
                        break;
                    }
                }
                if (cmp == 1) return true;
                if (cmp == -1) continue;
                pos[s] = u;
                used[u] = true;
                if (rec(s + 1)) return true;
                used[u] = false;
                pos[s] = -1;
            }
            return false;
        };
        return rec(0);
    }

    bool connected() const {
        std::vector<int> stack{0}, seen(v, 0);
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < v; y++)
                if (A[x][y] && !seen[y]) {
                    seen[y] = 1;
                    cnt++;
                    stack.push_back(y);
                }
        }
        return cnt == v;
    }

    void leaf() {
        for (int r = 0; r < v; r++)
            if (residual[r] != 0) return;
        if (!connected()) return;
        if (exists_greater_perm()) return;
        Graph g;
        g.v = v;
        for (int s = 1; s < v; s++)
            for (int r = 0; r < s; r++)
                if (A[r][s]) g.edges.emplace_back(r, s);
        out.push_back(std::move(g));
    }

    // Two rows r < s are exchangeable on the completed columns iff they have
    // equal degree and the transposition (r s) fixes every filled entry:
    // A[t][s] == A[t or r bands] for all t < s, t != r.
    bool exchangeable_after_column(int r, int s) const {
        if (deg[r] != deg[s]) return false;
        for (int t = 0; t < s; t++) {
            if (t == r) continue;
            int rt = t < r ? A[t][r] : A[r][t];
            if (A[t][s] != rt) return false;
        }
        return true;
    }

    void fill_column(int s, const std::vector<std::vector<int>>& classes) {
        if (s == v) {
            leaf();
            return;
        }
        std::vector<int> take(classes.size(), 0);
        std::function<void(size_t, int)> choose = [&](size_t ci, int placed) {
            if (placed > residual[s]) return;
            if (ci == classes.size()) {
                if (residual[s] - placed > v - 1 - s) return;
                std::vector<int> touched;
                for (size_t q = 0; q < classes.size(); q++)
                    for (int t = 0; t < take[q]; t++) {
                        int r = classes[q][t];
                        A[r][s] = A[s][r] = 1;
                        residual[r]--;
                        touched.push_back(r);
                    }
                int saved = residual[s];
                residual[s] -= placed;
                // Vertices r <= s can only gain from the v-1-s later columns.
                bool ok = true;
                for (int r = 0; r <= s; r++)
                    if (residual[r] > v - 1 - s) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    // Split every class by the new column (prefix goes first),
                    // then give row s a class, merging when exchangeable.
                    std::vector<std::vector<int>> nc;
                    for (size_t q = 0; q < classes.size(); q++) {
                        if (take[q] > 0)
                            nc.emplace_back(classes[q].begin(), classes[q].begin() + take[q]);
                        if (take[q] < int(classes[q].size()))
                            nc.emplace_back(classes[q].begin() + take[q], classes[q].end());
                    }
                    bool merged = false;
                    for (auto& cls : nc) {
                        if (exchangeable_after_column(cls.front(), s)) {
                            cls.push_back(s);
                            merged = true;
                            break;
                        }
                    }
                    if (!merged) nc.push_back({s});
                    fill_column(s + 1, nc);
                }
                residual[s] = saved;
                for (int r : touched) {
                    A[r][s] = A[s][r] = 0;
                    residual[r]++;
                }
                return;
            }
            const auto& cls = classes[ci];
            int cap = residual[cls.front()] > 0 ? int(cls.size()) : 0;
            for (int t = 0; t <= cap; t++) {
                take[ci] = t;
                choose(ci + 1, placed + t);
            }
            take[ci] = 0;
        };
        choose(0, 0);
    }

    void run() {
        A.assign(v, std::vector<int>(v, 0));
        residual = deg;
        fill_column(1, {{0}});
    }
};

void degree_sequences(int v, int sum, int maxd, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == v) {
        if (sum == 0) out.push_back(cur);
        return;
    }
    int remaining = v - int(cur.size());
    for (int d = std::min(maxd, sum - 3 * (remaining - 1)); d >= 3; d--) {
        if (long(d) * remaining < sum) break;
        cur.push_back(d);
        degree_sequences(v, sum - d, d, cur, out);
        cur.pop_back();
    }
}

StratumBasis load_cache(const std::string& path) {
    StratumBasis sb;
    std::ifstream in(path);
    nlohmann::json j;
    in >> j;
    sb.h = j.at("h").get<int>();
    sb.e = j.at("e").get<int>();
    sb.generated = j.at("generated").get<long>();
    for (auto& rec : j.at("basis")) {
        Graph g = Graph::from_json(rec.at("graph").dump());
        sb.basis.push_back(g);
        sb.keys.push_back(rec.at("key").get<std::string>());
    }
    return sb;
}

void store_cache(const std::string& path, const StratumBasis& sb) {
    nlohmann::json j;
    j["h"] = sb.h;
    j["e"] = sb.e;
    j["generated"] = sb.generated;
    j["basis"] = nlohmann::json::array();
    for (size_t i = 0; i < sb.basis.size(); i++) {
        nlohmann::json rec;
        rec["graph"] = nlohmann::json::parse(sb.basis[i].to_json());
        rec["key"] = sb.keys[i];
        j["basis"].push_back(rec);
    }
    std::ofstream out(path);
    out << j.dump();
}

}  // namespace

StratumBasis generate_stratum(int h, int e, const std::string& cache_dir) {
    StratumBasis sb;
    sb.h = h;
    sb.e = e;
    std::string cache_path;
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        cache_path =
            cache_dir + "/stratum_h" + std::to_string(h) + "_e" + std::to_string(e) + ".json";
        if (std::filesystem::exists(cache_path)) return load_cache(cache_path);
    }
    int v = e - h + 1;
    if (h < 1 || v < 4 || 2 * e < 3 * v || e > 3 * (h - 1)) return sb;

    std::vector<std::vector<int>> seqs;
    std::vector<int> cur;
    degree_sequences(v, 2 * e, v - 1, cur, seqs);

    std::vector<std::pair<std::string, Graph>> found;
    for (auto& d : seqs) {
        OrderlyGen gen;
        gen.v = v;
        gen.deg = d;
        gen.run();
        for (auto& g : gen.out) {
            sb.generated++;
            IsoCertificate cert = canonical_certificate(g);
            if (has_odd_automorphism(cert.canonical_graph)) continue;
            found.emplace_back(cert.canonical_key, cert.canonical_graph);
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i < found.size(); i++) {
        if (i && found[i].first == found[i - 1].first)
            throw std::logic_error("generate_stratum: duplicate isomorphism class");
        sb.keys.push_back(found[i].first);
        sb.basis.push_back(found[i].second);
    }
    if (!cache_path.empty()) store_cache(cache_path, sb);
    return sb;
}

}  // namespace gcanon
