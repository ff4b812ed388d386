#include "gcanon/point_eval.hpp"

#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

#include "gcanon/laplacian.hpp"

namespace gcanon {

namespace {

// Binomials and colex ranking of fixed-size bitmasks: the graded slices of
// the exterior algebra are stored as dense coefficient vectors.
struct Choose {
    long c[33][33];
    Choose() {
        for (int n = 0; n < 33; n++) {
            c[n][0] = 1;
            for (int k = 1; k <= n; k++)
                c[n][k] = (k > n) ? 0 : (n ? c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0) : 0);
            for (int k = n + 1; k < 33; k++) c[n][k] = 0;
        }
    }
};
const Choose kC;

inline long choose(int n, int k) { return (k < 0 || k > n || n < 0) ? 0 : kC.c[n][k]; }

inline long colex_rank(uint32_t mask) {
    long r = 0;
    int i = 0;
    while (mask) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        i++;
        r += choose(b, i);
    }
    return r;
}

// Enumerate all size-k submasks of `pool`, invoking fn(mask).
template <class F>
void for_each_submask(uint32_t pool, int k, F&& fn) {
    std::vector<int> bits;
    for (uint32_t p = pool; p; p &= p - 1) bits.push_back(std::countr_zero(p));
    int n = int(bits.size());
    if (k > n) return;
    std::vector<int> idx(k);
    std::function<void(int, int, uint32_t)> rec = [&](int start, int left, uint32_t acc) {
        if (left == 0) {
            fn(acc);
            return;
        }
        for (int i = start; i <= n - left; i++) rec(i + 1, left - 1, acc | (1u << bits[i]));
    };
    rec(0, k, 0);
}

// One graded slice: all coefficients of a fixed exterior degree, indexed by
// colex rank of the mask.
template <class T>
struct Slice {
    int deg = 0;
    std::vector<T> a;  // size choose(nv, deg)
};

template <class T>
struct SliceMatrix {
    int n = 0, nv = 0, deg = 0;
    std::vector<Slice<T>> e;  // n*n slices
    Slice<T>& at(int i, int j) { return e[size_t(i) * n + j]; }
    const Slice<T>& at(int i, int j) const { return e[size_t(i) * n + j]; }
};

// Precomputed masks of each degree, in colex-rank order.
std::vector<uint32_t> masks_of_degree(int nv, int k) {
    std::vector<uint32_t> out(choose(nv, k));
    uint32_t full = (nv >= 32) ? ~0u : ((1u << nv) - 1);
    for_each_submask(full, k, [&](uint32_t m) { out[colex_rank(m)] = m; });
    return out;
}

template <class T>
SliceMatrix<T> slice_mul(const SliceMatrix<T>& A, const SliceMatrix<T>& B) {
    SliceMatrix<T> out;
    out.n = A.n;
    out.nv = A.nv;
    out.deg = A.deg + B.deg;
    out.e.assign(size_t(A.n) * A.n, {});
    int da = A.deg, db = B.deg, nv = A.nv;
    long outsize = choose(nv, out.deg);
    if (outsize == 0) return out;
    auto amasks = masks_of_degree(nv, da);
    uint32_t full = (nv >= 32) ? ~0u : ((1u << nv) - 1);
    for (auto& s : out.e) {
        s.deg = out.deg;
        s.a.assign(outsize, T(0));
    }
    T prod;
    for (int i = 0; i < A.n; i++)
        for (int c = 0; c < A.n; c++) {
            const Slice<T>& ac = A.at(i, c);
            if (ac.a.empty()) continue;
            for (int j = 0; j < A.n; j++) {
                const Slice<T>& cb = B.at(c, j);
                if (cb.a.empty()) continue;
                Slice<T>& dst = out.at(i, j);
                for (size_t ra = 0; ra < amasks.size(); ra++) {
                    const T& va = ac.a[ra];
                    if (va == 0) continue;
                    uint32_t ma = amasks[ra];
                    for_each_submask(full & ~ma, db, [&](uint32_t mb) {
                        const T& vb = cb.a[colex_rank(mb)];
                        if (vb == 0) return;
                        prod = va * vb;
                        long rr = colex_rank(ma | mb);
                        if (wedge_sign(ma, mb) < 0)
                            dst.a[rr] -= prod;
                        else
                            dst.a[rr] += prod;
                    });
                }
            }
        }
    return out;
}

template <class T>
std::map<uint32_t, T> slice_trace_product(const SliceMatrix<T>& A, const SliceMatrix<T>& B) {
    int nv = A.nv, da = A.deg, db = B.deg;
    int deg = da + db;
    std::vector<T> acc(choose(nv, deg), T(0));
    auto amasks = masks_of_degree(nv, da);
    uint32_t full = (nv >= 32) ? ~0u : ((1u << nv) - 1);
    T prod;
    for (int i = 0; i < A.n; i++)
        for (int c = 0; c < A.n; c++) {
            const Slice<T>& ac = A.at(i, c);
            const Slice<T>& cb = B.at(c, i);
            if (ac.a.empty() || cb.a.empty()) continue;
            for (size_t ra = 0; ra < amasks.size(); ra++) {
                const T& va = ac.a[ra];
                if (va == 0) continue;
                uint32_t ma = amasks[ra];
                for_each_submask(full & ~ma, db, [&](uint32_t mb) {
                    const T& vb = cb.a[colex_rank(mb)];
                    if (vb == 0) return;
                    prod = va * vb;
                    long rr = colex_rank(ma | mb);
                    if (wedge_sign(ma, mb) < 0)
                        acc[rr] -= prod;
                    else
                        acc[rr] += prod;
                });
            }
        }
    auto dmasks = masks_of_degree(nv, deg);
    std::map<uint32_t, T> out;
    for (size_t r = 0; r < dmasks.size(); r++)
        if (!(acc[r] == 0)) out.emplace(dmasks[r], std::move(acc[r]));
    return out;
}

// adj and det of an integer matrix (Bareiss minors).
void adj_det_int(const std::vector<std::vector<Int>>& m, std::vector<std::vector<Int>>& adj,
                 Int& det) {
    int n = int(m.size());
    det = det_int(m);
    adj.assign(n, std::vector<Int>(n));
    if (n == 1) {
        adj[0][0] = 1;
        return;
    }
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            std::vector<std::vector<Int>> sub;
            sub.reserve(n - 1);
            for (int r = 0; r < n; r++) {
                if (r == j) continue;  // delete row j, column i for adj[i][j]
                std::vector<Int> row;
                row.reserve(n - 1);
                for (int c = 0; c < n; c++) {
                    if (c == i) continue;
                    row.push_back(m[r][c]);
                }
                sub.push_back(std::move(row));
            }
            Int d = det_int(sub);
            if ((i + j) % 2) d = -d;
            adj[i][j] = d;
        }
}

void adj_det_rat(const std::vector<std::vector<Rat>>& m, std::vector<std::vector<Rat>>& adj,
                 Rat& det) {
    int n = int(m.size());
    det = det_rat(m);
    if (det == 0) throw std::domain_error("beta_at_point: singular matrix at point");
    std::vector<std::vector<Rat>> a = m, inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; i++) inv[i][i] = 1;
    for (int k = 0; k < n; k++) {
        int p = -1;
        for (int i = k; i < n; i++)
            if (a[i][k] != 0) {
                p = i;
                break;
            }
        std::swap(a[p], a[k]);
        std::swap(inv[p], inv[k]);
        Rat f = a[k][k];
        for (int j = 0; j < n; j++) {
            a[k][j] /= f;
            inv[k][j] /= f;
        }
        for (int i = 0; i < n; i++) {
            if (i == k || a[i][k] == 0) continue;
            Rat g = a[i][k];
            for (int j = 0; j < n; j++) {
                a[i][j] -= g * a[k][j];
                inv[i][j] -= g * inv[k][j];
            }
        }
    }
    adj.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) adj[i][j] = inv[i][j] * det;
}

template <class T>
FormValue beta_at_point_impl(const PolyMatrix& X, const std::vector<T>& pt, int n) {
    int k = X.rows(), nv = X.nvars();
    if (n < 1) throw std::domain_error("beta_at_point: n >= 1 required");
    if (int(pt.size()) != nv) throw std::domain_error("beta_at_point: point size mismatch");
    if (nv > 30) throw std::domain_error("beta_at_point: too many variables");

    std::vector<Rat> rpt;
    rpt.reserve(nv);
    for (auto& c : pt) rpt.push_back(Rat(c));
    std::vector<std::vector<T>> Xp(k, std::vector<T>(k));
    for (int i = 0; i < k; i++)
        for (int j = 0; j < k; j++) {
            Rat v = X.at(i, j).eval(rpt);
            if constexpr (std::is_same_v<T, Int>) {
                if (v.get_den() != 1)
                    throw std::logic_error("integer beta engine on non-integer value");
                Xp[i][j] = v.get_num();
            } else {
                Xp[i][j] = v;
            }
        }
    std::vector<std::vector<T>> adj;
    T det;
    if constexpr (std::is_same_v<T, Int>)
        adj_det_int(Xp, adj, det);
    else
        adj_det_rat(Xp, adj, det);
    if (det == 0) throw std::domain_error("beta_at_point: singular matrix at point");

    if (n == 1) {
        FormValue out;
        for (int v = 0; v < nv; v++) {
            PolyMatrix dX = X.derivative(v);
            Rat tr(0);
            for (int i = 0; i < k; i++)
                for (int c = 0; c < k; c++) {
                    if (dX.at(c, i).is_zero()) continue;
                    tr += Rat(adj[i][c]) * dX.at(c, i).eval(rpt);
                }
            if (tr != 0) out[1u << v] = Rat(tr / Rat(det));
        }
        return out;
    }
    if (n > 2 * k + 1 || n > nv) return {};

    SliceMatrix<T> nu;
    nu.n = k;
    nu.nv = nv;
    nu.deg = 1;
    nu.e.assign(size_t(k) * k, {});
    for (auto& s : nu.e) {
        s.deg = 1;
        s.a.assign(nv, T(0));
    }
    bool any_entry = false;
    for (int v = 0; v < nv; v++) {
        PolyMatrix dX = X.derivative(v);
        std::vector<std::vector<T>> D(k, std::vector<T>(k, T(0)));
        bool any = false;
        for (int i = 0; i < k; i++)
            for (int j = 0; j < k; j++) {
                Rat val = dX.at(i, j).eval(rpt);
                if (val == 0) continue;
                any = true;
                if constexpr (std::is_same_v<T, Int>) {
                    if (val.get_den() != 1)
                        throw std::logic_error("integer beta engine on non-integer derivative");
                    D[i][j] = val.get_num();
                } else {
                    D[i][j] = val;
                }
            }
        if (!any) continue;
        long rank = colex_rank(1u << v);
        for (int i = 0; i < k; i++)
            for (int j = 0; j < k; j++) {
                T s(0);
                for (int c = 0; c < k; c++) {
                    if (D[c][j] == 0) continue;
                    s += adj[i][c] * D[c][j];
                }
                if (!(s == 0)) {
                    nu.at(i, j).a[rank] = std::move(s);
                    any_entry = true;
                }
            }
    }
    if (!any_entry) return {};

    std::map<int, SliceMatrix<T>> pows;
    pows.emplace(1, std::move(nu));
    std::function<const SliceMatrix<T>&(int)> get = [&](int p) -> const SliceMatrix<T>& {
        auto it = pows.find(p);
        if (it != pows.end()) return it->second;
        int a = p / 2, b = p - a;
        const SliceMatrix<T>& fa = get(a);
        const SliceMatrix<T>& fb = get(b);
        return pows.emplace(p, slice_mul(fa, fb)).first->second;
    };
    int a = n / 2, b = n - a;
    std::map<uint32_t, T> tr = slice_trace_product(get(a), get(b));

    T dp = det;
    for (int i = 1; i < n; i++) dp = dp * det;
    FormValue out;
    for (auto& [m, v] : tr) {
        Rat q = Rat(v) / Rat(dp);
        mpq_canonicalize(q.get_mpq_t());
        if (q != 0) out[m] = q;
    }
    return out;
}

// (v-1)x(v-1) dual Laplacian cleared of denominators: (prod_e x_e) * L_G,
// a polynomial matrix in the x's with integer coefficients.  For odd
// n >= 3, beta of this matrix equals beta of L_G by projective invariance.
PolyMatrix dual_laplacian_cleared(const Graph& g) {
    int m = g.e(), n = g.v - 1;
    auto inc = incidence_matrix(g);
    PolyMatrix L(n, n, m);
    for (int u = 0; u < n; u++)
        for (int w = 0; w < n; w++) {
            MultiPoly s(m);
            for (int e = 0; e < m; e++) {
                int prod = inc[u][e] * inc[w][e];
                if (!prod) continue;
                ExpVec ev;
                ev.fill(0);
                for (int f = 0; f < m; f++)
                    if (f != e) ev[f] = 1;
                s.add_term(ev, Rat(prod));
            }
            L.at(u, w) = s;
        }
    return L;
}

}  // namespace

FormValue beta_at_point(const PolyMatrix& X, const std::vector<Int>& point, int n) {
    return beta_at_point_impl<Int>(X, point, n);
}

FormValue beta_at_point(const PolyMatrix& X, const std::vector<Rat>& point, int n) {
    return beta_at_point_impl<Rat>(X, point, n);
}

FormValue beta_route_lambda(const Graph& g, const std::vector<Int>& x, int n) {
    return beta_at_point(laplacian(g).Lambda, x, n);
}

FormValue beta_route_graph_matrix(const Graph& g, const std::vector<Int>& x, int n) {
    return beta_at_point(graph_matrix(g), x, n);
}

FormValue beta_route_dual(const Graph& g, const std::vector<Int>& x, int n) {
    if (n >= 3 && n % 2 == 1) {
        // Scale-cleared matrix keeps the whole computation over Z.
        return beta_at_point(dual_laplacian_cleared(g), x, n);
    }
    int m = g.e();
    std::vector<Rat> y(m);
    for (int e = 0; e < m; e++) y[e] = Rat(1) / Rat(x[e]);
    FormValue w = beta_at_point(dual_laplacian(g), y, n);
    std::vector<std::vector<Rat>> J(m, std::vector<Rat>(m, Rat(0)));
    for (int e = 0; e < m; e++) J[e][e] = Rat(-1) / (Rat(x[e]) * Rat(x[e]));
    return pullback_value(w, J, m, m, n);
}

FormValue wedge_values(const FormValue& a, const FormValue& b) {
    FormValue out;
    for (auto& [ma, va] : a)
        for (auto& [mb, vb] : b) {
            if (ma & mb) continue;
            Rat prod = va * vb;
            if (wedge_sign(ma, mb) < 0) prod = -prod;
            auto it = out.find(ma | mb);
            if (it == out.end())
                out.emplace(ma | mb, prod);
            else {
                it->second += prod;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

FormValue add_values(const FormValue& a, const FormValue& b) {
    FormValue out = a;
    for (auto& [m, v] : b) {
        auto it = out.find(m);
        if (it == out.end())
            out.emplace(m, v);
        else {
            it->second += v;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

FormValue scale_value(const FormValue& a, const Rat& c) {
    FormValue out;
    if (c == 0) return out;
    for (auto& [m, v] : a) out.emplace(m, v * c);
    return out;
}

bool value_is_zero(const FormValue& a) { return a.empty(); }

FormValue pullback_value(const FormValue& w, const std::vector<std::vector<Rat>>& J, int src_vars,
                         int dst_vars, int degree) {
    std::vector<uint32_t> tmasks;
    std::function<void(int, int, uint32_t)> gen = [&](int start, int left, uint32_t acc) {
        if (left == 0) {
            tmasks.push_back(acc);
            return;
        }
        for (int j = start; j <= dst_vars - left; j++) gen(j + 1, left - 1, acc | (1u << j));
    };
    gen(0, degree, 0);

    FormValue out;
    for (auto& [ms, vs] : w) {
        std::vector<int> srows;
        for (int i = 0; i < src_vars; i++)
            if (ms & (1u << i)) srows.push_back(i);
        for (uint32_t mt : tmasks) {
            std::vector<int> tcols;
            for (int j = 0; j < dst_vars; j++)
                if (mt & (1u << j)) tcols.push_back(j);
            std::vector<std::vector<Rat>> sub(srows.size(), std::vector<Rat>(tcols.size()));
            bool allzero = true;
            for (size_t i = 0; i < srows.size(); i++)
                for (size_t j = 0; j < tcols.size(); j++) {
                    sub[i][j] = J[srows[i]][tcols[j]];
                    if (sub[i][j] != 0) allzero = false;
                }
            if (allzero) continue;
            Rat d = det_rat(sub);
            if (d == 0) continue;
            Rat add = vs * d;
            auto it = out.find(mt);
            if (it == out.end())
                out.emplace(mt, add);
            else {
                it->second += add;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

std::vector<Int> random_point(int nvars, uint64_t seed, long range) {
    auto mix = [](uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    std::vector<Int> p(nvars);
    for (int i = 0; i < nvars; i++) {
        uint64_t r = mix(seed * 0x100000001b3ull + uint64_t(i) + 1);
        p[i] = long(r % uint64_t(range)) + 1;
    }
    return p;
}

}  // namespace gcanon
