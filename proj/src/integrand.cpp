#include "gcanon/integrand.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gcanon/canonical.hpp"
#include "gcanon/laplacian.hpp"
#include "gcanon/point_eval.hpp"

namespace gcanon {

namespace {

double kahan_sum(const std::vector<double>& xs) {
    double s = 0, c = 0;
    for (double v : xs) {
        double y = v - c, t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

// Dense LU inverse with partial pivoting; matrices stay small (<= ~20).
bool invert(std::vector<double>& a, int n) {
    std::vector<int> piv(n);
    std::vector<double> inv(size_t(n) * n, 0.0);
    for (int i = 0; i < n; i++) inv[size_t(i) * n + i] = 1.0;
    for (int k = 0; k < n; k++) {
        int p = k;
        double best = std::fabs(a[size_t(k) * n + k]);
        for (int i = k + 1; i < n; i++) {
            double v = std::fabs(a[size_t(i) * n + k]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0.0) return false;
        if (p != k)
            for (int j = 0; j < n; j++) {
                std::swap(a[size_t(p) * n + j], a[size_t(k) * n + j]);
                std::swap(inv[size_t(p) * n + j], inv[size_t(k) * n + j]);
            }
        double d = a[size_t(k) * n + k];
        for (int j = 0; j < n; j++) {
            a[size_t(k) * n + j] /= d;
            inv[size_t(k) * n + j] /= d;
        }
        for (int i = 0; i < n; i++) {
            if (i == k) continue;
            double f = a[size_t(i) * n + k];
            if (f == 0.0) continue;
            for (int j = 0; j < n; j++) {
                a[size_t(i) * n + j] -= f * a[size_t(k) * n + j];
                inv[size_t(i) * n + j] -= f * inv[size_t(k) * n + j];
            }
        }
    }
    a = std::move(inv);
    return true;
}

// Signed cyclic-path DP: the coefficient of dx_T (ascending) in tr(eta^n),
// where T is the bit set of `local` edge indices and c is the localized
// Dodgson ratio matrix.  Rotational classes contribute n equal terms (n is
// odd here), so the anchored sum is scaled by n.
double trace_component(const std::vector<double>& c, int n) {
    // states: (consumed-mask over elements 1..n-1, last element index)
    size_t states = size_t(1) << (n - 1);
    std::vector<double> f(states * size_t(n), 0.0);
    // anchor = local element 0; first step consumes j (1..n-1)
    for (int j = 1; j < n; j++) {
        // appending j to the empty consumed set: no inversions
        f[(size_t(1) << (j - 1)) * n + j] = c[0 * n + j];
    }
    for (size_t mask = 1; mask < states; mask++) {
        for (int last = 1; last < n; last++) {
            double val = f[mask * n + last];
            if (val == 0.0) continue;
            if (!(mask & (size_t(1) << (last - 1)))) continue;
            for (int j = 1; j < n; j++) {
                size_t jb = size_t(1) << (j - 1);
                if (mask & jb) continue;
                // inversions added: consumed elements greater than j
                int inv = std::popcount(uint64_t(mask >> j));
                double add = val * c[size_t(last) * n + j];
                if (inv & 1) add = -add;
                f[(mask | jb) * n + j] += add;
            }
        }
    }
    // close at the anchor: append element 0 (dx_{anchor} last): inversions
    // = all n-1 consumed elements are greater than it
    size_t full = states - 1;
    double total = 0;
    for (int last = 1; last < n; last++) {
        double val = f[full * n + last];
        if (val == 0.0) continue;
        double add = val * c[size_t(last) * n + 0];
        if ((n - 1) & 1) add = -add;
        total += add;
    }
    if (n == 1) total = c[0];
    return total * n;
}

}  // namespace

PsiRationalIntegrand::PsiRationalIntegrand(const Graph& g, std::vector<Piece> pieces)
    : m_(g.e()), pieces_(std::move(pieces)) {
    MultiPoly psi = graph_polynomial(g);
    for (const auto& t : psi.terms()) {
        std::vector<int> mono(m_);
        for (int e = 0; e < m_; e++) mono[e] = t.e[e];
        psi_.emplace_back(std::move(mono), t.c.get_d());
    }
    std::ostringstream os;
    os << "psi-rational[" << pieces_.size() << " pieces, psi terms " << psi_.size() << "]";
    desc_ = os.str();
}

double PsiRationalIntegrand::eval(const double* x) const {
    std::vector<double> terms;
    terms.reserve(psi_.size());
    for (auto& [mono, c] : psi_) {
        double v = c;
        for (int e = 0; e < m_; e++)
            for (int k = 0; k < mono[e]; k++) v *= x[e];
        terms.push_back(v);
    }
    double psi = kahan_sum(terms);
    double out = 0;
    for (auto& p : pieces_) {
        double v = p.coef;
        for (int e = 0; e < m_; e++)
            for (int k = 0; k < p.mono[e]; k++) v *= x[e];
        out += v / std::pow(psi, p.psi_pow);
    }
    return out;
}

EtaTopIntegrand::EtaTopIntegrand(const Graph& g, int k)
    : g_(g), m_(g.e()), n_(m_ + g.v - 1), power_(4 * k + 1) {
    if (power_ != m_ - 1) throw std::domain_error("EtaTopIntegrand: degree mismatch");
    auto inc = incidence_matrix(g);
    inc_.assign(g.v - 1, std::vector<int>(m_));
    for (int v = 0; v + 1 < g.v; v++) inc_[v] = inc[v];
}

std::string EtaTopIntegrand::describe() const {
    std::ostringstream os;
    os << "eta-route[w" << power_ << ", e=" << m_ << "]";
    return os.str();
}

double EtaTopIntegrand::eval(const double* x) const {
    // graph matrix M(x) and its inverse
    std::vector<double> M(size_t(n_) * n_, 0.0);
    for (int e = 0; e < m_; e++) M[size_t(e) * n_ + e] = x[e];
    for (int v = 0; v < int(inc_.size()); v++)
        for (int e = 0; e < m_; e++) {
            if (!inc_[v][e]) continue;
            M[size_t(m_ + v) * n_ + e] = inc_[v][e];
            M[size_t(e) * n_ + (m_ + v)] = -inc_[v][e];
        }
    if (!invert(M, n_)) return 0.0;

    // drop the largest coordinate for the chart component
    int drop = 0;
    for (int e = 1; e < m_; e++)
        if (x[e] > x[drop]) drop = e;
    std::vector<int> T;
    T.reserve(m_ - 1);
    for (int e = 0; e < m_; e++)
        if (e != drop) T.push_back(e);
    int n = m_ - 1;
    std::vector<double> c(size_t(n) * n);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) c[size_t(a) * n + b] = M[size_t(T[a]) * n_ + T[b]];
    double comp = trace_component(c, n);
    // omega = g Omega, comp_{~drop} = (-1)^{drop} x_drop g (0-based drop)
    double gval = comp / x[drop];
    if (drop & 1) gval = -gval;
    return gval;
}

WedgeEtaIntegrand::WedgeEtaIntegrand(const Graph& g, CanonicalFormSpec spec)
    : g_(g), spec_(std::move(spec)), m_(g.e()) {
    if (spec_.ks.size() != 2)
        throw std::domain_error("WedgeEtaIntegrand: only two-factor wedges supported");
    if (spec_.degree() != m_ - 1) throw std::domain_error("WedgeEtaIntegrand: degree mismatch");
    auto inc = incidence_matrix(g);
    inc_.assign(g.v - 1, std::vector<int>(m_));
    for (int v = 0; v + 1 < g.v; v++) inc_[v] = inc[v];
}

std::string WedgeEtaIntegrand::describe() const {
    return "eta-wedge[" + spec_.str() + ", e=" + std::to_string(m_) + "]";
}

double WedgeEtaIntegrand::eval(const double* x) const {
    int n_ = m_ + int(inc_.size());
    std::vector<double> M(size_t(n_) * n_, 0.0);
    for (int e = 0; e < m_; e++) M[size_t(e) * n_ + e] = x[e];
    for (int v = 0; v < int(inc_.size()); v++)
        for (int e = 0; e < m_; e++) {
            if (!inc_[v][e]) continue;
            M[size_t(m_ + v) * n_ + e] = inc_[v][e];
            M[size_t(e) * n_ + (m_ + v)] = -inc_[v][e];
        }
    if (!invert(M, n_)) return 0.0;

    int drop = 0;
    for (int e = 1; e < m_; e++)
        if (x[e] > x[drop]) drop = e;
    std::vector<int> T;
    for (int e = 0; e < m_; e++)
        if (e != drop) T.push_back(e);
    int n = m_ - 1;
    int d1 = 4 * spec_.ks[0] + 1, d2 = 4 * spec_.ks[1] + 1;

    std::vector<double> c(size_t(n) * n);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) c[size_t(a) * n + b] = M[size_t(T[a]) * n_ + T[b]];

    // All components of tr(eta^{d1}) over d1-subsets A of T, by brute
    // enumeration of subsets with the anchored DP per subset; the
    // complementary factor is then a single component each.
    double total = 0;
    std::vector<int> idx(d1);
    std::function<void(int, int, uint32_t)> loop = [&](int start, int left, uint32_t amask) {
        if (left == 0) {
            // localize A and its complement B inside T
            std::vector<double> ca(size_t(d1) * d1), cb(size_t(d2) * d2);
            std::vector<int> A, B;
            for (int t = 0; t < n; t++)
                if (amask & (1u << t)) A.push_back(t);
                else B.push_back(t);
            for (int a = 0; a < d1; a++)
                for (int b = 0; b < d1; b++) ca[size_t(a) * d1 + b] = c[size_t(A[a]) * n + A[b]];
            for (int a = 0; a < d2; a++)
                for (int b = 0; b < d2; b++) cb[size_t(a) * d2 + b] = c[size_t(B[a]) * n + B[b]];
            double va = trace_component(ca, d1);
            if (va != 0.0) {
                double vb = trace_component(cb, d2);
                if (vb != 0.0) {
                    uint32_t bmask = (~amask) & ((1u << n) - 1);
                    double term = va * vb;
                    if (wedge_sign(amask, bmask) < 0) term = -term;
                    total += term;
                }
            }
            return;
        }
        for (int t = start; t <= n - left; t++) loop(t + 1, left - 1, amask | (1u << t));
    };
    loop(0, d1, 0);

    double gval = total / x[drop];
    if (drop & 1) gval = -gval;
    return gval;
}

bool has_divergent_subgraph(const Graph& g) {
    int m = g.e();
    if (m > 20) throw std::domain_error("divergent-subgraph scan too large");
    for (uint32_t sub = 1; sub + 1 < (1u << m); sub++) {
        std::vector<int> es;
        for (int i = 0; i < m; i++)
            if (sub & (1u << i)) es.push_back(i);
        Graph gamma = edge_subgraph(g, es);
        if (gamma.loops() < 1) continue;
        if (gamma.e() - 2 * gamma.loops() <= 0) return true;
    }
    return false;
}

std::unique_ptr<Integrand> feynman_residue_integrand(const Graph& g) {
    if (g.graph_degree() != 0)
        throw std::domain_error("feynman residue: graph degree must be 0");
    if (has_divergent_subgraph(g))
        throw std::domain_error("feynman residue: divergent subgraph");
    PsiRationalIntegrand::Piece p;
    p.coef = 1.0;
    p.mono.assign(g.e(), 0);
    p.psi_pow = 2;
    return std::make_unique<PsiRationalIntegrand>(g, std::vector<PsiRationalIntegrand::Piece>{p});
}

namespace {

// Closed-form candidates for the wheels and K6, with the spoke positions
// read off the concrete labelling.
std::unique_ptr<PsiRationalIntegrand> closed_form_candidate(const Graph& g,
                                                            const CanonicalFormSpec& spec) {
    auto key = canonical_certificate(g).canonical_key;
    auto keyW = [&](int n) { return canonical_certificate(wheel(n)).canonical_key; };
    std::vector<PsiRationalIntegrand::Piece> pieces;
    if (spec.ks == std::vector<int>{1} && key == keyW(3)) {
        pieces.push_back({10.0, std::vector<int>(6, 0), 2});
        return std::make_unique<PsiRationalIntegrand>(g, std::move(pieces));
    }
    auto spokes_mono = [&](int deg) {
        // hub = the unique max-degree vertex; spoke edges get exponent deg
        auto d = g.degrees();
        int hub = int(std::max_element(d.begin(), d.end()) - d.begin());
        std::vector<int> mono(g.e(), 0);
        for (int e = 0; e < g.e(); e++)
            if (g.edges[e].first == hub || g.edges[e].second == hub) mono[e] = deg;
        return mono;
    };
    if (spec.ks == std::vector<int>{2} && key == keyW(5)) {
        pieces.push_back({18.0, std::vector<int>(10, 0), 2});
        pieces.push_back({18.0 * 12.0, spokes_mono(1), 3});
        return std::make_unique<PsiRationalIntegrand>(g, std::move(pieces));
    }
    if (spec.ks == std::vector<int>{3} && key == keyW(7)) {
        pieces.push_back({26.0, std::vector<int>(14, 0), 2});
        pieces.push_back({26.0 * 60.0, spokes_mono(1), 3});
        pieces.push_back({26.0 * 360.0, spokes_mono(2), 4});
        return std::make_unique<PsiRationalIntegrand>(g, std::move(pieces));
    }
    if (spec.ks == std::vector<int>{1, 2} &&
        key == canonical_certificate(complete_graph(6)).canonical_key) {
        // 9!/8 * prod_e x_e / Psi^3
        pieces.push_back({45360.0, std::vector<int>(15, 1), 3});
        return std::make_unique<PsiRationalIntegrand>(g, std::move(pieces));
    }
    return nullptr;
}

// Exact value of the candidate at an integer point.
Rat candidate_exact(const Graph& g, const PsiRationalIntegrand::Piece& p, const MultiPoly& psi,
                    const std::vector<Rat>& pt) {
    Rat v(long(p.coef));
    for (size_t e = 0; e < p.mono.size(); e++)
        for (int k = 0; k < p.mono[e]; k++) v *= pt[e];
    Rat ps = psi.eval(pt);
    Rat den(1);
    for (int i = 0; i < p.psi_pow; i++) den *= ps;
    return v / den;
}

// Exact top components of the spec form at an integer point, via the
// lambda/dual beta engines.
FormValue exact_form_value(const Graph& g, const CanonicalFormSpec& spec,
                           const std::vector<Int>& pt) {
    bool use_dual = g.v - 1 < g.loops();
    FormValue acc;
    bool first = true;
    for (int k : spec.ks) {
        FormValue part = use_dual ? beta_route_dual(g, pt, 4 * k + 1)
                                  : beta_route_lambda(g, pt, 4 * k + 1);
        if (first) {
            acc = std::move(part);
            first = false;
        } else {
            acc = wedge_values(acc, part);
        }
    }
    return acc;
}

}  // namespace

std::unique_ptr<Integrand> make_integrand(const Graph& g, const CanonicalFormSpec& spec) {
    if (spec.degree() + 1 != g.e())
        throw std::domain_error("make_integrand: spec degree must be e_G - 1");
    if (!g.is_connected()) throw std::domain_error("make_integrand: disconnected graph");
    if (integral_vanishes(g, spec)) return std::make_unique<ZeroIntegrand>(g.e());
    // Non-primitive specs vanish on the top stratum unless every factor
    // could be non-zero; cheap necessary bound via Prop 4.5 on the dual.
    int hh = g.loops(), vv = g.v - 1;
    int rank = std::min(hh, vv);
    for (int k : spec.ks)
        if (4 * k + 1 >= 2 * rank) return std::make_unique<ZeroIntegrand>(g.e());

    auto candidate = closed_form_candidate(g, spec);
    if (candidate) {
        // Verify against the exact beta engine at two integer points; an
        // overall sign is allowed (it tracks the labelling parity).
        MultiPoly psi = graph_polynomial(g);
        uint64_t sd = fnv1a(canonical_certificate(g).canonical_key) ^ 0x5eedu;
        int sign = 0;
        bool ok = true;
        for (int rep = 0; rep < 2 && ok; rep++) {
            auto pt = random_point(g.e(), sd + rep, 499);
            std::vector<Rat> rp;
            for (auto& c : pt) rp.push_back(Rat(c));
            Rat formula(0);
            for (auto& p : candidate->pieces_) formula += candidate_exact(g, p, psi, rp);
            FormValue fv = exact_form_value(g, spec, pt);
            uint32_t mask = ((1u << g.e()) - 1) & ~1u;  // omit dx1
            auto it = fv.find(mask);
            Rat comp = (it == fv.end()) ? Rat(0) : it->second;
            Rat expect = formula * rp[0];  // (-1)^{1-1} x_1 g
            if (comp == expect)
                ok = (sign == 0 || sign == 1), sign = 1;
            else if (comp == -expect)
                ok = (sign == 0 || sign == -1), sign = -1;
            else
                ok = false;
        }
        if (ok && sign != 0) {
            if (sign < 0)
                for (auto& p : candidate->pieces_) p.coef = -p.coef;
            return candidate;
        }
    }
    if (spec.is_primitive()) return std::make_unique<EtaTopIntegrand>(g, spec.ks[0]);
    return std::make_unique<WedgeEtaIntegrand>(g, spec);
}

}  // namespace gcanon
