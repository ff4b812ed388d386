#include "gcanon/canform.hpp"

#include <sstream>
#include <stdexcept>

namespace gcanon {

CanonicalFormSpec::CanonicalFormSpec(std::vector<int> indices) : ks(std::move(indices)) {
    for (size_t i = 0; i < ks.size(); i++) {
        if (ks[i] < 1) throw std::domain_error("spec indices must be >= 1");
        if (i && ks[i] <= ks[i - 1])
            throw std::domain_error("spec indices must be strictly increasing");
    }
}

int CanonicalFormSpec::degree() const {
    int d = 0;
    for (int k : ks) d += 4 * k + 1;
    return d;
}

std::string CanonicalFormSpec::str() const {
    if (ks.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < ks.size(); i++) {
        if (i) os << "^";
        os << "w" << (4 * ks[i] + 1);
    }
    return os.str();
}

std::vector<CoproductTerm> coproduct(const CanonicalFormSpec& spec) {
    int r = int(spec.ks.size());
    std::vector<CoproductTerm> out;
    for (uint32_t sub = 0; sub < (1u << r); sub++) {
        CoproductTerm t;
        t.sign = 1;
        for (int i = 0; i < r; i++) {
            if (sub & (1u << i)) {
                // Count factors not in the subset that precede factor i;
                // each must move past it (all factors have odd degree).
                int crossings = 0;
                for (int j = 0; j < i; j++)
                    if (!(sub & (1u << j))) crossings++;
                if (crossings % 2) t.sign = -t.sign;
                t.left.ks.push_back(spec.ks[i]);
            } else {
                t.right.ks.push_back(spec.ks[i]);
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<CoproductTerm> reduced_coproduct(const CanonicalFormSpec& spec) {
    std::vector<CoproductTerm> out;
    for (auto& t : coproduct(spec)) {
        if (t.left.is_unit() || t.right.is_unit()) continue;
        out.push_back(t);
    }
    return out;
}

DiffForm canonical_form(const LaplacianBundle& bundle, const CanonicalFormSpec& spec) {
    const Graph& g = bundle.graph;
    int m = g.e();
    int deg = spec.degree();
    if (spec.is_unit()) return DiffForm::unit(m);
    if (deg > m) return DiffForm(m, deg, bundle.psi, 0);
    DiffForm acc = DiffForm::unit(m);
    for (int k : spec.ks) {
        DiffForm part = maurer_cartan_trace(bundle.Lambda, 4 * k + 1);
        acc = acc.wedge(part);
        if (acc.is_zero()) return DiffForm(m, deg, bundle.psi, 0);
    }
    return acc;
}

DiffForm canonical_form(const Graph& g, const CanonicalFormSpec& spec) {
    if (spec.is_unit()) return DiffForm::unit(g.e());
    int deg = spec.degree();
    if (deg > g.e()) return DiffForm(g.e(), deg, MultiPoly::constant(g.e(), 1), 0);
    if (!g.is_connected()) {
        // Sum rule over connected components for primitive forms; wedge
        // specs on disconnected graphs expand multiplicatively, which the
        // callers here never need.  Keep to the documented contract.
        throw std::domain_error("canonical_form: disconnected graph (use component sum)");
    }
    if (g.loops() < 1) return DiffForm(g.e(), deg, MultiPoly::constant(g.e(), 1), 0);
    return canonical_form(laplacian(g), spec);
}

DiffForm canonical_form_via_eta(const Graph& g, int k) {
    int n = 4 * k + 1;
    int m = g.e();
    PolyMatrix M = graph_matrix(g);
    MultiPoly psi = M.det();
    if (n > m) return DiffForm(m, n, psi, 0);

    FormMatrix eta;
    eta.n = m;
    eta.nv = m;
    eta.deg = 1;
    eta.den_pow = 1;
    eta.den = psi;
    eta.entry.assign(size_t(m) * m, {});
    // (M^{-1} dM)_{ij} = adj(M)_{ij}/det dx_j on the edge block; the
    // adjugate entry is the signed Dodgson determinant.
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) {
            MultiPoly d = M.minor_matrix(j, i).det();
            if (d.is_zero()) continue;
            if ((i + j) % 2) d = -d;
            eta.at(i, j).emplace(1u << j, std::move(d));
        }
    std::map<int, FormMatrix> pows;
    pows.emplace(1, std::move(eta));
    std::function<const FormMatrix&(int)> get = [&](int p) -> const FormMatrix& {
        auto it = pows.find(p);
        if (it != pows.end()) return it->second;
        int a = p / 2, b = p - a;
        const FormMatrix& fa = get(a);
        const FormMatrix& fb = get(b);
        return pows.emplace(p, FormMatrix::mul(fa, fb)).first->second;
    };
    int a = n / 2, b = n - a;
    DiffForm out = FormMatrix::trace_product(get(a), get(b));
    out.reduce();
    return out;
}

bool canonical_form_vanishes_on(const Graph& g) {
    if (g.has_tadpole()) return true;
    if (g.min_degree() <= 2) return true;
    if (g.has_multi_edge()) return true;
    if (is_one_vertex_reducible(g)) return true;
    return false;
}

bool integral_vanishes(const Graph& g, const CanonicalFormSpec& spec) {
    if (spec.degree() + 1 != g.e())
        throw std::domain_error("integral_vanishes: degree/edge mismatch");
    if (canonical_form_vanishes_on(g)) return true;
    if (spec.is_primitive() && g.graph_degree() != 0) return true;
    return false;
}

}  // namespace gcanon
