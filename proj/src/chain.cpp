#include "gcanon/chain.hpp"

#include <sstream>

namespace gcanon {

void GraphChain::insert(const Graph& g, const Rat& coeff) {
    if (coeff == 0 || g.is_empty()) return;
    IsoCertificate cert = canonical_certificate(g);
    auto it = terms_.find(cert.canonical_key);
    if (it == terms_.end()) {
        if (has_odd_automorphism(cert.canonical_graph)) return;
        Rat c = coeff * cert.edge_sign;
        terms_.emplace(cert.canonical_key, Entry{cert.canonical_graph, c});
    } else {
        it->second.coeff += coeff * cert.edge_sign;
        if (it->second.coeff == 0) terms_.erase(it);
    }
}

GraphChain GraphChain::operator+(const GraphChain& o) const {
    GraphChain out = *this;
    for (auto& [k, e] : o.terms_) {
        auto it = out.terms_.find(k);
        if (it == out.terms_.end())
            out.terms_.emplace(k, e);
        else {
            it->second.coeff += e.coeff;
            if (it->second.coeff == 0) out.terms_.erase(it);
        }
    }
    return out;
}

GraphChain GraphChain::operator-(const GraphChain& o) const { return *this + (o * Rat(-1)); }

GraphChain GraphChain::operator*(const Rat& c) const {
    GraphChain out;
    if (c == 0) return out;
    for (auto& [k, e] : terms_) out.terms_.emplace(k, Entry{e.rep, e.coeff * c});
    return out;
}

Rat GraphChain::coeff_of(const Graph& g) const {
    IsoCertificate cert = canonical_certificate(g);
    auto it = terms_.find(cert.canonical_key);
    if (it == terms_.end()) return Rat(0);
    return it->second.coeff * cert.edge_sign;
}

GraphChain GraphChain::project_gc2() const {
    GraphChain out;
    for (auto& [k, e] : terms_) {
        const Graph& g = e.rep;
        if (g.has_tadpole()) continue;
        if (g.min_degree() <= 2) continue;
        if (!g.is_connected()) continue;
        out.terms_.emplace(k, e);
    }
    return out;
}

std::string GraphChain::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, e] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << e.coeff.get_str() << ")*[" << (e.rep.label ? *e.rep.label : k) << "]";
    }
    return os.str();
}

GraphChain differential_d(const Graph& g, bool project) {
    GraphChain out;
    for (int i = 0; i < g.e(); i++) {
        Graph c = contract_kill_loops(g, i);
        if (c.is_empty()) continue;
        out.insert(c, ((i + 1) % 2) ? Rat(-1) : Rat(1));
    }
    return project ? out.project_gc2() : out;
}

GraphChain differential_d(const GraphChain& c, bool project) {
    GraphChain out;
    for (auto& [k, e] : c.terms()) {
        GraphChain part = differential_d(e.rep, project) * e.coeff;
        out = out + part;
    }
    return project ? out.project_gc2() : out;
}

GraphChain differential_delta(const Graph& g, bool project) {
    GraphChain out;
    for (int i = 0; i < g.e(); i++) {
        out.insert(delete_edge(g, i), ((i + 1) % 2) ? Rat(-1) : Rat(1));
    }
    return project ? out.project_gc2() : out;
}

GraphChain differential_delta(const GraphChain& c, bool project) {
    GraphChain out;
    for (auto& [k, e] : c.terms()) {
        GraphChain part = differential_delta(e.rep, project) * e.coeff;
        out = out + part;
    }
    return project ? out.project_gc2() : out;
}

std::vector<CoreSubgraphTerm> coproduct_ck(const Graph& g) {
    std::vector<CoreSubgraphTerm> out;
    int m = g.e();
    for (uint32_t sub = 1; sub + 1 < (1u << m); sub++) {
        std::vector<int> es;
        for (int i = 0; i < m; i++)
            if (sub & (1u << i)) es.push_back(i);
        Graph gamma = edge_subgraph(g, es);
        if (gamma.loops() < 1) continue;
        if (!is_core(gamma)) continue;
        CoreSubgraphTerm t;
        t.gamma_edges = es;
        t.gamma = gamma;
        // Plain G/gamma: contracting a tadpole just deletes it, so loops in
        // gamma lower the quotient's genus rather than killing the term.
        Graph q = g;
        for (auto it = es.rbegin(); it != es.rend(); ++it) q = contract(q, *it);
        t.quotient = q;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace gcanon
