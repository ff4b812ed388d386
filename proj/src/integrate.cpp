#include "gcanon/integrate.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gcanon/chain.hpp"
#include "gcanon/rng.hpp"
#include "json.hpp"

namespace gcanon {

Sampler sampler_from_string(const std::string& s) {
    if (s == "uniform") return Sampler::kUniform;
    if (s == "hepp") return Sampler::kHepp;
    throw std::domain_error("unknown sampler: " + s);
}

std::string sampler_name(Sampler s) { return s == Sampler::kUniform ? "uniform" : "hepp"; }

bool IntegralEstimate::consistent_with_zero() const {
    if (exact_zero) return true;
    return std::fabs(value) <= std::max(1e-6 * zero_scale, 3.0 * std_error);
}

std::string IntegralEstimate::to_json(const Graph& g, const std::string& spec,
                                      std::optional<double> target) const {
    nlohmann::json j;
    j["graph"] = g.label ? *g.label : std::string("<anon>");
    j["edges"] = g.e();
    j["spec"] = spec;
    j["sampler"] = sampler_name(sampler);
    j["seed"] = seed;
    j["samples"] = samples;
    j["value"] = value;
    j["std_error"] = std_error;
    j["exact_zero"] = exact_zero;
    j["integrand"] = integrand;
    if (target) {
        j["target"] = *target;
        if (std_error > 0) j["sigmas"] = (value - *target) / std_error;
    }
    return j.dump(2);
}

namespace {

struct BlockStat {
    double sum = 0, sumsq = 0, sumabs = 0;
    long count = 0;
};

constexpr long kBlock = 16384;

// One sample of the estimator; stream = global sample index.
double sample_value(const Integrand& f, Sampler sampler, const CounterRng& rng, uint64_t stream,
                    double* absval) {
    int m = f.edges();
    double x[32];
    if (sampler == Sampler::kUniform) {
        // Dirichlet(1,..,1) via normalised exponentials; estimator
        // g(x) / (m-1)!  (projected-simplex volume).
        double tot = 0;
        for (int e = 0; e < m; e++) {
            x[e] = rng.exponential(stream, uint64_t(e));
            tot += x[e];
        }
        for (int e = 0; e < m; e++) x[e] /= tot;
        double fact = 1;
        for (int i = 2; i < m; i++) fact *= i;
        double v = f.eval(x) / fact;
        *absval = std::fabs(v);
        return v;
    }
    // Hepp sectors: uniform permutation + cube point; x are cumulative
    // products down the sector; estimator e! * g(x) * prod t_j^{e-j}.
    int perm[32];
    for (int e = 0; e < m; e++) perm[e] = e;
    for (int e = m - 1; e > 0; e--) {
        uint64_t r = rng.raw(stream, uint64_t(64 + e));
        int j = int(r % uint64_t(e + 1));
        std::swap(perm[e], perm[j]);
    }
    double weight = 1.0;
    double cur = 1.0;
    x[perm[0]] = 1.0;
    for (int k = 1; k < m; k++) {
        double t = rng.uniform(stream, uint64_t(k));
        cur *= t;
        x[perm[k]] = cur;
        // t_j^{e-j} with j = k+1 in 1-based counting
        for (int p = 0; p < m - 1 - k; p++) weight *= t;
    }
    double fact = 1;
    for (int i = 2; i <= m; i++) fact *= i;
    double v = fact * f.eval(x) * weight;
    *absval = std::fabs(v);
    return v;
}

}  // namespace

IntegralEstimate integrate_with(const Integrand& f, const IntegrateOptions& opt) {
    IntegralEstimate out;
    out.sampler = opt.sampler;
    out.seed = opt.seed;
    out.samples = opt.samples;
    out.integrand = f.describe();
    if (f.always_zero()) {
        out.exact_zero = true;
        return out;
    }
    long nblocks = (opt.samples + kBlock - 1) / kBlock;
    std::vector<BlockStat> blocks(nblocks);
    std::atomic<long> next{0};
    CounterRng rng{opt.seed};
    int nw = opt.workers > 0 ? opt.workers : int(std::thread::hardware_concurrency());
    if (nw < 1) nw = 1;
    auto work = [&]() {
        for (;;) {
            long b = next.fetch_add(1);
            if (b >= nblocks) return;
            long lo = b * kBlock, hi = std::min(opt.samples, lo + kBlock);
            double s = 0, c = 0, sq = 0, sa = 0;
            for (long i = lo; i < hi; i++) {
                double av = 0;
                double v = sample_value(f, opt.sampler, rng, uint64_t(i), &av);
                double y = v - c, t = s + y;
                c = (t - s) - y;
                s = t;
                sq += v * v;
                sa += av;
            }
            blocks[b].sum = s;
            blocks[b].sumsq = sq;
            blocks[b].sumabs = sa;
            blocks[b].count = hi - lo;
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; w++) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    double sum = 0, sumsq = 0, sumabs = 0;
    long count = 0;
    for (auto& b : blocks) {
        sum += b.sum;
        sumsq += b.sumsq;
        sumabs += b.sumabs;
        count += b.count;
    }
    double mean = sum / double(count);
    double var = std::max(0.0, sumsq / double(count) - mean * mean);
    out.value = mean;
    out.std_error = std::sqrt(var / double(count));
    out.zero_scale = sumabs / double(count);
    return out;
}

IntegralEstimate integrate(const Graph& g, const CanonicalFormSpec& spec,
                           const IntegrateOptions& opt) {
    if (spec.degree() + 1 != g.e())
        throw std::domain_error("integrate: need e_G = deg(spec) + 1");
    auto f = make_integrand(g, spec);
    return integrate_with(*f, opt);
}

std::string StokesResidual::to_json(const Graph& g, const std::string& spec) const {
    nlohmann::json j;
    j["graph"] = g.label ? *g.label : std::string("<anon>");
    j["spec"] = spec;
    j["value"] = value;
    j["std_error"] = std_error;
    j["all_terms_vanish"] = all_terms_vanish;
    j["terms"] = nlohmann::json::array();
    for (auto& t : terms) {
        nlohmann::json tj;
        tj["kind"] = t.kind;
        if (t.edge >= 0) tj["edge"] = t.edge + 1;
        if (!t.gamma.empty()) tj["gamma_edges"] = t.gamma;
        tj["sign"] = t.sign;
        tj["value"] = t.estimate.value;
        tj["std_error"] = t.estimate.std_error;
        j["terms"].push_back(tj);
    }
    return j.dump(2);
}

StokesResidual stokes_residual(const Graph& g, const CanonicalFormSpec& spec,
                               const IntegrateOptions& opt) {
    if (spec.degree() + 2 != g.e())
        throw std::domain_error("stokes_residual: need e_G = deg(spec) + 2");
    if (g.has_tadpole()) throw std::domain_error("stokes_residual: tadpoles not supported");
    StokesResidual out;
    double var = 0;

    // Contraction faces x_e = 0, sign (-1)^e (1-based).
    for (int e = 0; e < g.e(); e++) {
        Graph q = contract_kill_loops(g, e);
        if (q.is_empty()) continue;
        if (integral_vanishes(q, spec)) continue;
        StokesTerm t;
        t.kind = "contract";
        t.edge = e;
        t.sign = (e % 2 == 0) ? -1 : 1;  // (-1)^{e+1-based}
        t.estimate = integrate(q, spec, opt);
        out.value += t.sign * t.estimate.value;
        var += t.estimate.std_error * t.estimate.std_error;
        out.terms.push_back(std::move(t));
    }

    // Product faces over proper core subgraphs, through the full coproduct
    // (the omega x 1 leg reproduces the deletion differential).
    auto cop = coproduct(spec);
    for (auto& term : coproduct_ck(g)) {
        int eg = int(term.gamma_edges.size());
        int eq = g.e() - eg;
        // shuffle parity of (gamma, complement)
        int inv = 0;
        {
            int seen_out = 0;
            for (int e = 0, gi = 0; e < g.e(); e++) {
                if (gi < eg && term.gamma_edges[gi] == e) {
                    inv += seen_out;
                    gi++;
                } else {
                    seen_out++;
                }
            }
        }
        int chi = (inv % 2) ? -1 : 1;
        for (auto& sw : cop) {
            int dl = sw.left.degree(), dr = sw.right.degree();
            if (dl != eg - 1 || dr != eq - 1) continue;
            // Unit legs only integrate over points.
            double lv = 0, lerr = 0, rv = 0, rerr = 0;
            bool lzero = false, rzero = false;
            IntegralEstimate le, re;
            if (sw.left.is_unit()) {
                lv = 1;  // sigma_gamma is a point iff e_gamma = 1 (tadpole: excluded)
                if (eg != 1) continue;
            } else {
                if (!term.gamma.is_connected()) {
                    // component-wise product; a primitive form on a
                    // disconnected gamma integrates to 0 unless one
                    // component carries everything -- skip via vanishing
                    lzero = true;
                } else if (integral_vanishes(term.gamma, sw.left)) {
                    lzero = true;
                } else {
                    le = integrate(term.gamma, sw.left, opt);
                    lv = le.value;
                    lerr = le.std_error;
                }
            }
            if (lzero) continue;
            if (sw.right.is_unit()) {
                rv = 1;
                if (eq != 1) continue;
            } else {
                if (!term.quotient.is_connected() || term.quotient.has_tadpole()) {
                    if (integral_vanishes(term.quotient, sw.right)) rzero = true;
                }
                if (!rzero && integral_vanishes(term.quotient, sw.right)) rzero = true;
                if (!rzero) {
                    re = integrate(term.quotient, sw.right, opt);
                    rv = re.value;
                    rerr = re.std_error;
                }
            }
            if (rzero) continue;
            StokesTerm t;
            t.kind = "coproduct";
            {
                std::ostringstream os;
                for (int e : term.gamma_edges) os << (e + 1) << " ";
                t.gamma = os.str();
            }
            t.sign = chi * sw.sign;
            t.estimate.value = lv * rv;
            t.estimate.std_error = std::sqrt(lerr * lerr * rv * rv + rerr * rerr * lv * lv);
            out.value += t.sign * t.estimate.value;
            var += t.estimate.std_error * t.estimate.std_error;
            out.terms.push_back(std::move(t));
        }
    }
    out.std_error = std::sqrt(var);
    out.all_terms_vanish = out.terms.empty();
    return out;
}

}  // namespace gcanon
