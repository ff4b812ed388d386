// Acceptance suite: one line per criterion, exit 0 iff all of the
// non-stretch criteria pass.  Stretch targets are reported but never fail
// the run; set GCANON_STRETCH_SAMPLES to raise their sample counts.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "gcanon/canform.hpp"
#include "gcanon/canonical.hpp"
#include "gcanon/chain.hpp"
#include "gcanon/homology.hpp"
#include "gcanon/integrate.hpp"
#include "gcanon/laplacian.hpp"
#include "gcanon/point_eval.hpp"
#include "gcanon/selftest.hpp"
#include "gcanon/wheel_moments.hpp"
#include "gcanon/zeta.hpp"

using namespace gcanon;

namespace {

int g_failures = 0;

void report(int crit, bool pass, const std::string& what, bool stretch = false) {
    std::printf("[%s] criterion %2d%s: %s\n", pass ? "PASS" : (stretch ? "MISS" : "FAIL"), crit,
                stretch ? " (stretch)" : "", what.c_str());
    std::fflush(stdout);
    if (!pass && !stretch) g_failures++;
}

double secs_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const char* kPsiW3 =
    "x1*x2*x3 + x1*x2*x4 + x1*x2*x5 + x1*x3*x4 + x1*x3*x6 + x1*x4*x5 + x1*x4*x6 + x1*x5*x6 + "
    "x2*x3*x5 + x2*x3*x6 + x2*x4*x5 + x2*x4*x6 + x2*x5*x6 + x3*x4*x5 + x3*x4*x6 + x3*x5*x6";

// Exact expected form value of g * Omega at an integer point.
FormValue omega_times(const Rat& g, const std::vector<Rat>& pt) {
    FormValue out;
    int m = int(pt.size());
    uint32_t full = (1u << m) - 1;
    for (int i = 0; i < m; i++) {
        Rat c = g * pt[i];
        if (i % 2) c = -c;  // (-1)^{i-1}, i 1-based
        if (c != 0) out[full & ~(1u << i)] = c;
    }
    return out;
}

bool certify_wheel_family(const Graph& g, const CanonicalFormSpec& spec,
                          const std::vector<std::pair<Rat, int>>& shape, int spoke_pow_step,
                          int points, bool use_dual, uint64_t seed) {
    // shape: (coefficient, psi_power) pairs; piece j carries the spoke
    // product to the power j * spoke_pow_step (0 for K6's all-edge product
    // handled by caller through spoke_pow_step = -1).
    MultiPoly psi = graph_polynomial(g);
    auto deg = g.degrees();
    int hub = int(std::max_element(deg.begin(), deg.end()) - deg.begin());
    for (int p = 0; p < points; p++) {
        auto pt = random_point(g.e(), seed + p, 9999);
        std::vector<Rat> rp;
        for (auto& c : pt) rp.push_back(Rat(c));
        Rat psiv = psi.eval(rp);
        Rat spoke(1), all(1);
        for (int e = 0; e < g.e(); e++) {
            all *= rp[e];
            if (g.edges[e].first == hub || g.edges[e].second == hub) spoke *= rp[e];
        }
        Rat gval(0);
        for (size_t j = 0; j < shape.size(); j++) {
            Rat num = shape[j].first;
            if (spoke_pow_step < 0) {
                num *= all;
            } else {
                for (int q = 0; q < int(j) * spoke_pow_step; q++) num *= 1;
                Rat sp(1);
                for (int q = 0; q < int(j) * spoke_pow_step; q++) sp *= spoke;
                num *= sp;
            }
            Rat den(1);
            for (int q = 0; q < shape[j].second; q++) den *= psiv;
            gval += num / den;
        }
        FormValue expect = omega_times(gval, rp);
        FormValue got;
        bool first = true;
        for (int k : spec.ks) {
            FormValue part =
                use_dual ? beta_route_dual(g, pt, 4 * k + 1) : beta_route_lambda(g, pt, 4 * k + 1);
            if (first) {
                got = std::move(part);
                first = false;
            } else {
                got = wedge_values(got, part);
            }
        }
        if (!(got == expect)) return false;
    }
    return true;
}

}  // namespace

int main() {
    auto wall0 = std::chrono::steady_clock::now();
    long stretch_samples = 2000000;
    if (const char* env = std::getenv("GCANON_STRETCH_SAMPLES"))
        stretch_samples = std::atol(env);
    const auto& rc = ReferenceConstants::get();

    // ---- 1: Psi_W3 display, det(Lambda), det(M) ----
    {
        auto t0 = std::chrono::steady_clock::now();
        Graph w3 = wheel(3);
        MultiPoly psi = graph_polynomial(w3);
        bool ok = psi.str() == kPsiW3;
        ok = ok && (laplacian(w3).psi == psi);
        ok = ok && (graph_matrix(w3).det() == psi);
        double dt = secs_since(t0);
        std::ostringstream os;
        os << "Psi_W3 = the 16-monomial display; det(Lambda) and det(M) agree (" << dt << " s)";
        report(1, ok && dt < 1.0, os.str());
    }

    // ---- 2: beta^3 (2x2) and beta^5 (3x3 symmetric) closed forms ----
    {
        PolyMatrix X2(2, 2, 4);
        X2.at(0, 0) = MultiPoly::variable(4, 0);
        X2.at(0, 1) = MultiPoly::variable(4, 2);
        X2.at(1, 0) = MultiPoly::variable(4, 3);
        X2.at(1, 1) = MultiPoly::variable(4, 1);
        DiffForm b3 = maurer_cartan_trace(X2, 3);
        DiffForm e3(4, 3, X2.det(), 2);
        {
            DiffForm vol = projective_volume_form(4);
            for (auto& [m, p] : vol.comps()) e3.add_comp(m, p * Rat(-3));  // 3*sum (-1)^i
        }
        bool ok = DiffForm::equal(b3, e3);

        PolyMatrix X3(3, 3, 6);
        auto A = [&](int i) { return MultiPoly::variable(6, i); };
        X3.at(0, 0) = A(0);
        X3.at(1, 1) = A(1);
        X3.at(2, 2) = A(2);
        X3.at(0, 1) = X3.at(1, 0) = A(3);
        X3.at(0, 2) = X3.at(2, 0) = A(4);
        X3.at(1, 2) = X3.at(2, 1) = A(5);
        DiffForm b5 = maurer_cartan_trace(X3, 5);
        DiffForm e5(6, 5, X3.det(), 2);
        {
            DiffForm vol = projective_volume_form(6);
            for (auto& [m, p] : vol.comps()) e5.add_comp(m, p * Rat(10));  // -10*sum (-1)^i
        }
        ok = ok && DiffForm::equal(b5, e5);
        report(2, ok, "beta^3 (generic 2x2) and beta^5 (generic symmetric 3x3) exact");
    }

    // ---- 3: w5_W3 symbolic; w9_W5 and w5^w9_K6 at 40 exact points ----
    {
        Graph w3 = wheel(3);
        DiffForm w5 = canonical_form(w3, CanonicalFormSpec({1}));
        MultiPoly psi = graph_polynomial(w3);
        DiffForm expect(6, 5, psi, 2);
        DiffForm vol = projective_volume_form(6);
        for (auto& [m, p] : vol.comps()) expect.add_comp(m, p * Rat(10));
        bool ok3a = DiffForm::equal(w5, expect);
        report(3, ok3a, "w5_W3 = 10 Omega/Psi^2 (full symbolic expansion)");

        auto t0 = std::chrono::steady_clock::now();
        bool ok3b = certify_wheel_family(fixture("W5"), CanonicalFormSpec({2}),
                                         {{Rat(18), 2}, {Rat(18 * 12), 3}}, 1, 40, false, 31000);
        std::ostringstream os;
        os << "w9_W5 = 18(1/Psi^2 + 12 prod_spokes/Psi^3) Omega at 40 exact points ("
           << secs_since(t0) << " s)";
        report(3, ok3b, os.str());

        t0 = std::chrono::steady_clock::now();
        bool ok3c = certify_wheel_family(fixture("K6"), CanonicalFormSpec({1, 2}),
                                         {{Rat(362880, 8), 3}}, -1, 40, true, 32000);
        std::ostringstream os2;
        os2 << "w5^w9_K6 = (9!/8) prod_e x_e / Psi^3 Omega at 40 exact points ("
            << secs_since(t0) << " s); Schwartz-Zippel: fail prob < (45/9999)^40";
        report(3, ok3c, os2.str());
    }

    // ---- 4: w13_W7 at 40 exact points, < 10 min ----
    {
        auto t0 = std::chrono::steady_clock::now();
        // parallelize the points over threads
        Graph w7 = wheel(7);
        std::vector<int> results(40, 0);
        std::atomic<int> next{0};
        auto work = [&]() {
            for (;;) {
                int p = next.fetch_add(1);
                if (p >= 40) return;
                bool ok = certify_wheel_family(
                    w7, CanonicalFormSpec({3}),
                    {{Rat(26), 2}, {Rat(26 * 60), 3}, {Rat(26 * 360), 4}}, 1, 1, false,
                    41000 + p);
                results[p] = ok ? 1 : 0;
            }
        };
        unsigned nw = std::max(2u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nw; w++) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        bool ok = true;
        for (int r : results) ok &= (r == 1);
        double dt = secs_since(t0);
        std::ostringstream os;
        os << "w13_W7 = 26(1 + 60Y + 360Y^2) Omega/Psi^2 at 40 exact points (" << dt << " s)";
        report(4, ok && dt < 600, os.str());
    }

    // ---- 5: randomized property suite ----
    {
        auto results = run_property_suite(20260809, 20);
        bool ok = true;
        std::ostringstream os;
        for (auto& r : results) {
            ok &= r.pass;
            if (!r.pass) os << " [" << r.name << "]";
        }
        report(5, ok, ok ? "property suite: " + std::to_string(results.size()) +
                               " families x >= 20 instances, zero failures"
                         : "property failures:" + os.str());
        auto mu = mu_even_power_report(77);
        std::printf("       note: %s -> %s (%s)\n", mu.name.c_str(), mu.pass ? "holds" : "fails",
                    mu.detail.c_str());
    }

    // ---- 6: d^2 = 0 and delta^2 = 0 as matrices, h <= 5 ----
    {
        bool ok = true;
        for (int h = 3; h <= 5 && ok; h++) {
            std::map<int, StratumBasis> cur, lower;
            for (int e = stratum_min_edges(h); e <= stratum_max_edges(h); e++)
                cur[e] = generate_stratum(h, e);
            for (int e = stratum_min_edges(h - 1); e <= stratum_max_edges(h - 1); e++)
                lower[e] = generate_stratum(h - 1, e);
            for (int e = stratum_min_edges(h - 2); e <= stratum_max_edges(h - 2); e++)
                generate_stratum(h - 2, e);
            // d^2 via chains (matrix composition checked in unit tests too)
            for (auto& [e, sb] : cur)
                for (auto& g : sb.basis) {
                    if (!differential_d(differential_d(g)).is_zero()) ok = false;
                    if (!differential_delta(differential_delta(g)).is_zero()) ok = false;
                }
        }
        report(6, ok, "d^2 = 0 and delta^2 = 0 on every stratum with h <= 5");
    }

    // ---- 7: homology table through h = 6 ----
    {
        auto t0 = std::chrono::steady_clock::now();
        auto rep = homology_dimensions(6);
        bool ok = true;
        auto at = [&](int h, int n) -> long {
            auto ih = rep.homology.find(h);
            if (ih == rep.homology.end()) return 0;
            auto in = ih->second.find(n);
            return in == ih->second.end() ? 0 : in->second;
        };
        ok &= at(3, 0) == 1;
        ok &= at(5, 0) == 1;
        ok &= at(6, 3) == 1;
        for (auto& [h, row] : rep.homology)
            for (auto& [n, d] : row) {
                if ((h == 3 && n == 0) || (h == 5 && n == 0) || (h == 6 && n == 3)) continue;
                if (d != 0) ok = false;
            }
        double dt = secs_since(t0);
        std::ostringstream os;
        os << "homology h = 1..6 reproduces the low-loop table (H_0: 1@3, 1@5; H_3: 1@6; rest 0) ("
           << dt << " s)";
        report(7, ok && dt < 1800, os.str());
    }

    // ---- 8: dX5 = 2 Z5 - W5 exactly ----
    {
        GraphChain d = differential_d(fixture("X5"));
        bool ok = d.size() == 2 && d.coeff_of(fixture("Z5")) == 2 &&
                  d.coeff_of(fixture("W5")) == -1;
        report(8, ok, "dX5 = 2*Z5 - W5 holds exactly in chain arithmetic");
    }

    // ---- 9-11: canonical integrals ----
    IntegrateOptions mc;
    mc.sampler = Sampler::kHepp;
    mc.workers = 0;
    {
        auto t0 = std::chrono::steady_clock::now();
        mc.samples = 10000000;
        mc.seed = 90001;
        auto est = integrate(fixture("W3"), CanonicalFormSpec({1}), mc);
        double target = 60 * rc.zeta3.to_double();
        double tol = std::max(0.005 * target, 3 * est.std_error);
        std::ostringstream os;
        os << "I_W3(w5) = " << est.value << " +- " << est.std_error << " vs 60 zeta(3) = "
           << target << " (0.5% tol, 1e7 samples, " << secs_since(t0) << " s)";
        report(9, std::fabs(est.value - target) <= tol, os.str());
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        mc.samples = 10000000;
        mc.seed = 90002;
        auto w5 = integrate(fixture("W5"), CanonicalFormSpec({2}), mc);
        double tw = 1260 * rc.zeta5.to_double();
        bool ok1 = std::fabs(w5.value - tw) <= std::max(0.01 * tw, 3 * w5.std_error);
        mc.seed = 90003;
        auto z5 = integrate(fixture("Z5"), CanonicalFormSpec({2}), mc);
        double tz = 630 * rc.zeta5.to_double();
        bool ok2 = std::fabs(z5.value - tz) <= std::max(0.01 * tz, 3 * z5.std_error);
        std::ostringstream os;
        os << "I_W5(w9) = " << w5.value << " +- " << w5.std_error << " vs " << tw << "; I_Z5(w9) = "
           << z5.value << " +- " << z5.std_error << " vs " << tz << " (1% tol, "
           << secs_since(t0) << " s)";
        report(10, ok1 && ok2, os.str());
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        mc.samples = 10000000;
        mc.seed = 90004;
        auto est = integrate(fixture("T5"), CanonicalFormSpec({2}), mc);
        std::ostringstream os;
        os << "I_T5(w9) = " << est.value << " +- " << est.std_error << " (|I| <= 3 sigma, "
           << secs_since(t0) << " s)";
        report(11, std::fabs(est.value) <= 3 * est.std_error, os.str());
    }

    // ---- 12: Stokes residuals ----
    {
        auto t0 = std::chrono::steady_clock::now();
        IntegrateOptions so = mc;
        so.samples = 2000000;
        so.seed = 90005;
        auto r1 = stokes_residual(fixture("X5"), CanonicalFormSpec({2}), so);
        bool ok1 = std::fabs(r1.value) <= 3 * r1.std_error;

        Graph g7 = subdivide_edge(wheel(3), 0);
        g7.label = "W3-subdivided";
        so.seed = 90006;
        auto r2 = stokes_residual(g7, CanonicalFormSpec({1}), so);
        bool ok2 = !r2.all_terms_vanish && std::fabs(r2.value) <= 3 * r2.std_error;

        Graph g7b = duplicate_edge(wheel(3), 0);
        g7b.label = "W3-doubled";
        so.seed = 90007;
        auto r3 = stokes_residual(g7b, CanonicalFormSpec({1}), so);
        bool ok3 = !r3.all_terms_vanish && std::fabs(r3.value) <= 3 * r3.std_error;

        std::ostringstream os;
        os << "Stokes residuals: X5[w9] = " << r1.value << " +- " << r1.std_error
           << " (encodes I_W5 - 2 I_Z5); 7-edge graphs: " << r2.value << ", " << r3.value << " ("
           << secs_since(t0) << " s)";
        report(12, ok1 && ok2 && ok3, os.str());
    }

    // ---- 13: series-oracle consistency ----
    {
        Real lhs1 = Real(18L) * (wheel_moment(2, 0) + Real(12L) * wheel_moment(2, 1));
        Real rhs1 = Real(1260L) * rc.zeta5;
        double r1 = std::fabs((lhs1 / rhs1).to_double() - 1.0);
        Real lhs2 = Real(26L) * (wheel_moment(3, 0) + Real(60L) * wheel_moment(3, 1) +
                                 Real(360L) * wheel_moment(3, 2));
        Real rhs2 = Real(24024L) * rc.zeta7;
        double r2 = std::fabs((lhs2 / rhs2).to_double() - 1.0);
        std::ostringstream os;
        os << "18(I02 + 12 I12) = 1260 zeta(5) and 26(I03 + 60 I13 + 360 I23) = 24024 zeta(7), "
              "rel err "
           << r1 << ", " << r2;
        report(13, r1 < 1e-12 && r2 < 1e-12, os.str());
    }

    // ---- 14: stretch ----
    {
        IntegrateOptions so = mc;
        so.samples = stretch_samples;
        so.seed = 90008;
        auto t0 = std::chrono::steady_clock::now();
        auto k6 = integrate(fixture("K6"), CanonicalFormSpec({1, 2}), so);
        double tk = (362880.0 / 16) * (360 * rc.zeta35.to_double() +
                                       690 * rc.zeta3.to_double() * rc.zeta5.to_double() -
                                       29.0 / 315 * rc.pi8.to_double());
        bool okk = std::fabs(k6.value - tk) <= std::max(0.05 * tk, 3 * k6.std_error);
        std::ostringstream os;
        os << "I_K6(w5^w9) = " << k6.value << " +- " << k6.std_error << " vs " << tk << " (5%, "
           << so.samples << " samples, " << secs_since(t0) << " s)";
        report(14, okk, os.str(), /*stretch=*/true);

        so.seed = 90009;
        t0 = std::chrono::steady_clock::now();
        auto w7 = integrate(wheel(7), CanonicalFormSpec({3}), so);
        double tw = 24024 * rc.zeta7.to_double();
        bool okw = std::fabs(w7.value - tw) <= std::max(0.02 * tw, 3 * w7.std_error);
        std::ostringstream os2;
        os2 << "I_W7(w13) = " << w7.value << " +- " << w7.std_error << " vs 24024 zeta(7) = " << tw
            << " (2%, " << so.samples << " samples, " << secs_since(t0) << " s)";
        report(14, okw, os2.str(), /*stretch=*/true);
    }

    std::printf("----\n%s: %d failure(s), total %.1f s\n", g_failures ? "FAIL" : "PASS",
                g_failures, secs_since(wall0));
    return g_failures ? 1 : 0;
}
