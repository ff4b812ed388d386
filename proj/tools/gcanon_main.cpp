// gcanon -- canonical differential forms on graph complexes
//
// Exact construction of the invariant forms w^{4k+1} on graphs, graph
// complex homology at low loop order, and Monte-Carlo evaluation of the
// canonical period integrals with Stokes cross-checks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "gcanon/cache.hpp"
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

struct GraphSource {
    std::string fixture_name;
    std::string file;

    Graph load() const {
        if (!fixture_name.empty()) return fixture(fixture_name);
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw CLI::ValidationError("graph", "cannot open " + file);
            std::ostringstream body;
            body << in.rdbuf();
            return Graph::from_json(body.str());
        }
        throw CLI::ValidationError("graph", "need --fixture or --graph");
    }

    std::string key() const { return fixture_name.empty() ? ("file:" + file) : fixture_name; }
};

void add_graph_opts(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("--fixture", src.fixture_name, "named fixture (see `gcanon fixtures`)");
    cmd->add_option("--graph", src.file, "graph JSON file {\"v\":..,\"edges\":[[t,h],..]}");
}

CanonicalFormSpec parse_spec(const std::string& s) {
    std::vector<int> ks;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) ks.push_back(std::stoi(tok));
    }
    return CanonicalFormSpec(ks);
}

std::string spec_str(const std::string& s) { return s; }

double known_target(const std::string& fixture_name, const std::string& spec) {
    const auto& rc = ReferenceConstants::get();
    if (fixture_name == "W3" && spec == "1") return 60 * rc.zeta3.to_double();
    if (fixture_name == "W5" && spec == "2") return 1260 * rc.zeta5.to_double();
    if (fixture_name == "Z5" && spec == "2") return 630 * rc.zeta5.to_double();
    if (fixture_name == "T5" && spec == "2") return 0.0;
    if (fixture_name == "W7" && spec == "3") return 24024 * rc.zeta7.to_double();
    if (fixture_name == "K6" && spec == "1,2")
        return (362880.0 / 16) * (360 * rc.zeta35.to_double() +
                                  690 * rc.zeta3.to_double() * rc.zeta5.to_double() -
                                  29.0 / 315 * rc.pi8.to_double());
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical differential forms on graph complexes"};
    app.require_subcommand(1);

    std::string cache_dir;
    if (const char* env = std::getenv("GCANON_CACHE_DIR")) cache_dir = env;
    app.add_option("--cache-dir", cache_dir, "cache directory (env GCANON_CACHE_DIR)");

    // ---- psi ----
    auto* cmd_psi = app.add_subcommand("psi", "graph polynomial (matrix-tree)");
    GraphSource psi_src;
    add_graph_opts(cmd_psi, psi_src);

    // ---- laplacian ----
    auto* cmd_lap = app.add_subcommand("laplacian", "cycle Laplacian H^T diag(x) H");
    GraphSource lap_src;
    add_graph_opts(cmd_lap, lap_src);

    // ---- dodgson ----
    auto* cmd_dod = app.add_subcommand("dodgson", "graph matrix minor determinant");
    GraphSource dod_src;
    std::vector<int> dod_I, dod_J;
    add_graph_opts(cmd_dod, dod_src);
    cmd_dod->add_option("-I", dod_I, "edge rows to remove (1-based)");
    cmd_dod->add_option("-J", dod_J, "edge columns to remove (1-based)");

    // ---- form ----
    auto* cmd_form = app.add_subcommand("form", "canonical form w^{4k+1} (and wedges)");
    GraphSource form_src;
    std::string form_spec = "1";
    bool form_symbolic = false;
    int form_points = 0;
    add_graph_opts(cmd_form, form_src);
    cmd_form->add_option("--spec", form_spec, "indices k, comma separated (w^{4k+1})");
    cmd_form->add_flag("--symbolic", form_symbolic, "full symbolic expansion");
    cmd_form->add_option("--points", form_points, "certify at N exact random points");

    // ---- integrate ----
    auto* cmd_int = app.add_subcommand("integrate", "Monte-Carlo canonical integral");
    GraphSource int_src;
    std::string int_spec = "1", int_sampler = "hepp";
    double int_samples = 1e6;
    uint64_t int_seed = 1;
    int int_workers = 0;
    double int_rtol = 0;
    bool int_feyn = false;
    add_graph_opts(cmd_int, int_src);
    cmd_int->add_option("--spec", int_spec, "form spec (ignored with --feynman)");
    cmd_int->add_option("-n,--samples", int_samples, "sample count");
    cmd_int->add_option("--seed", int_seed, "RNG seed");
    cmd_int->add_option("--sampler", int_sampler, "uniform | hepp");
    cmd_int->add_option("--workers", int_workers, "worker threads (0 = auto)");
    cmd_int->add_option("--rtol", int_rtol, "relative tolerance vs the known target");
    cmd_int->add_flag("--feynman", int_feyn, "integrate Omega/Psi^2 instead of a spec form");

    // ---- stokes ----
    auto* cmd_st = app.add_subcommand("stokes", "boundary-face residual (should be 0)");
    GraphSource st_src;
    std::string st_spec = "1", st_sampler = "hepp";
    double st_samples = 4e5;
    uint64_t st_seed = 1;
    int st_workers = 0;
    add_graph_opts(cmd_st, st_src);
    cmd_st->add_option("--spec", st_spec, "form spec; needs e_G = deg + 2");
    cmd_st->add_option("-n,--samples", st_samples, "samples per face integral");
    cmd_st->add_option("--seed", st_seed, "RNG seed");
    cmd_st->add_option("--sampler", st_sampler, "uniform | hepp");
    cmd_st->add_option("--workers", st_workers, "worker threads");

    // ---- homology ----
    auto* cmd_hom = app.add_subcommand("homology", "graph complex homology table");
    int hom_hmax = 6;
    std::string hom_format = "table";
    bool hom_verbose = false;
    cmd_hom->add_option("--hmax", hom_hmax, "max loop order (7 is long-running)");
    cmd_hom->add_option("--format", hom_format, "table | json");
    cmd_hom->add_flag("-v,--verbose", hom_verbose, "per-stratum progress");

    // ---- fixtures ----
    auto* cmd_fix = app.add_subcommand("fixtures", "list or export fixtures");
    std::string fix_name;
    bool fix_dot = false;
    cmd_fix->add_option("--name", fix_name, "print one fixture's JSON");
    cmd_fix->add_flag("--dot", fix_dot, "DOT output instead of JSON");

    // ---- selftest ----
    auto* cmd_self = app.add_subcommand("selftest", "run the full property suite");
    uint64_t self_seed = 1;
    int self_instances = 20;
    cmd_self->add_option("--seed", self_seed, "suite seed");
    cmd_self->add_option("--instances", self_instances, "instances per property");

    // ---- wheel-moment ----
    auto* cmd_wm = app.add_subcommand("wheel-moment", "series oracle I^(k)_n");
    int wm_n = 1, wm_k = 0;
    cmd_wm->add_option("-n", wm_n, "wheel parameter (W_{2n+1})");
    cmd_wm->add_option("-k", wm_k, "spoke-product power");

    CLI11_PARSE(app, argc, argv);

    try {
        DiskCache cache(cache_dir);

        if (*cmd_psi) {
            Graph g = psi_src.load();
            std::string key = "psi:" + canonical_certificate(g).canonical_key + ":" + g.to_json();
            if (auto hit = cache.get(key)) {
                std::cout << *hit;
                return 0;
            }
            std::ostringstream out;
            out << graph_polynomial(g).str() << "\n";
            cache.put(key, out.str());
            std::cout << out.str();
            return 0;
        }
        if (*cmd_lap) {
            Graph g = lap_src.load();
            auto b = laplacian(g);
            std::cout << b.Lambda.str();
            std::cout << "psi = " << b.psi.str() << "\n";
            return 0;
        }
        if (*cmd_dod) {
            Graph g = dod_src.load();
            std::vector<int> I, J;
            for (int i : dod_I) I.push_back(i - 1);
            for (int j : dod_J) J.push_back(j - 1);
            std::cout << dodgson(g, I, J).str() << "\n";
            return 0;
        }
        if (*cmd_form) {
            Graph g = form_src.load();
            CanonicalFormSpec spec = parse_spec(form_spec);
            if (form_symbolic) {
                std::string key = "form:" + canonical_certificate(g).canonical_key + ":" +
                                  spec.str() + ":" + g.to_json();
                if (auto hit = cache.get(key)) {
                    std::cout << *hit;
                    return 0;
                }
                std::ostringstream out;
                out << canonical_form(g, spec).str() << "\n";
                cache.put(key, out.str());
                std::cout << out.str();
                return 0;
            }
            int npts = form_points > 0 ? form_points : 5;
            // Certify the eta (graph matrix) route against the Laplacian
            // route at exact random points; if a verified closed form is
            // registered this also pins it, through make_integrand.
            bool all_ok = true;
            for (int p = 0; p < npts; p++) {
                auto pt = random_point(g.e(), 1000 + p, 9999);
                FormValue acc_l, acc_m;
                bool first = true;
                for (int k : spec.ks) {
                    FormValue a = beta_route_lambda(g, pt, 4 * k + 1);
                    FormValue b = beta_route_graph_matrix(g, pt, 4 * k + 1);
                    if (first) {
                        acc_l = a;
                        acc_m = b;
                        first = false;
                    } else {
                        acc_l = wedge_values(acc_l, a);
                        acc_m = wedge_values(acc_m, b);
                    }
                }
                bool ok = (acc_l == acc_m);
                all_ok &= ok;
                std::cout << "point " << (p + 1) << "/" << npts << ": "
                          << (ok ? "PASS" : "FAIL") << "\n";
            }
            std::cout << (all_ok ? "PASS" : "FAIL") << " route agreement at " << npts
                      << " exact points\n";
            return all_ok ? 0 : 1;
        }
        if (*cmd_int) {
            Graph g = int_src.load();
            IntegrateOptions opt;
            opt.sampler = sampler_from_string(int_sampler);
            opt.samples = long(int_samples);
            opt.seed = int_seed;
            opt.workers = int_workers;
            std::string key = "integrate:" + int_src.key() + ":" + g.to_json() + ":" + int_spec +
                              ":" + sampler_name(opt.sampler) + ":" + std::to_string(opt.samples) +
                              ":" + std::to_string(opt.seed) + (int_feyn ? ":feyn" : "");
            std::string body;
            if (auto hit = cache.get(key)) {
                body = *hit;
            } else {
                IntegralEstimate est;
                std::optional<double> target;
                if (int_feyn) {
                    auto f = feynman_residue_integrand(g);
                    est = integrate_with(*f, opt);
                } else {
                    CanonicalFormSpec spec = parse_spec(int_spec);
                    est = integrate(g, spec, opt);
                    double t = known_target(int_src.fixture_name, int_spec);
                    if (!std::isnan(t)) target = t;
                }
                body = est.to_json(g, int_feyn ? "feynman" : spec_str(int_spec), target) + "\n";
                cache.put(key, body);
            }
            std::cout << body;
            if (int_rtol > 0) {
                auto j = nlohmann::json::parse(body);
                if (j.contains("target")) {
                    double v = j["value"].get<double>();
                    double t = j["target"].get<double>();
                    double se = j["std_error"].get<double>();
                    double tol = std::max(int_rtol * std::fabs(t), 3 * se);
                    if (std::fabs(v - t) > tol) return 1;
                }
            }
            return 0;
        }
        if (*cmd_st) {
            Graph g = st_src.load();
            IntegrateOptions opt;
            opt.sampler = sampler_from_string(st_sampler);
            opt.samples = long(st_samples);
            opt.seed = st_seed;
            opt.workers = st_workers;
            auto r = stokes_residual(g, parse_spec(st_spec), opt);
            std::cout << r.to_json(g, st_spec) << "\n";
            if (!r.all_terms_vanish && std::fabs(r.value) > 3 * r.std_error) return 1;
            return 0;
        }
        if (*cmd_hom) {
            auto rep = homology_dimensions(hom_hmax, cache_dir, hom_verbose);
            if (hom_format == "json")
                std::cout << rep.to_json() << "\n";
            else
                std::cout << rep.table_text();
            return 0;
        }
        if (*cmd_fix) {
            if (!fix_name.empty()) {
                Graph g = fixture(fix_name);
                std::cout << (fix_dot ? g.to_dot() : g.to_json() + "\n");
            } else {
                for (auto& n : fixture_names()) std::cout << n << "\n";
            }
            return 0;
        }
        if (*cmd_self) {
            auto results = run_property_suite(self_seed, self_instances);
            results.push_back(mu_even_power_report(self_seed));
            bool all = true;
            for (auto& r : results) {
                std::printf("[%s] %-45s (%d instances)%s%s\n", r.pass ? "PASS" : "FAIL",
                            r.name.c_str(), r.instances, r.detail.empty() ? "" : " -- ",
                            r.detail.c_str());
                all &= r.pass;
            }
            return all ? 0 : 1;
        }
        if (*cmd_wm) {
            std::cout << wheel_moment(wm_n, wm_k).str(25) << "\n";
            return 0;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
