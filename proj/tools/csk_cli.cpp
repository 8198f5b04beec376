#include <CLI11.hpp>

#include "csk/halfline_ops.hpp"
#include "csk/kernels.hpp"
#include "csk/maximal.hpp"
#include "csk/parallel.hpp"
#include "csk/params.hpp"
#include "csk/report.hpp"
#include "csk/sab.hpp"
#include "csk/suites.hpp"
#include "csk/tensor.hpp"

#include <fstream>
#include <iostream>
#include <mutex>

namespace {

using csk::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_domain = 2;
constexpr int exit_suite_fail = 3;

// "a,b,c" or "lo:hi:n" (geometric) -> list of values
std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        const auto c1 = text.find(':');
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos) throw csk::DomainError("range needs lo:hi:n");
        const double lo = std::stod(text.substr(0, c1));
        const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        const int n = std::stoi(text.substr(c2 + 1));
        if (n == 1) return {lo};
        return csk::geometric_grid(lo, hi, static_cast<std::size_t>(n));
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::stod(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

csk::Realization parse_realization(const std::string& name)
{
    if (name == "neumann") return csk::Realization::Neumann;
    if (name == "dirichlet") return csk::Realization::Dirichlet;
    if (name == "standard") return csk::Realization::Standard;
    if (name == "alternate") return csk::Realization::Alternate;
    throw csk::DomainError("unknown realization: " + name);
}

void emit(const ordered_json& j, const std::string& path)
{
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream os(path);
        os << j.dump(2) << "\n";
    }
}

int cmd_classify(double b, double c, double m, double p, bool has_space,
                 bool rellich, double k_shift, bool has_shift, const std::string& out)
{
    const csk::OperatorParams op{b, c};
    ordered_json j;
    j["b"] = b;
    j["c"] = c;
    j["D"] = op.discriminant();

    const auto roots = csk::indicial_roots(op);
    if (!roots) {
        j["error"] = "NegativeDiscriminant";
        emit(j, out);
        return exit_domain;
    }
    j["s1"] = roots->s1;
    j["s2"] = roots->s2;
    const auto win = csk::generation_interval(op);
    j["generation_window"] = {win->lo, win->hi};

    if (has_space) {
        const csk::SpaceParams sp{1, m, p};
        j["m"] = m;
        j["p"] = p;
        j["q"] = sp.homogeneity_index();
        const auto cl = csk::classify_realization(op, sp);
        if (cl.status == csk::ClassifyStatus::OutsideGenerationWindow) {
            j["classification"] = "outside-generation-window";
        } else {
            j["classification"] = {{"maximal", cl.value.maximal},
                                   {"minimal", cl.value.minimal},
                                   {"unique", cl.value.unique},
                                   {"alternate_exists", cl.value.alternate_exists}};
        }
        for (auto kind : {csk::HardyKind::H1, csk::HardyKind::H2}) {
            const auto h = csk::hardy_constant(c, sp, kind);
            j[kind == csk::HardyKind::H1 ? "hardy_h1" : "hardy_h2"] =
                h ? ordered_json(*h) : ordered_json("unbounded");
        }
    }
    if (rellich) {
        const auto rc = csk::rellich_constants(op, {1, has_space ? m : 0.0, has_space ? p : 2.0});
        ordered_json r;
        r["gamma_p"] = rc.gamma_p;
        r["in_parabola"] = rc.in_parabola;
        if (rc.best_constant) r["best_constant"] = *rc.best_constant;
        j["rellich"] = std::move(r);
    }
    if (has_shift) {
        const auto sh = csk::similarity_shift(op, {1, has_space ? m : 0.0, has_space ? p : 2.0}, k_shift);
        j["similarity"] = {{"k", k_shift}, {"b", sh.op.b}, {"c", sh.op.c}, {"m", sh.sp.m}};
    }
    emit(j, out);
    return exit_ok;
}

int cmd_kernel_eval(const csk::KernelSpec& spec, const std::vector<double>& ts,
                    const std::vector<double>& ys, const std::vector<double>& rhos,
                    double kappa, const std::string& out)
{
    const csk::EnvelopeParams env = csk::envelope_check(spec, kappa, false, 20000).env;

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        os = &file;
    }
    os->precision(17);
    *os << "t,y,rho,p,dp_dy,envelope\n";
    for (double t : ts)
        for (double y : ys)
            for (double rho : rhos) {
                const double p = csk::heat_kernel(spec, t, y, rho);
                const double dp = csk::heat_kernel_dy(spec, t, y, rho);
                const double e = env.value(t, y, rho);
                *os << t << ',' << y << ',' << rho << ',' << p << ',' << dp << ',' << e << '\n';
            }
    return exit_ok;
}

int cmd_verify(const std::string& suite, const csk::SuiteConfig& cfg, const std::string& out)
{
    const auto& reg = csk::suite_registry();
    std::vector<std::string> names;
    if (suite == "all") {
        for (const auto& [n, fn] : reg) names.push_back(n);
    } else {
        if (!reg.count(suite)) {
            std::cerr << "unknown suite: " << suite << "\n";
            return exit_domain;
        }
        names.push_back(suite);
    }

    std::vector<csk::ProbeReport> reports(names.size());
    std::vector<std::string> errors(names.size());
    std::mutex mu;
    csk::parallel_for(names.size(), [&](std::size_t i) {
        csk::SuiteConfig local = cfg;
        // per-suite deterministic seed, independent of scheduling
        local.seed = cfg.seed * 1000003u + std::hash<std::string>{}(names[i]) % 997u;
        try {
            reports[i] = csk::run_suite(names[i], local);
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(mu);
            errors[i] = e.what();
        }
    });

    bool all_pass = true;
    ordered_json combined;
    combined["schema"] = 1;
    combined["seed"] = cfg.seed;
    combined["suites"] = ordered_json::array();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!errors[i].empty()) {
            std::cout << names[i] << ": ERROR " << errors[i] << "\n";
            all_pass = false;
            combined["suites"].push_back({{"suite", names[i]}, {"error", errors[i]}});
            continue;
        }
        const bool pass = reports[i].aggregate_pass();
        all_pass = all_pass && pass;
        std::cout << names[i] << ": " << (pass ? "pass" : "FAIL") << " ("
                  << reports[i].checks.size() << " checks)\n";
        combined["suites"].push_back(reports[i].to_json(false));
    }
    if (!out.empty()) {
        ordered_json with_time = combined;
        const auto now = std::chrono::system_clock::now().time_since_epoch();
        with_time["timestamp"] = std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
        std::ofstream os(out);
        os << with_time.dump(2) << "\n";
    }
    return all_pass ? exit_ok : exit_suite_fail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"numerical kernels, classifiers and verification suites for "
                 "degenerate Bessel-type operators on the half space"};
    app.require_subcommand(1);

    // ---- classify
    auto* classify = app.add_subcommand("classify", "parameter algebra for L = D_yy + (c/y)D_y - b/y^2");
    double b = 0.0, c = 0.0, m = 0.0, p = 2.0, k_shift = 0.0;
    bool rellich = false;
    std::string out;
    classify->add_option("--b", b, "potential coefficient")->required();
    classify->add_option("--c", c, "drift coefficient")->required();
    auto* opt_m = classify->add_option("--m", m, "weight power");
    auto* opt_p = classify->add_option("--p", p, "Lebesgue exponent");
    classify->add_flag("--rellich", rellich, "include Rellich constants");
    auto* opt_k = classify->add_option("--k", k_shift, "similarity shift exponent");
    classify->add_option("--out", out, "write JSON here instead of stdout");

    // ---- kernel-eval
    auto* keval = app.add_subcommand("kernel-eval", "CSV table of kernel, gradient and envelope values");
    std::string realization = "standard", t_list = "1", y_list = "1", rho_list = "1";
    double kappa = 4.5;
    keval->add_option("--realization", realization, "neumann|dirichlet|standard|alternate");
    keval->add_option("--b", b, "potential coefficient")->required();
    keval->add_option("--c", c, "drift coefficient")->required();
    keval->add_option("--t", t_list, "times: list a,b,c or geometric lo:hi:n");
    keval->add_option("--y", y_list, "y values");
    keval->add_option("--rho", rho_list, "rho values");
    keval->add_option("--kappa", kappa, "envelope Gaussian constant");
    keval->add_option("--out", out, "write CSV here instead of stdout");

    // ---- solve
    auto* solve = app.add_subcommand("solve", "elliptic / parabolic solve on the half space");
    std::string kind = "elliptic";
    double lambda = 1.0, t_step = 0.5;
    int N = 1, nx = 64;
    double box = 16.0;
    std::size_t ny_geo = 192, ny_uni = 384;
    double y_min = 1e-5, y_max = 12.0;
    std::string report_path;
    solve->add_option("kind", kind, "elliptic|parabolic")->required();
    solve->add_option("--b", b, "potential coefficient")->required();
    solve->add_option("--c", c, "drift coefficient")->required();
    solve->add_option("--realization", realization, "neumann|dirichlet|standard|alternate");
    solve->add_option("--m", m, "weight power of the ambient space");
    solve->add_option("--lambda", lambda, "spectral parameter (elliptic)");
    solve->add_option("--t", t_step, "time step (parabolic)");
    solve->add_option("--N", N, "x dimensions (0..2)");
    solve->add_option("--nx", nx, "x nodes per dimension (power of 2)");
    solve->add_option("--box", box, "periodic box side");
    solve->add_option("--ny-geo", ny_geo, "geometric y nodes");
    solve->add_option("--ny-uni", ny_uni, "uniform y nodes");
    solve->add_option("--y-min", y_min, "grid start");
    solve->add_option("--y-max", y_max, "grid end");
    solve->add_option("--out", out, "solution CSV path");
    solve->add_option("--report", report_path, "residual report JSON path");

    // ---- verify
    auto* verify = app.add_subcommand("verify", "run a registered verification suite (or 'all')");
    std::string suite;
    std::uint64_t seed = 1;
    std::string config_path;
    std::vector<std::string> overrides;
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--seed", seed, "deterministic seed");
    verify->add_option("--config", config_path, "JSON config file");
    verify->add_option("--set", overrides, "key=value overrides (win over config)");
    verify->add_option("--out", out, "report JSON path");
    double v_b = 0.0, v_c = 0.0, v_m = 0.0, v_p = 0.0, v_nmax = 0.0;
    auto* vb = verify->add_option("--b", v_b, "operator coefficient override");
    auto* vc = verify->add_option("--c", v_c, "operator coefficient override");
    auto* vm = verify->add_option("--m", v_m, "weight power override");
    auto* vp = verify->add_option("--p", v_p, "exponent override");
    auto* vn = verify->add_option("--n-max", v_nmax, "probe scale override");

    // ---- probe
    auto* probe = app.add_subcommand("probe", "parameterized single probes");
    std::string probe_kind;
    double alpha = 0.0, beta = 0.0, n_max = 1e4, k_weight = 0.0, probe_kappa = 4.0;
    int M = 1, family_size = 16, n_signs = 64, n_balls = 400;
    std::string mode = "semigroup";
    probe->add_option("kind", probe_kind, "sab|rademacher|closedness|concentration|ap")->required();
    probe->add_option("--b", b, "potential coefficient");
    probe->add_option("--c", c, "drift coefficient");
    probe->add_option("--m", m, "weight power");
    probe->add_option("--p", p, "Lebesgue exponent");
    probe->add_option("--alpha", alpha, "output weight exponent (sab)");
    probe->add_option("--beta", beta, "input weight exponent (sab)");
    probe->add_option("--kappa", probe_kappa, "Gaussian constant (sab)");
    probe->add_option("--M", M, "ambient dimension");
    probe->add_option("--n-max", n_max, "largest concentration scale (sab)");
    probe->add_option("--k", k_weight, "radial weight exponent (ap)");
    probe->add_option("--n-balls", n_balls, "sampled balls (ap)");
    probe->add_option("--family-size", family_size, "max family size (rademacher)");
    probe->add_option("--n-signs", n_signs, "vestigial sign draws (rademacher)");
    probe->add_option("--mode", mode, "semigroup|resolvent (rademacher)");
    probe->add_option("--seed", seed, "deterministic seed");
    probe->add_option("--out", out, "report JSON path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify)
            return cmd_classify(b, c, m, p, *opt_m || *opt_p, rellich, k_shift,
                                static_cast<bool>(*opt_k), out);

        if (*keval) {
            const csk::KernelSpec spec{{b, c}, parse_realization(realization), 600.0};
            (void)spec.order(); // admissibility gate
            return cmd_kernel_eval(spec, parse_list(t_list), parse_list(y_list),
                                   parse_list(rho_list), kappa, out);
        }

        if (*solve) {
            const csk::KernelSpec spec{{b, c}, parse_realization(realization), 600.0};
            (void)spec.order();
            auto f = csk::HalfSpaceField::zeros(N, {nx, nx}, {box, box},
                                                csk::default_grid(ny_geo, ny_uni, y_min, y_max), m);
            // synthetic separable bump data
            const std::size_t n0 = static_cast<std::size_t>(f.nx[0]);
            for (std::size_t ix = 0; ix < f.x_count(); ++ix) {
                double g = 1.0;
                for (int d = 0; d < N; ++d) {
                    const std::size_t idx = d == 0 ? ix % n0 : ix / n0;
                    const double x = box * static_cast<double>(idx) / f.nx[d] - 0.5 * box;
                    g *= std::exp(-x * x);
                }
                for (std::size_t iy = 0; iy < f.ny(); ++iy) {
                    const double y = f.y_grid[iy];
                    const double r = y - 2.0;
                    f.at(ix, iy) = (y > 1.0 && y < 3.0)
                        ? g * std::exp(-1.0 / (1.0 - r * r)) : 0.0;
                }
            }

            csk::HalfSpaceField u = f;
            ordered_json rep;
            rep["schema"] = 1;
            rep["kind"] = kind;
            bool pass = false;
            if (kind == "elliptic") {
                u = csk::elliptic_solve(spec, lambda, f);
                const auto lap = csk::laplacian_x(u);
                const auto uy = csk::d_dy(u);
                const auto uyy = csk::d_dy(uy);
                double worst = 0.0, scale = 0.0;
                for (std::size_t ix = 0; ix < u.x_count(); ++ix)
                    for (std::size_t iy = 0; iy < u.ny(); ++iy) {
                        const double y = u.y_grid[iy];
                        if (y < 0.3 || y > 0.8 * y_max) continue;
                        const double ly = uyy.at(ix, iy) + spec.op.c / y * uy.at(ix, iy)
                            - spec.op.b / (y * y) * u.at(ix, iy);
                        worst = std::max(worst, std::abs(lambda * u.at(ix, iy)
                                                         - lap.at(ix, iy) - ly - f.at(ix, iy)));
                        scale = std::max(scale, std::abs(f.at(ix, iy)));
                    }
                rep["interior_residual"] = worst / scale;
                pass = worst / scale < 1e-3;
            } else if (kind == "parabolic") {
                u = csk::parabolic_step(spec, t_step, f);
                const auto half = csk::parabolic_step(spec, 0.5 * t_step,
                                                      csk::parabolic_step(spec, 0.5 * t_step, f));
                double worst = 0.0, scale = 0.0;
                for (std::size_t i = 0; i < u.values.size(); ++i) {
                    worst = std::max(worst, std::abs(u.values[i] - half.values[i]));
                    scale = std::max(scale, std::abs(f.values[i]));
                }
                rep["splitting_consistency"] = worst / scale;
                pass = worst / scale < 1e-3;
            } else {
                std::cerr << "unknown solve kind: " << kind << "\n";
                return exit_domain;
            }
            rep["pass"] = pass;
            if (!out.empty()) {
                std::ofstream os(out);
                u.write_csv(os);
            } else {
                u.write_csv(std::cout);
            }
            if (!report_path.empty()) {
                std::ofstream os(report_path);
                os << rep.dump(2) << "\n";
            }
            return pass ? exit_ok : exit_suite_fail;
        }

        if (*verify) {
            csk::SuiteConfig cfg;
            cfg.seed = seed;
            if (!config_path.empty()) {
                std::ifstream is(config_path);
                if (!is) {
                    std::cerr << "cannot read config: " << config_path << "\n";
                    return exit_domain;
                }
                const auto j = ordered_json::parse(is, nullptr, false);
                if (j.is_discarded()) {
                    std::cerr << "invalid JSON config\n";
                    return exit_domain;
                }
                if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
                if (j.contains("overrides")) cfg.overrides = j.at("overrides");
            }
            for (const auto& kv : overrides) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "override must be key=value: " << kv << "\n";
                    return exit_domain;
                }
                cfg.overrides[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
            }
            if (*vb) cfg.overrides["b"] = v_b;
            if (*vc) cfg.overrides["c"] = v_c;
            if (*vm) cfg.overrides["m"] = v_m;
            if (*vp) cfg.overrides["p"] = v_p;
            if (*vn) cfg.overrides["n_max"] = v_nmax;
            return cmd_verify(suite, cfg, out);
        }

        if (*probe) {
            csk::ProbeReport rep;
            if (probe_kind == "sab") {
                csk::SabSpec s;
                s.alpha = alpha;
                s.beta = beta;
                s.M = M;
                s.m = m;
                s.kappa = probe_kappa;
                rep = csk::sab_threshold_probe(s, p, n_max);
            } else if (probe_kind == "rademacher") {
                csk::RademacherOptions opt;
                opt.family_size = family_size;
                opt.n_signs = n_signs;
                opt.mode = mode == "resolvent" ? csk::RademacherMode::Resolvent
                                               : csk::RademacherMode::Semigroup;
                opt.seed = seed;
                rep = csk::rademacher_probe({{b, c}, csk::Realization::Standard, 600.0},
                                            {1, m, p}, opt);
            } else if (probe_kind == "closedness") {
                csk::ClosednessOptions opt;
                opt.seed = seed;
                rep = csk::closedness_probe({{b, c}, csk::Realization::Standard, 600.0},
                                            {2, m, p}, opt);
            } else if (probe_kind == "concentration") {
                rep = csk::concentration_probe({{b, c}, csk::Realization::Standard, 600.0},
                                               {1, m, p});
            } else if (probe_kind == "ap") {
                rep.suite = "ap-estimate";
                rep.config = {{"k", k_weight}, {"M", M}, {"m", m}, {"p", p},
                              {"n_balls", n_balls}, {"seed", seed}};
                const double est = csk::ap_constant_estimate(k_weight, M, m, p, n_balls, seed);
                const bool analytic = csk::muckenhoupt_radial(M, m, k_weight, p).in_ap;
                csk::CheckRecord rec;
                rec.name = "ap-estimate";
                rec.measured = est;
                rec.pass = analytic ? std::isfinite(est) : est > 1e3;
                rec.params = {{"analytic_in_ap", analytic}};
                rep.add(std::move(rec));
            } else {
                std::cerr << "unknown probe: " << probe_kind << "\n";
                return exit_domain;
            }
            emit(rep.to_json(), out);
            return rep.aggregate_pass() ? exit_ok : exit_suite_fail;
        }
    } catch (const csk::AdmissibilityError& e) {
        std::cerr << "admissibility error: " << e.what() << "\n";
        return exit_domain;
    } catch (const csk::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_suite_fail;
    }
    return exit_ok;
}
