#include "steklov/lab.hpp"
#include "steklov/shape_io.hpp"
#include "steklov/special.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace steklov;

namespace {

void line(const char* key, double value) { std::printf("%-22s %.15g\n", key, value); }
void line(const char* key, long value) { std::printf("%-22s %ld\n", key, value); }
void line(const char* key, const std::string& value) { std::printf("%-22s %s\n", key, value.c_str()); }

std::string read_text(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

shape::StarShape shape_for(const lab::ExperimentSpec& spec)
{
    const auto grid = lab::grid_for(spec);
    if (spec.shape_path.empty())
        return shape::ball(grid, spec.omega_or_default());
    const auto doc = shape_io::read_shape_file(spec.shape_path);
    if (doc.n != spec.n)
        throw std::invalid_argument("shape file dimension differs from --n");
    return shape_io::build_shape(doc, grid);
}

int cmd_ball(const lab::ExperimentSpec& spec)
{
    const auto r = lab::run_ball(spec.n, spec.omega_or_default());
    line("n", long(r.n));
    line("omega", r.omega);
    line("rho", r.rho);
    line("lambda_ball", r.lambda);
    line("gamma", r.gamma);
    line("perimeter", r.perimeter);
    line("volume", r.volume);
    return 0;
}

int cmd_hn_scan(const lab::ExperimentSpec& spec)
{
    const auto r = lab::run_hn_scan(2, spec.n_max, spec.s_max, spec.steps);
    std::printf("%3s %14s %10s %14s %14s %14s %14s %14s\n", "n", "min_hn_scaled", "argmin_s",
                "min_relation", "min_g_prime", "small_s", "small_s_limit", "min_stability");
    for (const auto& row : r.rows)
        std::printf("%3d %14.6e %10.4f %14.6e %14.6e %14.8g %14.8g %14.6e\n", row.n,
                    row.min_hn_scaled, row.argmin_s, row.n >= 3 ? row.min_relation : NAN,
                    row.n == 2 ? row.min_g_prime : NAN, row.small_s_reduced, row.small_s_limit,
                    row.min_stability);
    line("passed", std::string(r.passed ? "yes" : "no"));
    return r.passed ? 0 : 1;
}

int cmd_stability_scan(const lab::ExperimentSpec& spec, const std::vector<double>& eps)
{
    const auto r = lab::run_stability_scan(spec.n, spec.omega_or_default(), spec.degree, eps,
                                           spec.resolution_or_default());
    std::printf("%10s %16s %16s %16s\n", "eps", "gap", "l2_sq", "gap/eps^2");
    bool ok = true;
    for (const auto& row : r.rows) {
        std::printf("%10.4g %16.8e %16.8e %16.8e\n", row.eps, row.gap, row.l2_sq, row.gap_over_eps_sq);
        ok = ok && row.gap > 0.0;
    }
    line("relative_spread", r.relative_spread);
    return ok ? 0 : 1;
}

int cmd_perturb(const lab::ExperimentSpec& spec)
{
    const auto r = lab::run_perturb(spec);
    if (!spec.out_path.empty()) {
        std::ofstream out(spec.out_path);
        if (!out)
            throw std::runtime_error("cannot write " + spec.out_path);
        lab::write_perturb_csv(out, r);
    }
    const auto& s = r.summary;
    line("seed", long(spec.seed));
    line("trials", long(s.trials));
    line("projection_failures", long(s.projection_failures));
    line("violations", long(s.violations));
    line("chain_violations", long(s.chain_violations));
    line("gap_violations", long(s.gap_violations));
    line("k_empirical", s.k_empirical);
    line("min_poincare", s.min_poincare);
    line("max_ratio", s.max_ratio);
    return s.violations == 0 && s.chain_violations == 0 && s.gap_violations == 0 ? 0 : 1;
}

int cmd_search(const lab::ExperimentSpec& spec)
{
    const auto r = lab::run_search(spec);
    line("seed", long(spec.seed));
    line("evaluations", long(r.evaluations));
    line("accepted", long(r.accepted));
    line("rejected", long(r.rejected));
    line("best_ratio", r.best_ratio);
    line("lambda_ball", r.lambda_ball);
    line("margin", r.margin);
    if (!spec.out_path.empty()) {
        shape::ProjectionOptions options;
        options.barycenter = spec.project;
        const auto best = shape::project_to_constraints(
            shape::from_coefficients(lab::grid_for(spec), spec.omega_or_default(),
                                     r.best_coefficients),
            options);
        const auto doc = shape_io::document_of(best);
        shape_io::write_shape_file(spec.out_path, doc);
    }
    bool monotone = true;
    for (std::size_t i = 1; i < r.accepted_ratios.size(); ++i) {
        const bool restart = std::find(r.restart_starts.begin(), r.restart_starts.end(), int(i))
                          != r.restart_starts.end();
        if (!restart && r.accepted_ratios[i] < r.accepted_ratios[i - 1])
            monotone = false;
    }
    line("monotone", std::string(monotone ? "yes" : "no"));
    if (!monotone)
        return 1;
    return spec.project && !(r.margin > 0.0) ? 1 : 0;
}

int cmd_trefftz(const lab::ExperimentSpec& spec)
{
    const auto r = lab::run_trefftz(shape_for(spec), spec.modes);
    line("lambda_trefftz", r.lambda_trefftz);
    line("ratio", r.ratio);
    line("lambda_ball", r.lambda_ball);
    line("residual", r.residual);
    line("monotone", std::string(r.monotone ? "yes" : "no"));
    for (std::size_t m = 0; m < r.ritz_by_modes.size(); ++m)
        std::printf("ritz M=%-3zu %.15g\n", m, r.ritz_by_modes[m]);
    return r.monotone && r.lambda_trefftz <= r.ratio * (1.0 + 1e-12) ? 0 : 1;
}

int cmd_penalty(const lab::ExperimentSpec& spec)
{
    const auto config = lab::penalty_config_for(spec);
    const auto r = lab::run_penalty(shape_for(spec), config);
    line("delta", config.delta);
    line("lambda1", config.lambda1);
    line("lambda2", config.lambda2);
    line("lambda3", config.lambda3);
    line("j0", r.terms.j0);
    line("barycenter_term", r.terms.barycenter);
    line("measure_term", r.terms.measure);
    line("annulus_term", r.terms.annulus);
    line("j", r.terms.total);
    line("ball_j", r.ball_terms.total);
    const double scale = std::max(1.0, std::abs(r.ball_terms.j0) + functionals::weighted_perimeter(
                                           shape::ball(lab::grid_for(spec), config.omega)));
    return std::abs(r.ball_terms.total) <= 1e-12 * scale ? 0 : 1;
}

int cmd_robin(const lab::ExperimentSpec& spec)
{
    const auto r = lab::run_robin(spec.n, spec.radius, spec.alpha);
    line("kappa", r.kappa);
    line("lambda", r.lambda);
    line("residual", r.residual);
    line("bridge", r.bridge);
    line("robin_relation", r.robin_relation);
    return std::abs(r.residual) <= 1e-10 && std::abs(r.bridge) <= 1e-10 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Experiments on the weighted Steklov-type eigenvalue of nearly spherical sets"};
    app.set_version_flag("--version", "steklov-lab 0.1");

    std::string command;
    std::string config_path;
    lab::ExperimentSpec flags;
    double omega = 0.0, delta = 0.0, l1 = 0.0, l2 = 0.0, l3 = 0.0;
    int resolution = 0;
    std::vector<double> scan_eps{0.01, 0.02, 0.04};
    bool no_project = false;

    app.add_option("command", command,
                   "ball | hn-scan | stability-scan | perturb | search | trefftz | penalty | robin")
        ->required();
    app.add_option("--config", config_path, "JSON file with flag-style keys; flags override it");
    auto* o_n = app.add_option("--n", flags.n, "dimension");
    auto* o_omega = app.add_option("--omega", omega, "Lebesgue measure (default: unit ball)");
    auto* o_eps = app.add_option("--eps", flags.eps, "W^{1,inf} size of perturbations");
    auto* o_trials = app.add_option("--trials", flags.trials);
    auto* o_seed = app.add_option("--seed", flags.seed);
    auto* o_res = app.add_option("--resolution", resolution,
                                 "circle nodes (n=2) or polar nodes (n=3)");
    auto* o_modes = app.add_option("--modes", flags.modes, "Trefftz modes M");
    auto* o_delta = app.add_option("--delta", delta, "annulus half-width");
    auto* o_l1 = app.add_option("--lambda1", l1);
    auto* o_l2 = app.add_option("--lambda2", l2);
    auto* o_l3 = app.add_option("--lambda3", l3);
    auto* o_shape = app.add_option("--shape", flags.shape_path, "shape JSON file");
    auto* o_alpha = app.add_option("--alpha", flags.alpha, "Robin parameter (<= 0)");
    auto* o_radius = app.add_option("--radius", flags.radius, "Robin ball radius");
    auto* o_out = app.add_option("--out", flags.out_path, "CSV (perturb) or shape JSON (search)");
    auto* o_nmax = app.add_option("--n-max", flags.n_max, "hn-scan: largest n");
    auto* o_smax = app.add_option("--s-max", flags.s_max, "hn-scan: right end of the s grid");
    auto* o_steps = app.add_option("--steps", flags.steps, "hn-scan: grid points");
    auto* o_degree = app.add_option("--degree", flags.degree, "stability-scan: harmonic degree");
    app.add_option("--scan-eps", scan_eps, "stability-scan: eps values")->delimiter(',');
    auto* o_budget = app.add_option("--budget", flags.budget, "search: evaluations");
    auto* o_restarts = app.add_option("--restarts", flags.restarts);
    auto* o_noproj = app.add_flag("--no-project", no_project, "search: volume constraint only");
    auto* o_deg1 = app.add_flag("--allow-degree-one", flags.allow_degree_one,
                                "search: let degree-1 coefficients move");

    CLI11_PARSE(app, argc, argv);

    try {
        lab::ExperimentSpec spec;
        if (!config_path.empty())
            spec.merge_json(read_text(config_path));
        spec.command = lab::parse_command(command);

        auto given = [](CLI::Option* o) { return o->count() > 0; };
        if (given(o_n)) spec.n = flags.n;
        if (given(o_omega)) spec.omega = omega;
        if (given(o_eps)) spec.eps = flags.eps;
        if (given(o_trials)) spec.trials = flags.trials;
        if (given(o_seed)) spec.seed = flags.seed;
        if (given(o_res)) spec.resolution = resolution;
        if (given(o_modes)) spec.modes = flags.modes;
        if (given(o_delta)) spec.delta = delta;
        if (given(o_l1)) spec.lambda1 = l1;
        if (given(o_l2)) spec.lambda2 = l2;
        if (given(o_l3)) spec.lambda3 = l3;
        if (given(o_shape)) spec.shape_path = flags.shape_path;
        if (given(o_alpha)) spec.alpha = flags.alpha;
        if (given(o_radius)) spec.radius = flags.radius;
        if (given(o_out)) spec.out_path = flags.out_path;
        if (given(o_nmax)) spec.n_max = flags.n_max;
        if (given(o_smax)) spec.s_max = flags.s_max;
        if (given(o_steps)) spec.steps = flags.steps;
        if (given(o_degree)) spec.degree = flags.degree;
        if (given(o_budget)) spec.budget = flags.budget;
        if (given(o_restarts)) spec.restarts = flags.restarts;
        if (given(o_noproj)) spec.project = !no_project;
        if (given(o_deg1)) spec.allow_degree_one = flags.allow_degree_one;
        spec.validate();

        std::printf("# %s\n", spec.to_json().c_str());
        switch (spec.command) {
        case lab::Command::ball: return cmd_ball(spec);
        case lab::Command::hn_scan: return cmd_hn_scan(spec);
        case lab::Command::stability_scan: return cmd_stability_scan(spec, scan_eps);
        case lab::Command::perturb: return cmd_perturb(spec);
        case lab::Command::search: return cmd_search(spec);
        case lab::Command::trefftz: return cmd_trefftz(spec);
        case lab::Command::penalty: return cmd_penalty(spec);
        case lab::Command::robin: return cmd_robin(spec);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "steklov-lab: %s\n", e.what());
        return 2;
    }
    return 2;
}
