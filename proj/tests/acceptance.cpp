// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "steklov/eigen.hpp"
#include "steklov/functionals.hpp"
#include "steklov/lab.hpp"
#include "steklov/shape.hpp"
#include "steklov/special.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

using namespace steklov;
using std::numbers::pi;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < budget_s;
    const bool ok = out.ok && in_time;
    if (!ok)
        ++failures;
    std::printf("[%s] %2d %-28s %s; %.2f s (limit %.0f s)%s\n", ok ? "PASS" : "FAIL", id, name,
                out.detail.c_str(), secs, budget_s, in_time ? "" : " TOO SLOW");
    std::fflush(stdout);
}

std::string fmt(const char* f, double a)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double sq_integral(const shape::StarShape& s)
{
    std::vector<double> v2(s.v().size());
    for (std::size_t i = 0; i < v2.size(); ++i)
        v2[i] = s.v()[i] * s.v()[i];
    return sphere::integrate(s.grid(), v2);
}

shape::StarShape random_projected(const sphere::GridPtr& g, double omega, double eps, lab::Rng& rng)
{
    return shape::project_to_constraints(
        shape::from_coefficients(g, omega, lab::random_coefficients(rng, *g, eps)));
}

// ------------------------------------------------------------------------

Outcome bessel_core()
{
    using special::BesselOrder;
    double worst_d1 = 0.0, worst_d2 = 0.0;
    for (int twice = 0; twice <= 10; ++twice) {
        const BesselOrder o(twice), o1 = o.next();
        const double nu = 0.5 * twice;
        for (int k = 0; k <= 400; ++k) {
            const double s = 1e-2 * std::pow(3000.0, k / 400.0);
            const double h = 1e-6 * std::max(1.0, s);
            const double fd0 = (special::bessel_i(o, s + h) - special::bessel_i(o, s - h)) / (2 * h);
            const double fd1 = (special::bessel_i(o1, s + h) - special::bessel_i(o1, s - h)) / (2 * h);
            const double d0 = special::bessel_i_prime(o, s);
            const double d1 = special::bessel_i(o, s) - (nu + 1) / s * special::bessel_i(o1, s);
            worst_d1 = std::max(worst_d1, std::abs(d0 - fd0) / (1 + std::abs(d0)));
            worst_d2 = std::max(worst_d2, std::abs(d1 - fd1) / (1 + std::abs(d1)));
        }
    }
    double worst_half = 0.0;
    for (int k = 0; k <= 400; ++k) {
        const double s = 1e-2 * std::pow(1e4, k / 400.0);
        const double exact = std::sqrt(2.0 / (pi * s)) * std::sinh(s);
        worst_half = std::max(worst_half,
                              std::abs(special::bessel_i(BesselOrder(1), s) - exact) / exact);
    }
    const double i0 = special::bessel_i(BesselOrder(0), 1.0);
    const double i0_err = std::abs(i0 - 1.2660658777520083356) / 1.2660658777520083356;
    const bool ok = worst_d1 <= 1e-7 && worst_d2 <= 1e-7 && worst_half <= 1e-12 && i0_err <= 1e-11;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "besseld %.1e, besseld2 %.1e, I_1/2 rel %.1e, I_0(1) rel %.1e", worst_d1,
                  worst_d2, worst_half, i0_err);
    return {ok, buf};
}

Outcome ball_eigenvalue()
{
    const double oracle = 0.44638996589653450705;
    const double err = std::abs(special::lambda_ball(2, 1.0) - oracle);
    const auto disk = shape::ball(sphere::make_grid(2, 256), pi);
    double worst = 0.0;
    for (int m = 0; m <= 16; ++m)
        worst = std::max(worst, std::abs(eigen::steklov_lambda(disk, m).lambda - oracle));
    char buf[160];
    std::snprintf(buf, sizeof buf, "lambda_ball err %.1e, Trefftz M=0..16 max err %.1e", err, worst);
    return {err <= 1e-10 && worst <= 1e-9, buf};
}

Outcome positivity()
{
    const auto r = lab::run_hn_scan(2, 10, 50.0, 5000, 0.1, 10.0, 100, 1e-8);
    double min_hn = INFINITY, min_c = INFINITY, min_rel = INFINITY, min_g = INFINITY;
    for (const auto& row : r.rows) {
        min_hn = std::min(min_hn, row.min_hn_scaled);
        min_c = std::min(min_c, row.min_stability);
        if (row.n >= 3)
            min_rel = std::min(min_rel, row.min_relation);
        else
            min_g = std::min(min_g, row.min_g_prime);
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "min e^-2s H %.2e, min C %.2e, min e^-2s(sH'-H) %.2e, min G' %.2e",
                  min_hn, min_c, min_rel, min_g);
    return {r.passed && min_hn > 0 && min_c > 0 && min_rel >= -1e-8 && min_g > 0, buf};
}

Outcome gauss_green()
{
    double worst = 0.0;
    int count = 0;
    for (int n : {2, 3}) {
        const auto g = sphere::make_grid(n, n == 2 ? 256 : 32);
        const double omega = special::unit_ball_volume(n);
        const auto check = [&](const shape::StarShape& s) {
            const double vb = functionals::weighted_volume_bulk(s);
            const double vs = functionals::weighted_volume_boundary(s);
            worst = std::max(worst, std::abs(vb - vs) / vb);
            ++count;
        };
        check(shape::ball(g, omega));
        lab::Rng rng(2024, std::uint64_t(n));
        for (int i = 0; i < 50; ++i)
            check(random_projected(g, omega, 0.05, rng));
    }
    return {worst <= 1e-8, fmt("max |V_bulk - V_bdry|/V %.1e over ", worst) + std::to_string(count) + " shapes"};
}

Outcome reverse_faber_krahn()
{
    bool ok = true;
    std::string detail;
    for (int n : {2, 3}) {
        lab::ExperimentSpec spec;
        spec.command = lab::Command::perturb;
        spec.n = n;
        spec.eps = 0.05;
        spec.trials = 500;
        double k[2];
        int violations = 0, chain = 0, failures_proj = 0;
        const std::uint64_t seeds[2] = {42, 4242};
        for (int b = 0; b < 2; ++b) {
            spec.seed = seeds[b];
            const auto r = lab::run_perturb(spec);
            violations += r.summary.violations;
            chain += r.summary.chain_violations;
            failures_proj += r.summary.projection_failures;
            k[b] = r.summary.k_empirical;
        }
        const double spread = std::abs(k[0] - k[1]) / std::min(k[0], k[1]);
        ok = ok && violations == 0 && chain == 0 && k[0] > 0 && k[1] > 0 && spread <= 0.2;
        char buf[200];
        std::snprintf(buf, sizeof buf, "n=%d: %d ratio viol, %d chain viol, %d proj fail, K %.4g/%.4g (%.1f%%)",
                      n, violations, chain, failures_proj, k[0], k[1], 100 * spread);
        detail += (detail.empty() ? "" : "; ") + std::string(buf);
    }
    return {ok, detail};
}

Outcome quadratic_gap()
{
    const auto r = lab::run_stability_scan(2, pi, 2, {0.01, 0.02, 0.04}, 256);
    bool positive = true;
    for (const auto& row : r.rows)
        positive = positive && row.gap > 0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "gap/eps^2 = %.6g, %.6g, %.6g; spread %.2e", r.rows[0].gap_over_eps_sq,
                  r.rows[1].gap_over_eps_sq, r.rows[2].gap_over_eps_sq, r.relative_spread);
    return {positive && r.relative_spread < 0.05, buf};
}

Outcome translation()
{
    const auto g = sphere::make_grid(2, 256);
    const auto s = shape::shifted_ball(g, pi, {0.1, 0.0});
    const double ratio = functionals::rayleigh_upper_bound(s);
    const double lam = special::lambda_ball(2, 1.0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "V/P - lambda_ball = %.3e (|X| = %.4f)", ratio - lam,
                  shape::barycenter(s)[0]);
    return {ratio - lam > 0, buf};
}

Outcome penalized()
{
    bool ok = true;
    double worst_ball = 0.0, min_j = INFINITY, worst_identity = 0.0, max_annulus = 0.0;
    int sampled = 0;
    for (int n : {2, 3}) {
        const auto g = sphere::make_grid(n, n == 2 ? 256 : 32);
        const double omega = special::unit_ball_volume(n);
        const auto cfg = functionals::PenaltyConfig::defaults(n, omega);
        worst_ball = std::max(worst_ball, std::abs(functionals::penalized_j(shape::ball(g, omega), cfg)));

        lab::Rng rng(77, std::uint64_t(n));
        for (int i = 0; i < 200; ++i) {
            const auto s = random_projected(g, omega, 0.05, rng);
            double vmax = 0.0;
            for (double v : s.v())
                vmax = std::max(vmax, std::abs(v));
            if (vmax * s.rho() >= cfg.delta)
                continue;
            const auto t = functionals::penalty_terms(s, cfg);
            max_annulus = std::max(max_annulus, t.annulus);
            min_j = std::min(min_j, t.total);
            ++sampled;
        }

        // measure omega + mu, unprojected: J - (J0 + Lambda1 |X|) = Lambda2 mu
        sphere::HarmonicExpansion e(n, 3);
        e.at({0, 0}) = 0.01 * std::sqrt(sphere::sphere_area(n));
        e.at({1, 0}) = 0.004;
        e.at({3, 0}) = 0.01;
        const auto s = shape::from_coefficients(g, omega, e);
        const auto t = functionals::penalty_terms(s, cfg);
        const auto x = shape::barycenter(s);
        double xn = 0.0;
        for (double c : x)
            xn += c * c;
        xn = std::sqrt(xn);
        const double mu = shape::measure(s) - omega;
        worst_identity = std::max(worst_identity, std::abs(t.total - (t.j0 + cfg.lambda1 * xn) - cfg.lambda2 * mu));
        worst_identity = std::max(worst_identity, std::abs(t.barycenter - cfg.lambda1 * xn));

        // shifted ball with |X| = d: Lambda_1 term is Lambda_1 d
        const double d = 0.01 * s.rho();
        std::vector<double> shift(n, 0.0);
        shift[0] = d;
        const auto sb = shape::shifted_ball(g, omega, shift);
        worst_identity = std::max(worst_identity,
                                  std::abs(functionals::penalty_terms(sb, cfg).barycenter - cfg.lambda1 * d));
    }
    ok = worst_ball <= 1e-12 && min_j > 0 && sampled == 400 && max_annulus == 0.0 && worst_identity <= 1e-10;
    char buf[200];
    std::snprintf(buf, sizeof buf, "|J(ball)| %.1e, min J %.3e over %d shapes, identities %.1e", worst_ball,
                  min_j, sampled, worst_identity);
    return {ok, buf};
}

Outcome robin_bridge()
{
    double worst_res = 0.0, worst_bridge = 0.0, worst_scale = 0.0;
    bool monotone = true, zero = true;
    for (int n : {2, 3, 4})
        for (double radius : {0.5, 1.0, 2.0}) {
            for (double alpha : {-0.5, -1.0, -2.0}) {
                const auto r = lab::run_robin(n, radius, alpha);
                worst_res = std::max(worst_res, std::abs(r.residual));
                worst_bridge = std::max(worst_bridge, std::abs(r.bridge));
                for (double c : {0.5, 3.0}) {
                    const double scaled = eigen::robin_ball_eigenvalue(n, c * radius, alpha / c).lambda;
                    worst_scale = std::max(worst_scale, std::abs(c * c * scaled - r.lambda));
                }
            }
            zero = zero && eigen::robin_ball_eigenvalue(n, radius, 0.0).lambda == 0.0;
            const auto map = eigen::robin_monotone_map(n, radius);
            double prev = map(-3.0);
            for (int k = 1; k <= 60; ++k) {
                const double l = map(-3.0 + 0.05 * k);
                monotone = monotone && l > prev;
                prev = l;
            }
        }
    char buf[200];
    std::snprintf(buf, sizeof buf, "residual %.1e, bridge %.1e, two-scale %.1e, monotone %s, lambda(0)=0 %s",
                  worst_res, worst_bridge, worst_scale, monotone ? "yes" : "no", zero ? "yes" : "no");
    return {worst_res <= 1e-10 && worst_bridge <= 1e-10 && worst_scale <= 1e-9 && monotone && zero, buf};
}

Outcome poincare()
{
    double worst_exact = INFINITY, worst_proj = INFINITY;
    for (int n : {2, 3}) {
        const auto g = sphere::make_grid(n, n == 2 ? 256 : 32);
        lab::Rng rng(5, std::uint64_t(n));
        for (int i = 0; i < 100; ++i) {
            // a_0 = a_1 = 0, quadrature form and coefficient form
            const auto e = lab::random_coefficients(rng, *g, 1.0, 2, 2 + int(rng.below(6)));
            const auto v = sphere::synthesize(*g, e);
            std::vector<double> v2(v.size());
            for (std::size_t p = 0; p < v.size(); ++p)
                v2[p] = v[p] * v[p];
            const double l2 = sphere::integrate(*g, v2);
            const double h1 = sphere::integrate(*g, sphere::surface_gradient_sq(*g, e));
            worst_exact = std::min(worst_exact, (h1 - 2 * n * l2) / l2);
            worst_exact = std::min(worst_exact, (e.h1_seminorm_sq() - 2 * n * e.l2_norm_sq()) / e.l2_norm_sq());
        }
        const double omega = special::unit_ball_volume(n);
        for (int i = 0; i < 100; ++i) {
            const auto s = random_projected(g, omega, 0.05, rng);
            const double ratio = sphere::integrate(*g, s.gradient_sq()) / sq_integral(s);
            worst_proj = std::min(worst_proj, ratio / (2.0 * n));
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "min (|Dv|^2 - 2n v^2)/v^2 = %.3g, min projected |Dv|^2/(2n v^2) = %.3g",
                  worst_exact, worst_proj);
    return {worst_exact >= -1e-12 && worst_proj >= 0.9, buf};
}

} // namespace

int main()
{
    criterion(1, "Bessel core", 1, bessel_core);
    criterion(2, "Ball eigenvalue", 1, ball_eigenvalue);
    criterion(3, "Positivity of H_n and C", 10, positivity);
    criterion(4, "Gauss-Green", 30, gauss_green);
    criterion(5, "Local reverse Faber-Krahn", 300, reverse_faber_krahn);
    criterion(6, "Quadratic gap scaling", 5, quadratic_gap);
    criterion(7, "Translation counterexample", 5, translation);
    criterion(8, "Penalized functional", 120, penalized);
    criterion(9, "Robin bridge", 5, robin_bridge);
    criterion(10, "Constrained Poincare", 10, poincare);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
