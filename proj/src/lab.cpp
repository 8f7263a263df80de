#include "steklov/lab.hpp"

#include "steklov/special.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace steklov::lab {

using nlohmann::json;
using shape::StarShape;

// ------------------------------------------------------------------ rng

namespace {

std::uint64_t splitmix64(std::uint64_t& x)
{
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t x = seed ^ (0xd1b54a32d192ed03ULL * (stream + 1));
    for (auto& s : s_)
        s = splitmix64(x);
}

std::uint64_t Rng::next()
{
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() { return double(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("Rng::below: bound must be positive");
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                              - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

// ------------------------------------------------------------------ spec

std::string to_string(Command c)
{
    switch (c) {
    case Command::ball: return "ball";
    case Command::hn_scan: return "hn-scan";
    case Command::stability_scan: return "stability-scan";
    case Command::perturb: return "perturb";
    case Command::search: return "search";
    case Command::trefftz: return "trefftz";
    case Command::penalty: return "penalty";
    case Command::robin: return "robin";
    }
    return "?";
}

Command parse_command(const std::string& name)
{
    for (Command c : {Command::ball, Command::hn_scan, Command::stability_scan, Command::perturb,
                      Command::search, Command::trefftz, Command::penalty, Command::robin})
        if (to_string(c) == name)
            return c;
    throw std::invalid_argument("unknown command '" + name + "'");
}

double ExperimentSpec::omega_or_default() const
{
    return omega ? *omega : special::unit_ball_volume(n);
}

int ExperimentSpec::resolution_or_default() const
{
    if (resolution)
        return *resolution;
    return n == 2 ? 256 : 32;
}

void ExperimentSpec::validate() const
{
    if (n < 2)
        throw std::invalid_argument("--n must be >= 2");
    const bool needs_shapes = command == Command::stability_scan || command == Command::perturb
                           || command == Command::search || command == Command::penalty;
    if (needs_shapes && n != 2 && n != 3)
        throw std::invalid_argument("shape experiments support n = 2 or 3 only");
    if (command == Command::trefftz && n != 2)
        throw std::invalid_argument("trefftz supports n = 2 only");
    if (omega && !(*omega > 0.0))
        throw std::invalid_argument("--omega must be > 0");
    if (command == Command::perturb && (eps < 0.0 || eps > 0.1))
        throw std::invalid_argument("perturb needs 0 <= eps <= 0.1");
    if (trials < 0)
        throw std::invalid_argument("--trials must be >= 0");
    if (modes < 0)
        throw std::invalid_argument("--modes must be >= 0");
    if (command == Command::robin && (alpha > 0.0 || !(radius > 0.0)))
        throw std::invalid_argument("robin needs alpha <= 0 and radius > 0");
    if (command == Command::penalty && shape_path.empty())
        throw std::invalid_argument("penalty needs --shape");
}

std::string ExperimentSpec::to_json() const
{
    json j;
    j["command"] = to_string(command);
    j["n"] = n;
    j["omega"] = omega_or_default();
    j["eps"] = eps;
    j["trials"] = trials;
    j["seed"] = seed;
    j["resolution"] = resolution_or_default();
    j["modes"] = modes;
    if (delta)
        j["delta"] = *delta;
    if (lambda1)
        j["lambda1"] = *lambda1;
    if (lambda2)
        j["lambda2"] = *lambda2;
    if (lambda3)
        j["lambda3"] = *lambda3;
    if (!shape_path.empty())
        j["shape"] = shape_path;
    j["alpha"] = alpha;
    j["radius"] = radius;
    j["n_max"] = n_max;
    j["s_max"] = s_max;
    j["steps"] = steps;
    j["degree"] = degree;
    j["budget"] = budget;
    j["restarts"] = restarts;
    j["project"] = project;
    j["allow_degree_one"] = allow_degree_one;
    return j.dump();
}

void ExperimentSpec::merge_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("config must be a JSON object");
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string& k = it.key();
            const json& v = it.value();
            if (k == "command") command = parse_command(v.get<std::string>());
            else if (k == "n") n = v.get<int>();
            else if (k == "omega") omega = v.get<double>();
            else if (k == "eps") eps = v.get<double>();
            else if (k == "trials") trials = v.get<int>();
            else if (k == "seed") seed = v.get<std::uint64_t>();
            else if (k == "resolution") resolution = v.get<int>();
            else if (k == "modes") modes = v.get<int>();
            else if (k == "delta") delta = v.get<double>();
            else if (k == "lambda1") lambda1 = v.get<double>();
            else if (k == "lambda2") lambda2 = v.get<double>();
            else if (k == "lambda3") lambda3 = v.get<double>();
            else if (k == "shape") shape_path = v.get<std::string>();
            else if (k == "alpha") alpha = v.get<double>();
            else if (k == "radius") radius = v.get<double>();
            else if (k == "out") out_path = v.get<std::string>();
            else if (k == "n_max") n_max = v.get<int>();
            else if (k == "s_max") s_max = v.get<double>();
            else if (k == "steps") steps = v.get<int>();
            else if (k == "degree") degree = v.get<int>();
            else if (k == "budget") budget = v.get<int>();
            else if (k == "restarts") restarts = v.get<int>();
            else if (k == "project") project = v.get<bool>();
            else if (k == "allow_degree_one") allow_degree_one = v.get<bool>();
            else throw std::invalid_argument("config: unknown key '" + k + "'");
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
}

sphere::GridPtr grid_for(const ExperimentSpec& spec)
{
    return sphere::make_grid(spec.n, spec.resolution_or_default());
}

functionals::PenaltyConfig penalty_config_for(const ExperimentSpec& spec)
{
    auto config = functionals::PenaltyConfig::defaults(spec.n, spec.omega_or_default());
    if (spec.delta)
        config.delta = *spec.delta;
    if (spec.lambda1)
        config.lambda1 = *spec.lambda1;
    if (spec.lambda2)
        config.lambda2 = *spec.lambda2;
    if (spec.lambda3)
        config.lambda3 = *spec.lambda3;
    return config;
}

// ------------------------------------------------------------------ ball

BallReport run_ball(int n, double omega)
{
    BallReport r{};
    r.n = n;
    r.omega = omega;
    r.rho = special::ball_radius(n, omega);
    r.lambda = special::lambda_ball(n, r.rho);
    r.gamma = 1.0 / r.lambda;
    const special::RadialWeight w(r.rho, n);
    const double area = n * special::unit_ball_volume(n);
    const double scale = std::pow(r.rho, n - 1) * area;
    r.perimeter = scale * special::weight_h(w, 1.0);
    r.volume = scale * special::weight_f(w, 1.0);
    return r;
}

// ---------------------------------------------------------------- hn-scan

HnScanReport run_hn_scan(int n_min, int n_max, double s_max, int steps, double rho_min,
                         double rho_max, int rho_steps, double relation_tol)
{
    if (n_min < 2 || n_max < n_min || steps < 1 || !(s_max > 0.0) || rho_steps < 2)
        throw std::invalid_argument("hn-scan: bad scan parameters");
    HnScanReport report{{}, true};
    for (int n = n_min; n <= n_max; ++n) {
        const double nu = 0.5 * n - 1.0;
        HnScanRow row{};
        row.n = n;
        row.min_hn_scaled = std::numeric_limits<double>::infinity();
        row.min_relation = std::numeric_limits<double>::infinity();
        row.min_g_prime = std::numeric_limits<double>::infinity();
        row.min_stability = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= steps; ++i) {
            const double s = s_max * i / steps;
            const double h = special::hn_scaled(n, s);
            if (h < row.min_hn_scaled) {
                row.min_hn_scaled = h;
                row.argmin_s = s;
            }
            if (n >= 3) {
                const double rel = s * special::hn_derivative_scaled(n, s) - h;
                row.min_relation = std::min(row.min_relation, rel);
            } else {
                row.min_g_prime = std::min(row.min_g_prime, special::hn2_g_derivative(s));
            }
            if (i == 1)
                row.small_s_reduced = special::hn(n, s) * std::pow(s, -2.0 * nu);
        }
        const double limit = 1.0 / (std::pow(2.0, nu) * special::gamma_half_integer(n));
        row.small_s_limit = (2.0 * nu + 3.0) * limit * limit;
        for (int j = 0; j < rho_steps; ++j) {
            const double rho = rho_min + (rho_max - rho_min) * j / (rho_steps - 1);
            row.min_stability = std::min(row.min_stability, special::stability_coefficient(n, rho));
        }
        const bool ok = row.min_hn_scaled > 0.0 && row.min_stability > 0.0
                     && (n >= 3 ? row.min_relation >= -relation_tol : row.min_g_prime > 0.0);
        report.passed = report.passed && ok;
        report.rows.push_back(row);
    }
    return report;
}

// -------------------------------------------------------- stability-scan

GapScanReport run_stability_scan(int n, double omega, int degree, const std::vector<double>& eps,
                                 int resolution)
{
    const auto grid = sphere::make_grid(n, resolution);
    if (degree < 1 || degree > grid->max_degree())
        throw std::invalid_argument("stability-scan: bad degree");
    GapScanReport report{n, degree, {}, 0.0};
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double e : eps) {
        sphere::HarmonicExpansion coeffs(n, std::max(degree, 1));
        coeffs.at({degree, 0}) = e;
        const auto s = shape::project_to_constraints(shape::from_coefficients(grid, omega, coeffs));
        std::vector<double> sq(s.v().size());
        for (std::size_t i = 0; i < sq.size(); ++i)
            sq[i] = s.v()[i] * s.v()[i];
        GapScanRow row{e, functionals::stability_gap(s), sphere::integrate(*grid, sq), 0.0};
        row.gap_over_eps_sq = row.gap / (e * e);
        lo = std::min(lo, row.gap_over_eps_sq);
        hi = std::max(hi, row.gap_over_eps_sq);
        report.rows.push_back(row);
    }
    report.relative_spread = report.rows.empty() ? 0.0 : (hi - lo) / std::abs(lo);
    return report;
}

// ---------------------------------------------------------------- perturb

void assign_flags(TrialRecord& r)
{
    r.ratio_ok = r.ratio <= r.lambda_ball * (1.0 + 1e-12);
    r.chain_ok = std::isnan(r.lambda_trefftz) || r.lambda_trefftz <= r.ratio * (1.0 + 1e-12);
    r.gap_ok = r.gap >= -1e-12;
}

PerturbSummary summarize(const std::vector<TrialRecord>& records, int projection_failures)
{
    PerturbSummary s;
    s.trials = int(records.size()) + projection_failures;
    s.projection_failures = projection_failures;
    s.k_empirical = kNaN;
    s.min_poincare = kNaN;
    s.max_ratio = kNaN;
    for (const auto& r : records) {
        if (!r.ratio_ok)
            ++s.violations;
        if (!r.chain_ok)
            ++s.chain_violations;
        if (!r.gap_ok)
            ++s.gap_violations;
        if (std::isnan(s.max_ratio) || r.ratio > s.max_ratio)
            s.max_ratio = r.ratio;
        if (r.l2_sq > 0.0) {
            const double k = r.gap / r.l2_sq;
            const double p = r.h1_sq / r.l2_sq;
            if (std::isnan(s.k_empirical) || k < s.k_empirical)
                s.k_empirical = k;
            if (std::isnan(s.min_poincare) || p < s.min_poincare)
                s.min_poincare = p;
        }
    }
    return s;
}

sphere::HarmonicExpansion random_coefficients(Rng& rng, const sphere::SphereGrid& grid, double eps,
                                              int first_degree, int band_limit)
{
    const int n = grid.dimension();
    if (band_limit < 0)
        band_limit = shape::default_band_limit(grid);
    sphere::HarmonicExpansion coeffs(n, band_limit);
    if (eps == 0.0)
        return coeffs;
    const std::size_t first = sphere::harmonic_count(n, first_degree - 1);
    for (std::size_t j = first; j < coeffs.coefficients.size(); ++j)
        coeffs.coefficients[j] = rng.uniform(-1.0, 1.0);
    const auto v = sphere::synthesize(grid, coeffs);
    const auto g = sphere::surface_gradient_sq(grid, coeffs);
    double sup = 0.0, gsup = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        sup = std::max(sup, std::abs(v[i]));
        gsup = std::max(gsup, std::sqrt(g[i]));
    }
    const double scale = eps / (sup + gsup);
    for (double& a : coeffs.coefficients)
        a *= scale;
    return coeffs;
}

namespace {

template <class Fn>
void parallel_for(int count, Fn&& fn)
{
    const int workers =
        std::max(1, std::min<int>(count, int(std::thread::hardware_concurrency())));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

double integral_of_square(const sphere::SphereGrid& grid, const std::vector<double>& v)
{
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        sq[i] = v[i] * v[i];
    return sphere::integrate(grid, sq);
}

} // namespace

PerturbReport run_perturb(const ExperimentSpec& spec)
{
    spec.validate();
    PerturbReport report;
    report.spec = spec;
    const auto grid = grid_for(spec);
    const double omega = spec.omega_or_default();
    const double lam_ball = special::lambda_ball(spec.n, special::ball_radius(spec.n, omega));
    const auto config = penalty_config_for(spec);

    std::vector<std::optional<TrialRecord>> slots(spec.trials);
    parallel_for(spec.trials, [&](int t) {
        Rng rng(spec.seed, std::uint64_t(t));
        const auto coeffs = random_coefficients(rng, *grid, spec.eps);
        std::optional<StarShape> s;
        try {
            s = shape::project_to_constraints(shape::from_coefficients(grid, omega, coeffs));
        } catch (const shape::ProjectionError&) {
            return;
        } catch (const shape::NotStarShapedError&) {
            return;
        }
        TrialRecord r;
        r.trial = t;
        r.eps_sup = shape::w1inf_norm(*s);
        r.l2_sq = integral_of_square(*grid, s->v());
        r.h1_sq = sphere::integrate(*grid, s->gradient_sq());
        r.ratio = functionals::rayleigh_upper_bound(*s);
        r.lambda_ball = lam_ball;
        r.lambda_trefftz = spec.n == 2 ? eigen::steklov_lambda(*s, spec.modes).lambda : kNaN;
        r.gap = functionals::stability_gap(*s);
        r.j_value = functionals::penalized_j(*s, config);
        assign_flags(r);
        slots[t] = r;
    });

    int failures = 0;
    for (auto& slot : slots) {
        if (slot)
            report.records.push_back(*slot);
        else
            ++failures;
    }
    report.summary = summarize(report.records, failures);
    return report;
}

namespace {

std::string fmt(double x)
{
    if (std::isnan(x))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const char* kCsvColumns =
    "trial,eps_sup,l2_sq,h1_sq,ratio,lambda_ball,lambda_trefftz,gap,j_value,ratio_ok,chain_ok,gap_ok";

} // namespace

void write_perturb_csv(std::ostream& out, const PerturbReport& report)
{
    out << "# " << report.spec.to_json() << '\n' << kCsvColumns << '\n';
    for (const auto& r : report.records) {
        out << r.trial << ',' << fmt(r.eps_sup) << ',' << fmt(r.l2_sq) << ',' << fmt(r.h1_sq) << ','
            << fmt(r.ratio) << ',' << fmt(r.lambda_ball) << ',' << fmt(r.lambda_trefftz) << ','
            << fmt(r.gap) << ',' << fmt(r.j_value) << ',' << int(r.ratio_ok) << ','
            << int(r.chain_ok) << ',' << int(r.gap_ok) << '\n';
    }
}

ParsedCsv read_perturb_csv(std::istream& in)
{
    ParsedCsv parsed;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
        throw std::runtime_error("perturb csv: missing JSON header line");
    parsed.header_json = line.substr(2);
    if (!std::getline(in, line) || line != kCsvColumns)
        throw std::runtime_error("perturb csv: unexpected column header");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (cells.size() != 12)
            throw std::runtime_error("perturb csv: bad row '" + line + "'");
        auto num = [](const std::string& c) { return std::strtod(c.c_str(), nullptr); };
        TrialRecord r;
        r.trial = std::stoi(cells[0]);
        r.eps_sup = num(cells[1]);
        r.l2_sq = num(cells[2]);
        r.h1_sq = num(cells[3]);
        r.ratio = num(cells[4]);
        r.lambda_ball = num(cells[5]);
        r.lambda_trefftz = num(cells[6]);
        r.gap = num(cells[7]);
        r.j_value = num(cells[8]);
        r.ratio_ok = cells[9] == "1";
        r.chain_ok = cells[10] == "1";
        r.gap_ok = cells[11] == "1";
        parsed.records.push_back(r);
    }
    return parsed;
}

// ---------------------------------------------------------------- search

namespace {
constexpr int kSearchBand = 8;
}

SearchResult run_search(const ExperimentSpec& spec)
{
    spec.validate();
    if (spec.budget < 1 || spec.restarts < 1)
        throw std::invalid_argument("search needs budget >= 1 and restarts >= 1");
    const auto grid = grid_for(spec);
    const int n = spec.n;
    const double omega = spec.omega_or_default();
    const int first_degree = spec.allow_degree_one ? 1 : 2;
    const std::size_t first = sphere::harmonic_count(n, first_degree - 1);

    shape::ProjectionOptions options;
    options.barycenter = spec.project;

    SearchResult result;
    result.lambda_ball = special::lambda_ball(n, special::ball_radius(n, omega));
    result.best_ratio = -std::numeric_limits<double>::infinity();

    // Rescale into the eps ball, project, and return V/P (nullopt if infeasible).
    auto evaluate = [&](sphere::HarmonicExpansion& coeffs) -> std::optional<double> {
        ++result.evaluations;
        try {
            auto raw = shape::from_coefficients(grid, omega, coeffs);
            const double w = shape::w1inf_norm(raw);
            if (w > spec.eps && w > 0.0) {
                for (double& a : coeffs.coefficients)
                    a *= spec.eps / w;
                raw = shape::from_coefficients(grid, omega, coeffs);
            }
            const auto s = shape::project_to_constraints(raw, options);
            return functionals::rayleigh_upper_bound(s);
        } catch (const shape::ProjectionError&) {
            return std::nullopt;
        } catch (const shape::NotStarShapedError&) {
            return std::nullopt;
        }
    };

    Rng rng(spec.seed);
    const int per_restart = std::max(1, spec.budget / spec.restarts);
    for (int restart = 0; restart < spec.restarts; ++restart) {
        auto coeffs = random_coefficients(rng, *grid, spec.eps, first_degree,
                                          std::min(kSearchBand, shape::default_band_limit(*grid)));
        auto ratio = evaluate(coeffs);
        if (!ratio)
            continue;
        result.restart_starts.push_back(int(result.accepted_ratios.size()));
        result.accepted_ratios.push_back(*ratio);
        double step = 0.0;
        for (std::size_t j = first; j < coeffs.coefficients.size(); ++j)
            step = std::max(step, std::abs(coeffs.coefficients[j]));
        step *= 0.5;
        const std::size_t free = coeffs.coefficients.size() - first;
        int misses = 0;
        for (int e = 1; e < per_restart && free > 0 && step > 0.0; ++e) {
            auto trial = coeffs;
            const std::size_t j = first + std::size_t(rng.below(free));
            trial.coefficients[j] += rng.uniform() < 0.5 ? -step : step;
            const auto r = evaluate(trial);
            if (r && *r > *ratio) {
                coeffs = std::move(trial);
                ratio = r;
                ++result.accepted;
                result.accepted_ratios.push_back(*r);
                misses = 0;
            } else {
                ++result.rejected;
                if (++misses >= int(2 * free)) {
                    step *= 0.5;
                    misses = 0;
                }
            }
        }
        if (*ratio > result.best_ratio) {
            result.best_ratio = *ratio;
            result.best_coefficients = coeffs;
        }
    }
    result.margin = result.lambda_ball - result.best_ratio;
    return result;
}

// ---------------------------------------------------------------- trefftz

TrefftzReport run_trefftz(const StarShape& shape, int modes)
{
    const auto eig = eigen::steklov_lambda(shape, modes);
    TrefftzReport r;
    r.lambda_trefftz = eig.lambda;
    r.ratio = functionals::rayleigh_upper_bound(shape);
    r.lambda_ball = special::lambda_ball(shape.dimension(), shape.rho());
    r.residual = eig.residual;
    r.monotone = eig.monotone_flag;
    r.ritz_by_modes = eig.ritz_by_modes;
    return r;
}

// ---------------------------------------------------------------- penalty

PenaltyReport run_penalty(const StarShape& shape, const functionals::PenaltyConfig& config)
{
    PenaltyReport r;
    r.config = config;
    r.terms = functionals::penalty_terms(shape, config);
    r.ball_terms = functionals::penalty_terms(shape::ball(shape.grid_ptr(), config.omega), config);
    return r;
}

// ---------------------------------------------------------------- robin

RobinReport run_robin(int n, double radius, double alpha)
{
    const auto eig = eigen::robin_ball_eigenvalue(n, radius, alpha);
    RobinReport r{};
    r.kappa = eig.kappa;
    r.lambda = eig.lambda;
    r.residual = eig.residual;
    if (alpha == 0.0) {
        r.bridge = 0.0;
        r.robin_relation = 0.0;
        return r;
    }
    const auto order = special::BesselOrder::for_dimension(n);
    const double s = r.kappa * radius;
    r.bridge = special::lambda_ball(n, s) - std::abs(alpha) / r.kappa;
    // Radial eigenfunction z(kappa |x|): kappa z'(kappa R) + alpha z(kappa R) = 0,
    // multiplied through by (kappa R)^nu.
    r.robin_relation = r.kappa * special::bessel_i(order.next(), s)
                     + alpha * special::bessel_i(order, s);
    return r;
}

} // namespace steklov::lab
