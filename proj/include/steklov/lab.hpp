#pragma once

// Experiment runners behind the steklov-lab command line: ball quantities,
// positivity scans, random perturbation sweeps, greedy counterexample search,
// the penalized functional and the Robin bridge. Every runner returns a plain
// report struct; formatting lives in the CLI and the CSV helpers below.

#include "steklov/eigen.hpp"
#include "steklov/functionals.hpp"
#include "steklov/shape.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace steklov::lab {

/// xoshiro256** seeded through splitmix64. The sequence is fixed by the
/// algorithm, so sweeps reproduce bit-for-bit across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);
    std::uint64_t next();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t s_[4];
};

enum class Command { ball, hn_scan, stability_scan, perturb, search, trefftz, penalty, robin };

std::string to_string(Command c);
Command parse_command(const std::string& name);

struct ExperimentSpec {
    Command command = Command::ball;
    int n = 2;
    std::optional<double> omega;   // defaults to omega_n (unit ball)
    double eps = 0.05;
    int trials = 500;
    std::uint64_t seed = 42;
    std::optional<int> resolution; // defaults: 256 (circle), 32 (sphere)
    int modes = 16;
    std::optional<double> delta;
    std::optional<double> lambda1, lambda2, lambda3;
    std::string shape_path;
    double alpha = -1.0;
    double radius = 1.0;
    std::string out_path;
    // scans
    int n_max = 10;
    double s_max = 50.0;
    int steps = 5000;
    int degree = 2;
    // search
    int budget = 2000;
    int restarts = 4;
    bool project = true;
    bool allow_degree_one = false;

    double omega_or_default() const;
    int resolution_or_default() const;
    /// Throws std::invalid_argument for out-of-range parameters.
    void validate() const;
    std::string to_json() const;
    /// Overwrites fields present in a JSON object with flag-style keys.
    void merge_json(const std::string& text);
};

sphere::GridPtr grid_for(const ExperimentSpec& spec);
functionals::PenaltyConfig penalty_config_for(const ExperimentSpec& spec);

// ------------------------------------------------------------------ ball

struct BallReport {
    int n;
    double omega, rho, lambda, gamma, perimeter, volume;
};
BallReport run_ball(int n, double omega);

// ---------------------------------------------------------------- hn-scan

struct HnScanRow {
    int n;
    double min_hn_scaled;      // min over the grid of exp(-2s) H_n(s)
    double argmin_s;
    double min_relation;       // n >= 3: min of exp(-2s)(s H_n' - H_n)
    double min_g_prime;        // n = 2: min of G'(s)
    double small_s_reduced;    // H_n(s) s^{-2nu} at the first grid point
    double small_s_limit;      // (2nu+3) / (2^nu Gamma(nu+1))^2
    double min_stability;      // min over the rho grid of the stability coefficient
};

struct HnScanReport {
    std::vector<HnScanRow> rows;
    bool passed;
};

/// s on (0, s_max] in `steps` points; rho on [rho_min, rho_max] in rho_steps points.
HnScanReport run_hn_scan(int n_min, int n_max, double s_max, int steps, double rho_min = 0.1,
                         double rho_max = 10.0, int rho_steps = 100,
                         double relation_tol = 1e-8);

// -------------------------------------------------------- stability-scan

struct GapScanRow {
    double eps;
    double gap;
    double l2_sq;
    double gap_over_eps_sq;
};

struct GapScanReport {
    int n;
    int degree;
    std::vector<GapScanRow> rows;
    double relative_spread; // (max - min) / min of gap / eps^2
};

/// Projected shapes v = eps Y_{degree,0} for each eps.
GapScanReport run_stability_scan(int n, double omega, int degree, const std::vector<double>& eps,
                                 int resolution);

// ---------------------------------------------------------------- perturb

struct TrialRecord {
    int trial = 0;
    double eps_sup = 0.0;
    double l2_sq = 0.0;          // int v^2
    double h1_sq = 0.0;          // int |Dv|^2
    double ratio = 0.0;          // V/P
    double lambda_ball = 0.0;
    double lambda_trefftz = 0.0; // NaN when not computed (n = 3)
    double gap = 0.0;
    double j_value = 0.0;
    bool projected = true;
    bool ratio_ok = true;        // ratio <= lambda_ball (1e-12 relative slack)
    bool chain_ok = true;        // lambda_trefftz <= ratio (1e-12 relative slack)
    bool gap_ok = true;          // gap >= -1e-12
};

/// Flags recomputed from the stored numbers.
void assign_flags(TrialRecord& r);

struct PerturbSummary {
    int trials = 0;
    int projection_failures = 0;
    int violations = 0;          // records with !ratio_ok
    int chain_violations = 0;
    int gap_violations = 0;
    double k_empirical = 0.0;    // min gap / l2_sq over records with l2_sq > 0
    double min_poincare = 0.0;   // min h1_sq / l2_sq
    double max_ratio = 0.0;
};

PerturbSummary summarize(const std::vector<TrialRecord>& records, int projection_failures);

struct PerturbReport {
    ExperimentSpec spec;
    std::vector<TrialRecord> records;
    PerturbSummary summary;
};

/// Random coefficients of degrees first_degree..band_limit, i.i.d. uniform on
/// [-1, 1], rescaled so that max|v| + max|Dv| equals eps.
sphere::HarmonicExpansion random_coefficients(Rng& rng, const sphere::SphereGrid& grid, double eps,
                                              int first_degree = 2, int band_limit = -1);

PerturbReport run_perturb(const ExperimentSpec& spec);

void write_perturb_csv(std::ostream& out, const PerturbReport& report);

struct ParsedCsv {
    std::string header_json;
    std::vector<TrialRecord> records;
};
ParsedCsv read_perturb_csv(std::istream& in);

// ---------------------------------------------------------------- search

struct SearchResult {
    double best_ratio = 0.0;
    double lambda_ball = 0.0;
    double margin = 0.0; // lambda_ball - best_ratio
    int evaluations = 0;
    int accepted = 0;
    int rejected = 0;
    std::vector<double> accepted_ratios; // per restart, concatenated; non-decreasing within a restart
    std::vector<int> restart_starts;     // index into accepted_ratios where each restart begins
    sphere::HarmonicExpansion best_coefficients;
};

SearchResult run_search(const ExperimentSpec& spec);

// ---------------------------------------------------------------- trefftz

struct TrefftzReport {
    double lambda_trefftz;
    double ratio;
    double lambda_ball;
    double residual;
    bool monotone;
    std::vector<double> ritz_by_modes;
};

TrefftzReport run_trefftz(const shape::StarShape& shape, int modes);

// ---------------------------------------------------------------- penalty

struct PenaltyReport {
    functionals::PenaltyTerms terms;
    functionals::PenaltyTerms ball_terms;
    functionals::PenaltyConfig config;
};

PenaltyReport run_penalty(const shape::StarShape& shape, const functionals::PenaltyConfig& config);

// ---------------------------------------------------------------- robin

struct RobinReport {
    double kappa;
    double lambda;
    double residual;
    double bridge;          // lambda_ball(n, kappa R) - |alpha| / kappa (0 when alpha = 0)
    double robin_relation;  // kappa I_nu'(kappa R) z-form residual of the boundary condition
};

RobinReport run_robin(int n, double radius, double alpha);

} // namespace steklov::lab
