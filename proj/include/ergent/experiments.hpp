#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ergent/spectra.hpp"
#include "ergent/states.hpp"
#include "ergent/transfer.hpp"

namespace ergent {

/// Grid specification for ensemble-averaged purity sweeps.
struct SweepSpec {
    std::vector<Spectrum::Ensemble> ensembles;
    std::vector<StateProfile::Profile> profiles;
    std::vector<int> d_A_list;
    std::vector<int> d_B_list;

    /// t0 policy: explicit value, or the automatic ramp-window rule (see
    /// sweep_auto_t0). Explicit values are used verbatim on the unfolded
    /// spectra.
    bool t0_auto = true;
    double t0_value = 0.0;

    int n_realizations = 1;
    std::uint64_t base_seed = 0;

    // Parametrization of the tagged profiles on unfolded spectra.
    double gaussian_center_frac = 0.5;   // E0 as a fraction of the span
    double gaussian_sigma_frac = 0.125;  // sigma as a fraction of the span
    double gibbs_beta_span = 4.0;        // beta * span

    /// Cross-check every realization against the direct partial-trace
    /// oracle (costly; subject to the memory cap).
    bool cross_check_direct = false;

    void validate() const;
};

struct SweepRow {
    std::string ensemble;
    std::string profile;
    int d_A = 0;
    int d_B = 0;
    double t0 = 0.0;
    int n_real = 0;
    double mean_purity = 0.0;
    double sem_purity = 0.0;
    double mean_eta2 = 0.0;
    double excess_times_dB = 0.0;  // (mean_purity - 1/d_A) * d_B
};

struct SweepRowError {
    std::string ensemble;
    std::string profile;
    int d_A = 0;
    int d_B = 0;
    std::string message;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<SweepRowError> errors;
};

/// Automatic kick step for sweeps. The evolution window [t0, d_A t0] ends
/// at ramp_window_end_frac of the Heisenberg time for the smallest grid
/// dimension (the anchor) and is held fixed in physical time as d_B
/// grows: t0 = frac * 2 pi * d_B_anchor / (d_A * d_B) on unfolded
/// spectra. Keeping the window fixed while t_H grows linearly in d_B is
/// what exposes the 1/d_B^2 spectral-rigidity scaling of the
/// ergodic-smooth case; a window scaling with t_H would pin the excess at
/// 1/d_B for every dimension.
inline constexpr double kRampWindowEndFrac = 0.4;
double sweep_auto_t0(int d_A, int d_B, int d_B_anchor);

/// Ensemble-averaged purity over the full grid. All spectra are unfolded
/// before use; per-realization seeds derive from (base_seed, realization);
/// a failing grid point aborts only its own row.
SweepResult run_purity_sweep(const SweepSpec& spec, int threads = 0);

struct FluctuationSplit {
    double f_E = 0.0;    // spectral contribution: window average of the SFF
    double f_phi = 0.0;  // initial-state contribution: average of p_phi - p_flat
};

/// Splits the window-averaged return probability into spectral and
/// initial-state fluctuation contributions.
FluctuationSplit decompose_fluctuations(Spectrum::Ensemble ensemble, int d_B,
                                        StateProfile::Profile profile,
                                        const std::vector<double>& window_times,
                                        int n_realizations, std::uint64_t base_seed,
                                        int threads = 0);

struct RampScan {
    std::vector<double> times;
    std::vector<double> mean_sff;
};

/// Ensemble-averaged spectral form factor on a grid (unfolded spectra).
RampScan ramp_scan(Spectrum::Ensemble ensemble, int d_B, const std::vector<double>& t_grid,
                   int n_realizations, std::uint64_t base_seed, int threads = 0);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    int n_points = 0;
};

/// Least-squares line through the scan points with t in [t_lo, t_hi];
/// requires at least 3 points in the window.
LinearFit fit_window(const RampScan& scan, double t_lo, double t_hi);

struct CapacityRow {
    int d_A = 0;
    double ergodic_smooth = 0.0;
    double rmt_generic = 0.0;
    double poisson_generic = 0.0;
    double generic_over_smooth = 0.0;
    double poisson_over_rmt = 0.0;
};

/// min_dB_bound tabulated across the three cases, with case ratios.
std::vector<CapacityRow> capacity_comparison(const std::vector<int>& d_A_list,
                                             double epsilon, double gamma, double kappa);

/// Builds the tagged profile on an (unfolded) spectrum using the sweep's
/// parametrization; haar_random consumes the seed.
StateProfile sweep_profile(const SweepSpec& spec, StateProfile::Profile tag,
                           const Spectrum& s, std::uint64_t seed);

}  // namespace ergent
