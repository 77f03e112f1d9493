#include "ergent/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>

#include "ergent/accum.hpp"
#include "ergent/dynamics.hpp"
#include "ergent/entanglement.hpp"
#include "ergent/errors.hpp"
#include "ergent/parallel.hpp"
#include "ergent/rng.hpp"

namespace ergent {

namespace {

std::uint64_t stream_tag(Spectrum::Ensemble e, int d_B, std::uint64_t lane) {
    return splitmix64((std::uint64_t(e) << 32) ^ std::uint64_t(d_B) ^ (lane << 56));
}

Spectrum sample_ensemble(Spectrum::Ensemble e, int d_B, std::uint64_t seed) {
    switch (e) {
        case Spectrum::Ensemble::gue: return sample_gue_spectrum(d_B, seed);
        case Spectrum::Ensemble::poisson: return sample_poisson_spectrum(d_B, 1.0, seed);
        case Spectrum::Ensemble::picket_fence: return picket_fence_spectrum(d_B, 1.0);
        case Spectrum::Ensemble::custom:
            fail(errc::configuration, "custom spectra cannot be sampled in a sweep");
    }
    fail(errc::configuration, "unreachable ensemble tag");
}

}  // namespace

void SweepSpec::validate() const {
    require(!ensembles.empty() && !profiles.empty() && !d_A_list.empty() && !d_B_list.empty(),
            errc::configuration, "sweep grid has an empty axis");
    require(n_realizations >= 1, errc::configuration, "n_realizations must be >= 1");
    for (int d : d_A_list) require(d >= 1, errc::configuration, "d_A must be >= 1");
    for (int d : d_B_list) require(d >= 2, errc::configuration, "d_B must be >= 2");
    if (!t0_auto)
        require(t0_value > 0.0, errc::configuration, "explicit t0 must be positive");
    require(gaussian_sigma_frac > 0.0, errc::configuration, "gaussian sigma must be positive");
    require(gibbs_beta_span >= 0.0, errc::configuration, "gibbs beta must be non-negative");
}

double sweep_auto_t0(int d_A, int d_B, int d_B_anchor) {
    require(d_A >= 1 && d_B >= 1 && d_B_anchor >= 1, errc::invalid_parameter,
            "dimensions must be positive");
    return kRampWindowEndFrac * 2.0 * std::numbers::pi * double(d_B_anchor) /
           (double(d_A) * double(d_B));
}

StateProfile sweep_profile(const SweepSpec& spec, StateProfile::Profile tag,
                           const Spectrum& s, std::uint64_t seed) {
    switch (tag) {
        case StateProfile::Profile::flat:
            return flat_state(s.d_B());
        case StateProfile::Profile::gaussian: {
            double e0 = s.min_energy() + spec.gaussian_center_frac * s.span();
            return gaussian_wavepacket(s, e0, spec.gaussian_sigma_frac * s.span());
        }
        case StateProfile::Profile::gibbs:
            return coherent_gibbs_state(s, spec.gibbs_beta_span / s.span());
        case StateProfile::Profile::haar_random:
            return haar_random_state(s.d_B(), seed);
        case StateProfile::Profile::custom:
            fail(errc::configuration, "custom profiles cannot be built in a sweep");
    }
    fail(errc::configuration, "unreachable profile tag");
}

SweepResult run_purity_sweep(const SweepSpec& spec, int threads) {
    spec.validate();
    const int d_B_anchor = *std::min_element(spec.d_B_list.begin(), spec.d_B_list.end());
    const int n_real = spec.n_realizations;

    struct Cell {
        StateProfile::Profile profile;
        int d_A;
        double t0;
        std::vector<double> purity;  // per realization
        bool failed = false;
        std::string error;
    };
    struct Group {
        Spectrum::Ensemble ensemble;
        int d_B;
        std::vector<Cell> cells;
    };

    // Grid points sharing (ensemble, d_B) reuse the same sampled spectrum
    // per realization; each cell stays an independent output row.
    std::vector<Group> groups;
    for (auto e : spec.ensembles) {
        for (int d_B : spec.d_B_list) {
            Group grp;
            grp.ensemble = e;
            grp.d_B = d_B;
            for (auto p : spec.profiles) {
                for (int d_A : spec.d_A_list) {
                    Cell c;
                    c.profile = p;
                    c.d_A = d_A;
                    c.t0 = spec.t0_auto ? sweep_auto_t0(d_A, d_B, d_B_anchor) : spec.t0_value;
                    c.purity.assign(n_real, 0.0);
                    grp.cells.push_back(std::move(c));
                }
            }
            groups.push_back(std::move(grp));
        }
    }

    for (auto& grp : groups) {
        const std::uint64_t spec_lane = stream_tag(grp.ensemble, grp.d_B, 0);
        const std::uint64_t prof_lane = stream_tag(grp.ensemble, grp.d_B, 1);
        std::vector<std::atomic<bool>> failed(grp.cells.size());
        std::vector<std::string> first_error(grp.cells.size());
        std::mutex error_mutex;
        parallel_for(n_real, threads, [&](int r) {
            std::uint64_t real_seed = derive_seed(spec.base_seed, std::uint64_t(r));
            Spectrum s;
            try {
                s = unfold(
                    sample_ensemble(grp.ensemble, grp.d_B, derive_seed(real_seed, spec_lane)));
            } catch (const Error& err) {
                // spectrum-level failure takes down every row of the group
                std::lock_guard<std::mutex> lock(error_mutex);
                for (std::size_t ci = 0; ci < grp.cells.size(); ++ci)
                    if (!failed[ci].exchange(true)) first_error[ci] = err.what();
                return;
            }
            for (std::size_t ci = 0; ci < grp.cells.size(); ++ci) {
                Cell& cell = grp.cells[ci];
                if (failed[ci].load(std::memory_order_relaxed)) continue;
                try {
                    StateProfile phi = sweep_profile(spec, cell.profile, s,
                                                     derive_seed(real_seed, prof_lane));
                    ProtocolConfig cfg{cell.d_A, cell.t0, s, phi};
                    double p = purity_from_return_prob(cfg);
                    if (spec.cross_check_direct) {
                        double pd = purity_direct(cfg);
                        require(std::abs(pd - p) < 1e-8, errc::invariant_violation,
                                "direct-oracle cross-check failed");
                    }
                    cell.purity[r] = p;
                } catch (const Error& err) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!failed[ci].exchange(true)) first_error[ci] = err.what();
                }
            }
        });
        for (std::size_t ci = 0; ci < grp.cells.size(); ++ci) {
            if (failed[ci]) {
                grp.cells[ci].failed = true;  // row aborts; sweep continues
                grp.cells[ci].error = first_error[ci];
            }
        }
    }

    SweepResult out;
    for (const auto& grp : groups) {
        for (const auto& cell : grp.cells) {
            if (cell.failed) {
                out.errors.push_back({ensemble_name(grp.ensemble), profile_name(cell.profile),
                                      cell.d_A, grp.d_B, cell.error});
                continue;
            }
            MeanSem ms = mean_sem(cell.purity);
            SweepRow row;
            row.ensemble = ensemble_name(grp.ensemble);
            row.profile = profile_name(cell.profile);
            row.d_A = cell.d_A;
            row.d_B = grp.d_B;
            row.t0 = cell.t0;
            row.n_real = n_real;
            row.mean_purity = ms.mean;
            row.sem_purity = ms.sem;
            row.mean_eta2 = cell.d_A * ms.mean - 1.0;
            row.excess_times_dB = (ms.mean - 1.0 / cell.d_A) * grp.d_B;
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

FluctuationSplit decompose_fluctuations(Spectrum::Ensemble ensemble, int d_B,
                                        StateProfile::Profile profile,
                                        const std::vector<double>& window_times,
                                        int n_realizations, std::uint64_t base_seed,
                                        int threads) {
    require(!window_times.empty(), errc::invalid_window, "empty fluctuation window");
    require(n_realizations >= 1, errc::invalid_parameter, "n_realizations must be >= 1");
    const std::uint64_t spec_lane = stream_tag(ensemble, d_B, 0);
    const std::uint64_t prof_lane = stream_tag(ensemble, d_B, 1);
    std::vector<double> fe(n_realizations, 0.0), fphi(n_realizations, 0.0);
    SweepSpec defaults;  // profile parametrization only
    parallel_for(n_realizations, threads, [&](int r) {
        std::uint64_t real_seed = derive_seed(base_seed, std::uint64_t(r));
        Spectrum s = unfold(sample_ensemble(ensemble, d_B, derive_seed(real_seed, spec_lane)));
        StateProfile phi = sweep_profile(defaults, profile, s, derive_seed(real_seed, prof_lane));
        StateProfile flat = flat_state(d_B);
        KahanSum se, sphi;
        for (double t : window_times) {
            double p_flat = return_probability(s, flat, t);
            double p_phi = profile == StateProfile::Profile::flat
                               ? p_flat
                               : return_probability(s, phi, t);
            se.add(p_flat);
            sphi.add(p_phi - p_flat);
        }
        fe[r] = se.value() / double(window_times.size());
        fphi[r] = sphi.value() / double(window_times.size());
    });
    FluctuationSplit out;
    out.f_E = mean_sem(fe).mean;
    out.f_phi = mean_sem(fphi).mean;
    return out;
}

RampScan ramp_scan(Spectrum::Ensemble ensemble, int d_B, const std::vector<double>& t_grid,
                   int n_realizations, std::uint64_t base_seed, int threads) {
    require(!t_grid.empty(), errc::invalid_window, "empty time grid");
    require(n_realizations >= 1, errc::invalid_parameter, "n_realizations must be >= 1");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        require(t_grid[i] >= 0.0, errc::invalid_parameter, "times must be non-negative");
        if (i > 0)
            require(t_grid[i] > t_grid[i - 1], errc::invalid_parameter,
                    "time grid must be ascending");
    }
    const std::uint64_t spec_lane = stream_tag(ensemble, d_B, 0);
    std::vector<std::vector<double>> per_real(n_realizations);
    parallel_for(n_realizations, threads, [&](int r) {
        std::uint64_t real_seed = derive_seed(base_seed, std::uint64_t(r));
        Spectrum s = unfold(sample_ensemble(ensemble, d_B, derive_seed(real_seed, spec_lane)));
        auto& row = per_real[r];
        row.resize(t_grid.size());
        for (std::size_t i = 0; i < t_grid.size(); ++i) row[i] = sff(s, t_grid[i]);
    });
    RampScan out;
    out.times = t_grid;
    out.mean_sff.resize(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        KahanSum acc;
        for (int r = 0; r < n_realizations; ++r) acc.add(per_real[r][i]);
        out.mean_sff[i] = acc.value() / n_realizations;
    }
    return out;
}

LinearFit fit_window(const RampScan& scan, double t_lo, double t_hi) {
    require(t_lo < t_hi, errc::invalid_window, "fit window is empty");
    LinearFit fit;
    KahanSum sx, sy, sxx, sxy;
    for (std::size_t i = 0; i < scan.times.size(); ++i) {
        double t = scan.times[i];
        if (t < t_lo || t > t_hi) continue;
        sx.add(t);
        sy.add(scan.mean_sff[i]);
        sxx.add(t * t);
        sxy.add(t * scan.mean_sff[i]);
        ++fit.n_points;
    }
    require(fit.n_points >= 3, errc::invalid_window,
            "fewer than 3 scan points in the fit window");
    double n = fit.n_points;
    double denom = n * sxx.value() - sx.value() * sx.value();
    require(denom != 0.0, errc::invalid_window, "degenerate fit window");
    fit.slope = (n * sxy.value() - sx.value() * sy.value()) / denom;
    fit.intercept = (sy.value() - fit.slope * sx.value()) / n;
    return fit;
}

std::vector<CapacityRow> capacity_comparison(const std::vector<int>& d_A_list,
                                             double epsilon, double gamma, double kappa) {
    require(!d_A_list.empty(), errc::invalid_parameter, "empty d_A list");
    std::vector<CapacityRow> rows;
    rows.reserve(d_A_list.size());
    for (int d_A : d_A_list) {
        CapacityRow row;
        row.d_A = d_A;
        row.ergodic_smooth = min_dB_bound(
            d_A, CapacityCase::make(CapacityCase::Tag::ergodic_smooth, epsilon, gamma, kappa));
        row.rmt_generic = min_dB_bound(
            d_A,
            CapacityCase::make(CapacityCase::Tag::generic_or_infinite_t, epsilon, gamma, kappa));
        row.poisson_generic = min_dB_bound(
            d_A, CapacityCase::make(CapacityCase::Tag::poisson_generic, epsilon, gamma, kappa));
        row.generic_over_smooth = row.rmt_generic / row.ergodic_smooth;
        row.poisson_over_rmt = row.poisson_generic / row.rmt_generic;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ergent
