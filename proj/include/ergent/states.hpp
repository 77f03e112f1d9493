#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ergent/spectra.hpp"

namespace ergent {

/// Initial-state amplitudes over a spectrum's eigenbasis, unit norm.
/// flat/gaussian/gibbs are the "smooth in energy" class (real,
/// non-negative); haar_random is the generic fluctuating class.
struct StateProfile {
    enum class Profile { flat, gaussian, gibbs, haar_random, custom };

    std::vector<std::complex<double>> amplitudes;
    Profile tag = Profile::custom;

    int d_B() const { return static_cast<int>(amplitudes.size()); }
    /// |amplitude_n|^2 per level.
    std::vector<double> weights() const;
    void validate() const;
};

const char* profile_name(StateProfile::Profile p);
StateProfile::Profile profile_from_name(const std::string& name);

/// All amplitudes equal 1/sqrt(d_B).
StateProfile flat_state(int d_B);

/// amplitudes ~ exp(-(E - E0)^2 / (4 sigma^2)), normalized. Errors if the
/// whole profile underflows to zero before normalization.
StateProfile gaussian_wavepacket(const Spectrum& s, double E0, double sigma);

/// amplitudes ~ exp(-beta E / 2), normalized; beta = 0 gives the flat state.
StateProfile coherent_gibbs_state(const Spectrum& s, double beta);

/// iid complex Gaussian amplitudes, normalized; deterministic per seed.
StateProfile haar_random_state(int d_B, std::uint64_t rng_seed);

/// Wraps externally supplied amplitudes, normalizing on load. Sets
/// *renormalized when the input norm deviated from 1 by more than 1e-6.
StateProfile custom_profile(std::vector<std::complex<double>> amplitudes,
                            bool* renormalized = nullptr);

}  // namespace ergent
