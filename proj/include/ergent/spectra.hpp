#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ergent {

/// Sorted eigenvalue spectrum of the complex-system Hamiltonian, with
/// ensemble provenance. Natural units, hbar = 1.
struct Spectrum {
    enum class Ensemble { gue, poisson, picket_fence, custom };

    std::vector<double> energies;  // sorted non-decreasing
    Ensemble ensemble = Ensemble::custom;
    bool unfolded = false;

    int d_B() const { return static_cast<int>(energies.size()); }
    double min_energy() const { return energies.front(); }
    double max_energy() const { return energies.back(); }
    double span() const { return energies.back() - energies.front(); }

    /// Throws on unsorted or empty energy lists.
    void validate() const;
};

const char* ensemble_name(Spectrum::Ensemble e);
Spectrum::Ensemble ensemble_from_name(const std::string& name);

/// Wraps user-supplied sorted energies as a custom Spectrum.
Spectrum custom_spectrum(std::vector<double> energies, bool unfolded = false);

/// One GUE draw: Hermitian matrix with centered Gaussian entries
/// (real diagonal variance 1, complex off-diagonal variance 1).
/// Semicircle radius 2*sqrt(d_B) under this normalization.
Eigen::MatrixXcd gue_matrix(int d_B, std::mt19937_64& rng);

Spectrum sample_gue_spectrum(int d_B, std::uint64_t rng_seed);

/// Cumulative sum of iid exponential spacings with the given mean.
Spectrum sample_poisson_spectrum(int d_B, double mean_spacing, std::uint64_t rng_seed);

/// E_n = n * spacing, n = 0..d_B-1.
Spectrum picket_fence_spectrum(int d_B, double spacing);

/// Monotone affine rescaling to unit mean nearest-neighbor spacing with
/// E_min shifted to 0. Preserves rank order and all spacing fluctuations;
/// idempotent. Comparisons across ensembles run on unfolded spectra.
Spectrum unfold(const Spectrum& s);

/// 2*pi times the mean density of states, 2*pi*(d_B-1)/(E_max-E_min).
double heisenberg_time(const Spectrum& s);

/// Mean of min(d_n, d_{n+1}) / max(d_n, d_{n+1}) over consecutive
/// nearest-neighbor spacings. A pair with max spacing 0 contributes 0.
/// Reference values: picket fence 1.0, Poisson 2 ln 2 - 1 = 0.386,
/// GUE 0.600.
double spacing_ratio_statistic(const Spectrum& s);

/// Result of diagonalizing a user-supplied Hamiltonian: the spectrum plus
/// the unitary whose columns are the eigenvectors (computational basis ->
/// eigenbasis). Any downstream quantity depends only on the eigenvalues
/// and the state components in this basis.
struct EigenSystem {
    Spectrum spectrum;
    Eigen::MatrixXcd basis;  // H = basis * diag(E) * basis^dagger

    /// Components of a computational-basis state in the eigenbasis.
    Eigen::VectorXcd to_eigenbasis(const Eigen::VectorXcd& state) const;
};

/// Requires H Hermitian elementwise within 1e-10.
EigenSystem diagonalize_hermitian(const Eigen::MatrixXcd& H);

}  // namespace ergent
