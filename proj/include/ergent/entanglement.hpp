#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "ergent/dynamics.hpp"
#include "ergent/spectra.hpp"
#include "ergent/states.hpp"

namespace ergent {

/// Complex-entry budget for the explicit-state routes (the brute-force
/// oracle allocates d_A * d_B entries; the sampled Haar unitary allocates
/// (d_A * d_B)^2).
inline constexpr std::size_t kDefaultMemoryCap = std::size_t(1) << 22;

/// One run of the non-demolition protocol: the control register size, the
/// kick step, and the complex system's spectrum and initial profile.
struct ProtocolConfig {
    int d_A = 0;
    double t0 = 0.0;
    Spectrum spectrum;
    StateProfile profile;

    void validate() const;
};

/// Purity by every route plus the Krylov-ergodicity measure.
struct PurityReport {
    double purity_formula = 0.0;  // return-probability sum
    double purity_direct = 0.0;   // explicit state + partial trace
    double purity_gram = 0.0;     // Tr(G^2)/d_A^2
    double eta2 = 0.0;
    std::map<int, double> higher_purities;
    double max_discrepancy = 0.0;
};

/// 1/d_A + (2/d_A) sum_{tau=1}^{d_A-1} (1 - tau/d_A) p_phi(tau t0).
double purity_from_return_prob(const ProtocolConfig& cfg);

/// Reduced state of the control register from the explicitly constructed
/// d_A x d_B protocol state. Brute-force oracle for everything else.
Eigen::MatrixXcd reduced_density_direct(const ProtocolConfig& cfg,
                                        std::size_t memory_cap = kDefaultMemoryCap);

/// Tr(rho_A^2) of reduced_density_direct.
double purity_direct(const ProtocolConfig& cfg, std::size_t memory_cap = kDefaultMemoryCap);

/// Tr(G^2) / d_A^2.
double purity_from_gram(const GramMatrix& g);

/// Tr(G^2) / d_A - 1: variance of the Gram eigenvalues around 1; zero
/// exactly when the Krylov set is orthonormal.
double eta2(const GramMatrix& g);

/// Tr(G^alpha) / d_A^alpha via the (PSD-clipped) eigenvalues of G.
double higher_purity(const GramMatrix& g, int alpha);

/// Purity of the control register after one Haar-random unitary on the
/// full product space hits a fixed product state. Ensemble mean
/// approaches 1/d_A + 1/d_B.
double haar_scrambler_purity(int d_A, int d_B, std::uint64_t rng_seed,
                             std::size_t memory_cap = kDefaultMemoryCap);

/// Finite-temperature scrambler baseline d_A^(-1 + c beta^2); requires
/// c beta^2 < 1.
double thermal_scrambler_purity(int d_A, double beta, double c);

/// Maximally mixed initial state on B: the return probability is replaced
/// by the exact spectral form factor.
double mixed_state_purity(const Spectrum& s, double t0, int d_A);

/// Runs all three routes plus eta2 and higher purities; throws
/// invariant_violation if the routes disagree beyond 1e-8.
PurityReport purity_report(const ProtocolConfig& cfg,
                           const std::vector<int>& alphas = {2, 3, 4},
                           std::size_t memory_cap = kDefaultMemoryCap);

}  // namespace ergent
