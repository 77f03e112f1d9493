#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ergent/spectra.hpp"
#include "ergent/states.hpp"

namespace ergent {

/// Return amplitude and probability sampled on a time grid.
struct ReturnSeries {
    std::vector<double> times;
    std::vector<std::complex<double>> amplitudes;
    std::vector<double> probabilities;
};

/// Gram matrix of the Krylov vectors {U_t0^n |phi>}. Hermitian, unit
/// diagonal and positive semidefinite; Toeplitz in the single-charge
/// protocol (entry jk depends only on k - j).
struct GramMatrix {
    Eigen::MatrixXcd entries;
    double t0 = 0.0;
    int d_A = 0;
    bool toeplitz = false;

    /// Checks Hermiticity (1e-12), unit diagonal (1e-12), the Toeplitz
    /// structure when flagged, and with `spectral` the PSD floor (-1e-10).
    void validate(bool spectral = false) const;
};

/// <phi| e^{-i H_B t} |phi> = sum_n |phi_n|^2 e^{-i E_n t}.
std::complex<double> return_amplitude(const Spectrum& s, const StateProfile& phi, double t);

/// |return_amplitude|^2.
double return_probability(const Spectrum& s, const StateProfile& phi, double t);

ReturnSeries return_series(const Spectrum& s, const StateProfile& phi,
                           const std::vector<double>& times);

/// Spectral form factor K(t) = |sum_n e^{-i E_n t}|^2 / d_B^2. Equals the
/// flat-state return probability.
double sff(const Spectrum& s, double t);

/// G_jk = return_amplitude((k - j) t0), filled from d_A amplitude
/// evaluations (Toeplitz structure).
GramMatrix krylov_gram(const Spectrum& s, const StateProfile& phi, double t0, int d_A);

/// Explicit Krylov vectors in the eigenbasis: vector n has components
/// phi_m e^{-i E_m n t0}.
std::vector<Eigen::VectorXcd> krylov_vectors(const Spectrum& s, const StateProfile& phi,
                                             double t0, int d_A);

/// Default single-shot evolution step: t_H / (10 d_A).
double default_t0(const Spectrum& s, int d_A);

}  // namespace ergent
