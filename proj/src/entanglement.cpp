#include "ergent/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "ergent/errors.hpp"
#include "ergent/rng.hpp"

namespace ergent {

void ProtocolConfig::validate() const {
    require(d_A >= 1, errc::configuration, "d_A must be >= 1");
    require(t0 > 0.0, errc::configuration, "t0 must be positive");
    spectrum.validate();
    profile.validate();
    require(spectrum.d_B() == profile.d_B(), errc::configuration,
            "profile is not paired with the spectrum");
}

double purity_from_return_prob(const ProtocolConfig& cfg) {
    cfg.validate();
    const int d_A = cfg.d_A;
    double acc = 0.0;
    for (int tau = 1; tau < d_A; ++tau) {
        double p = return_probability(cfg.spectrum, cfg.profile, tau * cfg.t0);
        acc += (1.0 - double(tau) / d_A) * p;
    }
    return 1.0 / d_A + (2.0 / d_A) * acc;
}

Eigen::MatrixXcd reduced_density_direct(const ProtocolConfig& cfg, std::size_t memory_cap) {
    cfg.validate();
    const int d_A = cfg.d_A;
    const int d_B = cfg.spectrum.d_B();
    require(std::size_t(d_A) * std::size_t(d_B) <= memory_cap, errc::resource_limit,
            "d_A * d_B exceeds the direct-oracle memory cap");
    // Protocol state as a d_A x d_B matrix: row n is U^n |phi> / sqrt(d_A)
    // in the eigenbasis. Tracing out B contracts the row index pairs.
    Eigen::MatrixXcd state(d_A, d_B);
    const double amp = 1.0 / std::sqrt(double(d_A));
    for (int n = 0; n < d_A; ++n) {
        for (int m = 0; m < d_B; ++m) {
            double ph = -cfg.spectrum.energies[m] * n * cfg.t0;
            state(n, m) = amp * cfg.profile.amplitudes[m] *
                          std::complex<double>(std::cos(ph), std::sin(ph));
        }
    }
    return state * state.adjoint();
}

double purity_direct(const ProtocolConfig& cfg, std::size_t memory_cap) {
    Eigen::MatrixXcd rho = reduced_density_direct(cfg, memory_cap);
    return rho.squaredNorm();  // Tr(rho^2) for Hermitian rho
}

double purity_from_gram(const GramMatrix& g) {
    g.validate();
    double d = static_cast<double>(g.d_A);
    return g.entries.squaredNorm() / (d * d);
}

double eta2(const GramMatrix& g) {
    g.validate();
    return g.entries.squaredNorm() / g.d_A - 1.0;
}

double higher_purity(const GramMatrix& g, int alpha) {
    require(alpha >= 2, errc::invalid_parameter, "alpha must be >= 2");
    g.validate();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.entries, Eigen::EigenvaluesOnly);
    double acc = 0.0;
    for (int k = 0; k < g.d_A; ++k) {
        double r = es.eigenvalues()(k);
        require(r >= -1e-10, errc::malformed_input, "Gram eigenvalue below -1e-10");
        if (r < 0.0) r = 0.0;
        acc += std::pow(r, alpha);
    }
    return acc / std::pow(double(g.d_A), alpha);
}

double haar_scrambler_purity(int d_A, int d_B, std::uint64_t rng_seed,
                             std::size_t memory_cap) {
    require(d_A >= 1 && d_B >= 1, errc::invalid_dimension, "dimensions must be >= 1");
    const std::size_t d = std::size_t(d_A) * std::size_t(d_B);
    require(d * d <= memory_cap, errc::resource_limit,
            "Haar unitary of size (d_A d_B)^2 exceeds the memory cap");
    auto rng = make_rng(rng_seed);
    Eigen::MatrixXcd U = haar_unitary(static_cast<int>(d), rng);
    // Scrambled product state |0>_A |0>_B, reshaped to d_A x d_B.
    Eigen::MatrixXcd state = Eigen::Map<Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                                      Eigen::Dynamic, Eigen::RowMajor>>(
        U.col(0).data(), d_A, d_B);
    Eigen::MatrixXcd rho = state * state.adjoint();
    return rho.squaredNorm();
}

double thermal_scrambler_purity(int d_A, double beta, double c) {
    require(d_A >= 1, errc::invalid_dimension, "d_A must be >= 1");
    require(c > 0.0, errc::invalid_parameter, "c must be positive");
    require(beta >= 0.0, errc::invalid_parameter, "beta must be non-negative");
    require(c * beta * beta < 1.0, errc::out_of_regime,
            "c beta^2 >= 1: purity would not decay");
    return std::pow(double(d_A), -1.0 + c * beta * beta);
}

double mixed_state_purity(const Spectrum& s, double t0, int d_A) {
    s.validate();
    require(t0 > 0.0, errc::invalid_parameter, "t0 must be positive");
    require(d_A >= 1, errc::invalid_dimension, "d_A must be >= 1");
    double acc = 0.0;
    for (int tau = 1; tau < d_A; ++tau)
        acc += (1.0 - double(tau) / d_A) * sff(s, tau * t0);
    return 1.0 / d_A + (2.0 / d_A) * acc;
}

PurityReport purity_report(const ProtocolConfig& cfg, const std::vector<int>& alphas,
                           std::size_t memory_cap) {
    cfg.validate();
    PurityReport rep;
    GramMatrix g = krylov_gram(cfg.spectrum, cfg.profile, cfg.t0, cfg.d_A);
    rep.purity_formula = purity_from_return_prob(cfg);
    rep.purity_direct = purity_direct(cfg, memory_cap);
    rep.purity_gram = purity_from_gram(g);
    rep.eta2 = eta2(g);
    for (int a : alphas) rep.higher_purities[a] = higher_purity(g, a);
    rep.max_discrepancy =
        std::max({std::abs(rep.purity_formula - rep.purity_direct),
                  std::abs(rep.purity_formula - rep.purity_gram),
                  std::abs(rep.purity_direct - rep.purity_gram)});
    const double lo = 1.0 / cfg.d_A - 1e-10, hi = 1.0 + 1e-10;
    for (double p : {rep.purity_formula, rep.purity_direct, rep.purity_gram})
        require(p >= lo && p <= hi, errc::invariant_violation,
                "purity outside [1/d_A, 1]");
    require(rep.eta2 >= -1e-10, errc::invariant_violation, "eta2 below -1e-10");
    require(rep.max_discrepancy < 1e-8, errc::invariant_violation,
            "purity routes disagree beyond 1e-8");
    return rep;
}

}  // namespace ergent
