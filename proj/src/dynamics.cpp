#include "ergent/dynamics.hpp"

#include <cmath>

#include "ergent/errors.hpp"

namespace ergent {

namespace {

void check_pairing(const Spectrum& s, const StateProfile& phi) {
    require(s.d_B() == phi.d_B(), errc::pairing_mismatch,
            "profile length does not match spectrum dimension");
}

}  // namespace

void GramMatrix::validate(bool spectral) const {
    require(d_A >= 1 && entries.rows() == d_A && entries.cols() == d_A,
            errc::malformed_input, "Gram matrix has inconsistent dimensions");
    require((entries - entries.adjoint()).cwiseAbs().maxCoeff() <= 1e-12,
            errc::malformed_input, "Gram matrix is not Hermitian within 1e-12");
    for (int j = 0; j < d_A; ++j)
        require(std::abs(entries(j, j) - 1.0) <= 1e-12, errc::malformed_input,
                "Gram diagonal deviates from 1 beyond 1e-12");
    if (toeplitz) {
        for (int j = 0; j + 1 < d_A; ++j)
            for (int k = 0; k + 1 < d_A; ++k)
                require(std::abs(entries(j, k) - entries(j + 1, k + 1)) <= 1e-12,
                        errc::malformed_input, "Gram matrix is not Toeplitz");
    }
    if (spectral) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries, Eigen::EigenvaluesOnly);
        require(es.eigenvalues().minCoeff() >= -1e-10, errc::malformed_input,
                "Gram matrix has an eigenvalue below -1e-10");
    }
}

std::complex<double> return_amplitude(const Spectrum& s, const StateProfile& phi, double t) {
    check_pairing(s, phi);
    double re = 0.0, im = 0.0;
    for (std::size_t n = 0; n < s.energies.size(); ++n) {
        double w = std::norm(phi.amplitudes[n]);
        double ph = s.energies[n] * t;
        re += w * std::cos(ph);
        im -= w * std::sin(ph);
    }
    return {re, im};
}

double return_probability(const Spectrum& s, const StateProfile& phi, double t) {
    return std::norm(return_amplitude(s, phi, t));
}

ReturnSeries return_series(const Spectrum& s, const StateProfile& phi,
                           const std::vector<double>& times) {
    ReturnSeries out;
    out.times = times;
    out.amplitudes.reserve(times.size());
    out.probabilities.reserve(times.size());
    for (double t : times) {
        auto a = return_amplitude(s, phi, t);
        out.amplitudes.push_back(a);
        out.probabilities.push_back(std::norm(a));
    }
    return out;
}

double sff(const Spectrum& s, double t) {
    s.validate();
    double re = 0.0, im = 0.0;
    for (double e : s.energies) {
        double ph = e * t;
        re += std::cos(ph);
        im -= std::sin(ph);
    }
    double d = static_cast<double>(s.d_B());
    return (re * re + im * im) / (d * d);
}

GramMatrix krylov_gram(const Spectrum& s, const StateProfile& phi, double t0, int d_A) {
    check_pairing(s, phi);
    require(t0 > 0.0, errc::invalid_parameter, "t0 must be positive");
    require(d_A >= 1, errc::invalid_dimension, "d_A must be >= 1");
    // d_A amplitude evaluations fill the whole Toeplitz matrix:
    // G_jk = a((k - j) t0), and a(-t) = conj(a(t)).
    std::vector<std::complex<double>> a(d_A);
    a[0] = 1.0;  // normalized profile
    for (int tau = 1; tau < d_A; ++tau) a[tau] = return_amplitude(s, phi, tau * t0);
    GramMatrix g;
    g.entries.resize(d_A, d_A);
    g.t0 = t0;
    g.d_A = d_A;
    g.toeplitz = true;
    for (int j = 0; j < d_A; ++j) {
        g.entries(j, j) = 1.0;
        for (int k = j + 1; k < d_A; ++k) {
            g.entries(j, k) = a[k - j];
            g.entries(k, j) = std::conj(a[k - j]);
        }
    }
    return g;
}

std::vector<Eigen::VectorXcd> krylov_vectors(const Spectrum& s, const StateProfile& phi,
                                             double t0, int d_A) {
    check_pairing(s, phi);
    require(t0 > 0.0, errc::invalid_parameter, "t0 must be positive");
    require(d_A >= 1, errc::invalid_dimension, "d_A must be >= 1");
    const int d_B = s.d_B();
    std::vector<Eigen::VectorXcd> vs(d_A, Eigen::VectorXcd(d_B));
    for (int n = 0; n < d_A; ++n) {
        for (int m = 0; m < d_B; ++m) {
            double ph = -s.energies[m] * n * t0;
            vs[n](m) = phi.amplitudes[m] * std::complex<double>(std::cos(ph), std::sin(ph));
        }
    }
    return vs;
}

double default_t0(const Spectrum& s, int d_A) {
    require(d_A >= 1, errc::invalid_dimension, "d_A must be >= 1");
    return heisenberg_time(s) / (10.0 * d_A);
}

}  // namespace ergent
