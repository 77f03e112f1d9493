#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace ergent {

// splitmix64 finalizer; good avalanche, cheap, stable across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic per-stream seed derivation: hash(base_seed, index).
// Used to hand independent seeds to parallel realizations.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base ^ splitmix64(index));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

// iid standard complex Gaussians (unit variance per real component).
inline Eigen::VectorXcd complex_gaussian_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) {
        double re = gauss(rng);
        double im = gauss(rng);
        v(i) = std::complex<double>(re, im);
    }
    return v;
}

inline Eigen::MatrixXcd complex_gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::MatrixXcd m(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            double re = gauss(rng);
            double im = gauss(rng);
            m(i, j) = std::complex<double>(re, im);
        }
    }
    return m;
}

// Haar-distributed unitary: QR of a complex Ginibre matrix with the
// R-diagonal phase fixed so the distribution is exactly Haar.
inline Eigen::MatrixXcd haar_unitary(int n, std::mt19937_64& rng) {
    Eigen::MatrixXcd A = complex_gaussian_matrix(n, n, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
    Eigen::MatrixXcd Q = qr.householderQ();
    Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        std::complex<double> r = R(j, j);
        double mag = std::abs(r);
        Q.col(j) *= (mag > 0.0 ? r / mag : std::complex<double>(1.0, 0.0));
    }
    return Q;
}

}  // namespace ergent
